#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "netid/circular.hpp"
#include "netid/model.hpp"
#include "netid/numeric.hpp"
#include "netid/structure.hpp"

namespace netid {

enum class ConditionId {
    CoverLemma1,
    RankProp1,
    NaiveCount,
    Theorem1Count,
    Corollary1Count,
    Corollary3Count,
};

enum class Status { Violated, Satisfied, SatisfiedGenerically, Inconclusive };

const char* to_string(ConditionId id);
const char* to_string(Status s);

struct ConditionResult {
    ConditionId id = ConditionId::CoverLemma1;
    Status status = Status::Inconclusive;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    std::string notes;
};

/// One edge removal of the bipartite simplification.
struct EdgeRemovalStep {
    BipartiteEdge removed;
    VertexSet excited;   ///< R-bar
    VertexSet measured;  ///< C-bar
    int paths = 0;       ///< b_{R-bar -> C-bar}
    int matching = 0;    ///< |M(R-bar, C-bar)|
};

struct EdgeRemovalResult {
    BipartiteGraph original;
    std::set<BipartiteEdge> remaining;  ///< E_b-hat
    std::set<BipartiteEdge> examined;   ///< E_t-hat
    std::vector<EdgeRemovalStep> log;
    int searched_size = 0;
    bool truncated = false;
};

/// Edge removal on the bipartite graph of T_{C,R}. For k = 2 .. min(|R|,|C|)
/// and every (R-bar, C-bar) of size k (excited subset outer, both
/// lexicographic): when b < |M| = k and the block has an edge outside E_t,
/// the block joins E_t and its smallest remaining edge is removed. Paths and
/// matchings always refer to the original graph. max_subset <= 0 means no
/// cap.
EdgeRemovalResult algorithm2_remove_edges(const NetworkModel& m, const BipartiteGraph& b,
                                          int max_subset = 0);

ConditionResult check_cover(const NetworkModel& m);
ConditionResult check_rank_conditions(const NetworkModel& m, int trials, std::uint64_t seed,
                                      double tolerance = kDefaultRankTolerance);
ConditionResult check_rank_conditions(const NetworkModel& m, const TrialSet& trials,
                                      double tolerance = kDefaultRankTolerance);
ConditionResult check_naive_count(const NetworkModel& m);

/// Only applies when |R| <= 1 or |C| <= 1.
std::optional<ConditionResult> check_corollary1(const NetworkModel& m);

ConditionResult check_theorem1(const NetworkModel& m, int trials, std::uint64_t seed,
                               int max_subset = 0);
ConditionResult check_theorem1(const NetworkModel& m, const EliminationResult& elimination);
ConditionResult check_corollary3(const NetworkModel& m, int max_subset = 0);
ConditionResult check_corollary3(const NetworkModel& m, const EdgeRemovalResult& removal);

enum class Verdict { NotIdentifiable, NoNecessaryConditionViolated };

const char* to_string(Verdict v);

struct CircularSection {
    CircleDescriptor circle;
    CircularVerdict verdict;
};

struct AnalysisReport {
    NetworkModel model;
    NumericOptions options;
    std::vector<ConditionResult> conditions;
    std::optional<EliminationResult> algorithm1;
    std::optional<EdgeRemovalResult> algorithm2;
    Verdict verdict = Verdict::NoNecessaryConditionViolated;
    std::optional<CircularSection> circular;

    const ConditionResult* find(ConditionId id) const;
};

/// Runs every check. The verdict is NotIdentifiable iff some check is
/// Violated; single-cycle networks also carry the definitive circular
/// verdict. Throws InstantiationError on numeric failure.
AnalysisReport analyze(const NetworkModel& m, const NumericOptions& options = {});

} // namespace netid
