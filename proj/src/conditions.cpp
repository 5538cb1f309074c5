#include "netid/conditions.hpp"

#include <algorithm>

#include "netid/combinatorics.hpp"

namespace netid {

using nlohmann::ordered_json;

const char* to_string(ConditionId id) {
    switch (id) {
    case ConditionId::CoverLemma1: return "CoverLemma1";
    case ConditionId::RankProp1: return "RankProp1";
    case ConditionId::NaiveCount: return "NaiveCount";
    case ConditionId::Theorem1Count: return "Theorem1Count";
    case ConditionId::Corollary1Count: return "Corollary1Count";
    case ConditionId::Corollary3Count: return "Corollary3Count";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
    case Status::Violated: return "Violated";
    case Status::Satisfied: return "Satisfied";
    case Status::SatisfiedGenerically: return "SatisfiedGenerically";
    case Status::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(Verdict v) {
    return v == Verdict::NotIdentifiable ? "NotIdentifiable" : "NoNecessaryConditionViolated";
}

const ConditionResult* AnalysisReport::find(ConditionId id) const {
    for (const ConditionResult& c : conditions) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

namespace {

bool single_signal(const NetworkModel& m) {
    return m.excited().size() <= 1 || m.measured().size() <= 1;
}

ConditionResult count_against_edges(ConditionId id, const NetworkModel& m, std::size_t xi) {
    ConditionResult r;
    r.id = id;
    r.status = xi < m.edge_count() ? Status::Violated : Status::Satisfied;
    r.witness["function_set"] = xi;
    r.witness["edges"] = m.edge_count();
    return r;
}

} // namespace

EdgeRemovalResult algorithm2_remove_edges(const NetworkModel& m, const BipartiteGraph& b,
                                          int max_subset) {
    EdgeRemovalResult out;
    out.original = b;
    out.remaining = b.edges;

    const int full = static_cast<int>(std::min(b.excited.size(), b.measured.size()));
    int limit = full;
    if (max_subset > 0 && max_subset < full) limit = max_subset;
    out.searched_size = std::max(limit, 0);
    out.truncated = limit < full;

    for (int k = 2; k <= limit; ++k) {
        const auto r_subsets = subsets_of_size(b.excited, static_cast<std::size_t>(k));
        const auto c_subsets = subsets_of_size(b.measured, static_cast<std::size_t>(k));
        for (const VertexSet& rbar : r_subsets) {
            for (const VertexSet& cbar : c_subsets) {
                auto block = b.edges_between(rbar, cbar);
                bool fresh = std::any_of(block.begin(), block.end(), [&](const BipartiteEdge& e) {
                    return !out.examined.count(e);
                });
                if (!fresh) continue;
                const int matched = static_cast<int>(max_matching(b, cbar, rbar).size());
                if (matched != k) continue;
                const int paths = max_vertex_disjoint_paths(m, rbar, cbar);
                if (paths >= k) continue;

                out.examined.insert(block.begin(), block.end());
                // A fresh edge was never removed (removals come from E_t), so
                // some block edge is still present.
                auto victim = std::find_if(block.begin(), block.end(), [&](const BipartiteEdge& e) {
                    return out.remaining.count(e) != 0;
                });
                out.remaining.erase(*victim);
                out.log.push_back({*victim, rbar, cbar, paths, matched});
            }
        }
    }
    return out;
}

ConditionResult check_cover(const NetworkModel& m) {
    ConditionResult r;
    r.id = ConditionId::CoverLemma1;
    VertexSet covered = m.excited().united(m.measured());
    std::vector<Vertex> missing;
    for (Vertex v = 1; v <= m.vertex_count(); ++v) {
        if (!covered.contains(v)) missing.push_back(v);
    }
    r.status = missing.empty() ? Status::Satisfied : Status::Violated;
    r.witness["uncovered"] = missing;
    return r;
}

ConditionResult check_rank_conditions(const NetworkModel& m, int trials, std::uint64_t seed,
                                      double tolerance) {
    TrialSet set(m, structural_pattern(m), trials, seed);
    return check_rank_conditions(m, set, tolerance);
}

ConditionResult check_rank_conditions(const NetworkModel& m, const TrialSet& trials,
                                      double tolerance) {
    ConditionResult r;
    r.id = ConditionId::RankProp1;
    auto violations = ordered_json::array();
    auto mismatches = ordered_json::array();

    auto examine = [&](Vertex i, const char* side, const VertexSet& nbrs, int paths,
                       const VertexSet& rows, const VertexSet& cols) {
        if (nbrs.empty()) return;
        const int required = static_cast<int>(nbrs.size());
        ordered_json item;
        item["vertex"] = i;
        item["side"] = side;
        item["neighbours"] = nbrs.items();
        item["required"] = required;
        item["paths"] = paths;
        if (paths < required) {
            violations.push_back(std::move(item));
            return;
        }
        const int rank = trials.rank(rows, cols, tolerance).rank;
        if (rank != paths) {
            item["numeric_rank"] = rank;
            mismatches.push_back(std::move(item));
        }
    };

    for (Vertex i = 1; i <= m.vertex_count(); ++i) {
        const VertexSet& in = m.in_neighbours(i);
        examine(i, "in", in, max_vertex_disjoint_paths(m, m.excited(), in), in, m.excited());
        const VertexSet& out = m.out_neighbours(i);
        examine(i, "out", out, max_vertex_disjoint_paths(m, out, m.measured()), m.measured(), out);
    }

    if (!violations.empty()) {
        r.status = Status::Violated;
        r.witness["violations"] = std::move(violations);
        r.notes = "vertex-disjoint path bound below the neighbour count; rank is deficient for every parameter value";
    } else if (!mismatches.empty()) {
        r.status = Status::Inconclusive;
        r.witness["rank_mismatches"] = std::move(mismatches);
        r.notes = "path bounds hold but the numeric generic rank disagreed; increase --trials";
    } else {
        r.status = Status::SatisfiedGenerically;
        r.notes = "full rank at generic parameter values; not certified for every parameter value";
    }
    return r;
}

ConditionResult check_naive_count(const NetworkModel& m) {
    ConditionResult r = count_against_edges(ConditionId::NaiveCount, m, function_set(m).size());
    return r;
}

std::optional<ConditionResult> check_corollary1(const NetworkModel& m) {
    if (!single_signal(m)) return std::nullopt;
    return count_against_edges(ConditionId::Corollary1Count, m, function_set(m).size());
}

ConditionResult check_theorem1(const NetworkModel& m, const EliminationResult& elim) {
    ConditionResult r;
    r.id = ConditionId::Theorem1Count;
    r.status = elim.reduced.size() < m.edge_count() ? Status::Violated : Status::Satisfied;
    r.witness["reduced"] = elim.reduced.size();
    r.witness["function_set"] = elim.initial.size();
    r.witness["edges"] = m.edge_count();
    auto removed = ordered_json::array();
    for (const EliminationStep& s : elim.log) removed.push_back({s.removed.row, s.removed.col});
    r.witness["removed"] = std::move(removed);
    if (single_signal(m)) {
        r.notes = "single excited or measured vertex: no dependent entries exist, |F| compared directly";
    } else if (elim.truncated) {
        r.notes = "subset search capped at size " + std::to_string(elim.searched_size) +
                  "; a violation stays valid, a pass may be optimistic";
    }
    return r;
}

ConditionResult check_theorem1(const NetworkModel& m, int trials, std::uint64_t seed,
                               int max_subset) {
    if (single_signal(m)) {
        EliminationResult elim;
        elim.initial = function_set(m);
        elim.reduced = elim.initial;
        return check_theorem1(m, elim);
    }
    return check_theorem1(m, algorithm1_eliminate(m, trials, seed, max_subset));
}

ConditionResult check_corollary3(const NetworkModel& m, const EdgeRemovalResult& removal) {
    ConditionResult r;
    r.id = ConditionId::Corollary3Count;
    r.status = removal.remaining.size() < m.edge_count() ? Status::Violated : Status::Satisfied;
    r.witness["remaining"] = removal.remaining.size();
    r.witness["bipartite_edges"] = removal.original.edges.size();
    r.witness["edges"] = m.edge_count();
    auto removed = ordered_json::array();
    for (const EdgeRemovalStep& s : removal.log) removed.push_back({s.removed.excited, s.removed.measured});
    r.witness["removed"] = std::move(removed);
    if (removal.truncated) {
        r.notes = "subset search capped at size " + std::to_string(removal.searched_size) +
                  "; a violation stays valid, a pass may be optimistic";
    }
    return r;
}

ConditionResult check_corollary3(const NetworkModel& m, int max_subset) {
    if (single_signal(m)) {
        ConditionResult r = count_against_edges(ConditionId::Corollary3Count, m, function_set(m).size());
        r.notes = "fewer than two excited or measured vertices: defers to the |F| >= |E| count";
        return r;
    }
    return check_corollary3(m, algorithm2_remove_edges(m, bipartite_graph(m), max_subset));
}

AnalysisReport analyze(const NetworkModel& m, const NumericOptions& options) {
    AnalysisReport rep{m, options, {}, std::nullopt, std::nullopt,
                       Verdict::NoNecessaryConditionViolated, std::nullopt};
    const StructuralPattern pattern = structural_pattern(m);
    const TrialSet trials(m, pattern, options.trials, options.seed);

    rep.conditions.push_back(check_cover(m));
    rep.conditions.push_back(check_rank_conditions(m, trials, options.tolerance));
    rep.conditions.push_back(check_naive_count(m));

    if (single_signal(m)) {
        EliminationResult elim;
        elim.initial = function_set(m, pattern);
        elim.reduced = elim.initial;
        rep.conditions.push_back(check_theorem1(m, elim));
        rep.conditions.push_back(*check_corollary1(m));
        ConditionResult c3 = count_against_edges(ConditionId::Corollary3Count, m, elim.initial.size());
        c3.notes = "fewer than two excited or measured vertices: defers to the |F| >= |E| count";
        rep.conditions.push_back(std::move(c3));
    } else {
        rep.algorithm1 = algorithm1_eliminate(m, pattern, trials, options);
        rep.conditions.push_back(check_theorem1(m, *rep.algorithm1));
        rep.algorithm2 = algorithm2_remove_edges(m, bipartite_graph(m, pattern), options.max_subset);
        rep.conditions.push_back(check_corollary3(m, *rep.algorithm2));
    }

    try {
        CircleDescriptor circle = detect_circle(m);
        CircularVerdict v = circular_identifiable(circle);
        rep.circular = CircularSection{std::move(circle), std::move(v)};
    } catch (const NotACircle&) {
    }

    // The circle verdict is exact. An edge-removal count below |E| on a circle
    // proven identifiable cannot be a real violation, so it is reported but
    // not allowed to decide the verdict.
    if (rep.circular && rep.circular->verdict.identifiable) {
        for (ConditionResult& c : rep.conditions) {
            if (c.id == ConditionId::Corollary3Count && c.status == Status::Violated) {
                c.status = Status::Inconclusive;
                c.notes = "edge-removal count is below |E|, but the circle is identifiable; "
                          "larger blocks can re-count dependencies already removed in smaller ones";
            }
        }
    }

    const bool violated = std::any_of(rep.conditions.begin(), rep.conditions.end(),
                                      [](const ConditionResult& c) { return c.status == Status::Violated; });
    rep.verdict = violated ? Verdict::NotIdentifiable : Verdict::NoNecessaryConditionViolated;
    return rep;
}

} // namespace netid
