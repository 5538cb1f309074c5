#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netid/dense.hpp"
#include "netid/model.hpp"
#include "netid/structure.hpp"

namespace netid {

class InstantiationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One random real instantiation of every module and the resulting T.
struct NumericInstance {
    Matrix g;   ///< g(j-1, i-1) is the gain of edge (i, j)
    Matrix t;   ///< (I - g)^-1
    std::uint64_t seed = 0;
    int rescales = 0;

    double module(Vertex from, Vertex to) const { return g(to - 1, from - 1); }
    double entry(Vertex row, Vertex col) const { return t(row - 1, col - 1); }
    /// t restricted to the given rows and columns (vertex indices).
    Matrix block(const VertexSet& rows, const VertexSet& cols) const;
};

inline constexpr double kGainLow = 0.25;
inline constexpr double kGainHigh = 1.75;
inline constexpr double kDefaultRankTolerance = 1e-8;
inline constexpr int kMaxRescales = 8;

/// Seed for trial `trial` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Draws every module uniformly from [0.25, 1.75] and inverts I - g.
/// Rescales g towards a spectral radius of 1/2 while I - g is
/// ill-conditioned; throws InstantiationError after kMaxRescales attempts.
NumericInstance instantiate(const NetworkModel& m, std::uint64_t seed);
NumericInstance instantiate(const NetworkModel& m, const StructuralPattern& s,
                            std::uint64_t seed);

struct RankReport {
    int rank = 0;
    /// sigma_rank / sigma_{rank+1}; infinity when nothing was rejected.
    double gap = 0.0;
    int trials = 1;
};

RankReport numeric_rank(const Matrix& a, double tolerance = kDefaultRankTolerance);

/// A fixed batch of instantiations shared by several rank queries.
class TrialSet {
public:
    TrialSet(const NetworkModel& m, const StructuralPattern& s, int trials, std::uint64_t seed);

    int size() const { return static_cast<int>(instances_.size()); }
    const NumericInstance& operator[](int k) const { return instances_[k]; }
    const std::vector<NumericInstance>& instances() const { return instances_; }

    /// Maximum numeric rank of T_{rows,cols} over the batch. `gap` is the
    /// smallest gap among the trials attaining that rank.
    RankReport rank(const VertexSet& rows, const VertexSet& cols,
                    double tolerance = kDefaultRankTolerance) const;

private:
    std::vector<NumericInstance> instances_;
};

RankReport generic_rank(const NetworkModel& m, const VertexSet& rows, const VertexSet& cols,
                        int trials, std::uint64_t seed,
                        double tolerance = kDefaultRankTolerance);

struct NumericOptions {
    int trials = 5;
    std::uint64_t seed = 42;
    double tolerance = kDefaultRankTolerance;
    /// Largest subset size searched; 0 means min(|R|, |C|).
    int max_subset = 0;
};

/// One removal performed by the dependent-function elimination.
struct EliminationStep {
    EntryIndex removed;
    VertexSet rows;   ///< subset of C
    VertexSet cols;   ///< subset of R
    int numeric_rank = 0;
};

struct EliminationResult {
    FunctionSet initial;
    FunctionSet reduced;
    std::vector<EliminationStep> log;
    int searched_size = 0;   ///< largest subset size examined
    bool truncated = false;  ///< searched_size < min(|R|, |C|)
};

/// Iteratively removes entries of T_{C,R} whose square submatrix has full
/// structural rank but deficient numeric rank. Subsets are visited by
/// ascending size, measured subset outer, excited subset inner, both
/// lexicographic; each hit removes the smallest (row, col) still in the
/// reduced set and restarts the search.
EliminationResult algorithm1_eliminate(const NetworkModel& m, const NumericOptions& opts);
EliminationResult algorithm1_eliminate(const NetworkModel& m, const StructuralPattern& s,
                                       const TrialSet& trials, const NumericOptions& opts);

/// Convenience overload mirroring the CLI knobs.
EliminationResult algorithm1_eliminate(const NetworkModel& m, int trials, std::uint64_t seed,
                                       int max_subset);

} // namespace netid
