#include "netid/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <utility>

#include "netid/combinatorics.hpp"

namespace netid {

namespace {

constexpr double kConditionLimit = 1e6;
constexpr double kResidualLimit = 1e-10;
constexpr double kStructuralZero = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> positions(const VertexSet& vs) {
    std::vector<std::size_t> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(static_cast<std::size_t>(v - 1));
    return out;
}

// Collatz-Wielandt upper bound on the spectral radius of a nonnegative
// matrix: max_i (A x)_i / x_i for any positive x. x comes from a few power
// steps on A + I so it approximates the Perron vector.
double spectral_radius_bound(const Matrix& g) {
    const std::size_t n = g.rows();
    std::vector<double> x(n, 1.0), y(n);
    for (int iter = 0; iter < 64; ++iter) {
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double s = x[r];
            for (std::size_t c = 0; c < n; ++c) s += std::abs(g(r, c)) * x[c];
            y[r] = s;
            norm = std::max(norm, s);
        }
        for (std::size_t r = 0; r < n; ++r) x[r] = std::max(y[r] / norm, 1e-300);
    }
    double bound = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) s += std::abs(g(r, c)) * x[c];
        bound = std::max(bound, s / x[r]);
    }
    return bound;
}

// Returns false when the inverse is unusable: singular, ill-conditioned, a
// poor residual, or structural constants that did not come out (near)
// exact. Those are then snapped to 0 or 1.
bool try_invert(const Matrix& g, const StructuralPattern& s, Matrix& t) {
    const std::size_t n = g.rows();
    Matrix a = Matrix::identity(n) - g;
    auto inv = inverse(a);
    if (!inv) return false;
    t = std::move(*inv);
    if (!std::isfinite(t.max_abs())) return false;
    if (a.inf_norm() * t.inf_norm() > kConditionLimit) return false;
    Matrix residual = a * t - Matrix::identity(n);
    if (residual.frobenius_norm() / std::sqrt(static_cast<double>(n)) > kResidualLimit) return false;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const EntryClass cls = s.at(static_cast<Vertex>(r + 1), static_cast<Vertex>(c + 1));
            if (cls == EntryClass::Zero) {
                if (std::abs(t(r, c)) >= kStructuralZero) return false;
                t(r, c) = 0.0;
            } else if (cls == EntryClass::ConstantOne) {
                if (std::abs(t(r, c) - 1.0) >= kStructuralZero) return false;
                t(r, c) = 1.0;
            }
        }
    }
    return true;
}

} // namespace

Matrix NumericInstance::block(const VertexSet& rows, const VertexSet& cols) const {
    auto r = positions(rows);
    auto c = positions(cols);
    return t.select(r, c);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

NumericInstance instantiate(const NetworkModel& m, std::uint64_t seed) {
    return instantiate(m, structural_pattern(m), seed);
}

NumericInstance instantiate(const NetworkModel& m, const StructuralPattern& s,
                            std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(m.vertex_count());
    NumericInstance inst;
    inst.seed = seed;
    inst.g = Matrix(n, n);
    std::mt19937_64 rng(seed);
    for (const Edge& e : m.edges()) {
        inst.g(e.to - 1, e.from - 1) = kGainLow + (kGainHigh - kGainLow) * unit_uniform(rng);
    }

    for (int attempt = 0; attempt <= kMaxRescales; ++attempt) {
        if (try_invert(inst.g, s, inst.t)) return inst;
        if (attempt == kMaxRescales) break;
        const double bound = spectral_radius_bound(inst.g);
        const double factor = bound > 0.0 ? 1.0 / (2.0 * bound) : 0.5;
        for (std::size_t r = 0; r < n; ++r)
            for (double& v : inst.g.row(r)) v *= factor;
        ++inst.rescales;
    }
    throw InstantiationError("could not obtain a well-conditioned I - G after " +
                             std::to_string(kMaxRescales) + " rescales (seed " +
                             std::to_string(seed) + ")");
}

RankReport numeric_rank(const Matrix& a, double tolerance) {
    RankReport rep;
    rep.gap = std::numeric_limits<double>::infinity();
    if (a.empty()) return rep;
    auto sv = singular_values(a);
    const double cutoff = tolerance * sv.front();
    int rank = 0;
    while (rank < static_cast<int>(sv.size()) && sv[rank] > cutoff && sv[rank] > 0.0) ++rank;
    rep.rank = rank;
    if (rank > 0 && rank < static_cast<int>(sv.size()) && sv[rank] > 0.0) {
        rep.gap = sv[rank - 1] / sv[rank];
    }
    return rep;
}

TrialSet::TrialSet(const NetworkModel& m, const StructuralPattern& s, int trials,
                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    instances_.reserve(static_cast<std::size_t>(trials));
    for (int k = 0; k < trials; ++k) instances_.push_back(instantiate(m, s, trial_seed(seed, k)));
}

RankReport TrialSet::rank(const VertexSet& rows, const VertexSet& cols, double tolerance) const {
    RankReport best;
    best.rank = -1;
    best.trials = size();
    for (const NumericInstance& inst : instances_) {
        RankReport r = numeric_rank(inst.block(rows, cols), tolerance);
        if (r.rank > best.rank) {
            best.rank = r.rank;
            best.gap = r.gap;
        } else if (r.rank == best.rank) {
            best.gap = std::min(best.gap, r.gap);
        }
    }
    return best;
}

RankReport generic_rank(const NetworkModel& m, const VertexSet& rows, const VertexSet& cols,
                        int trials, std::uint64_t seed, double tolerance) {
    TrialSet set(m, structural_pattern(m), trials, seed);
    return set.rank(rows, cols, tolerance);
}

namespace {

// Bitmask key of a (row subset, col subset) pair over positions in C and R.
using SubsetKey = std::pair<std::uint64_t, std::uint64_t>;

std::uint64_t mask_of(const std::vector<int>& pos) {
    std::uint64_t m = 0;
    for (int p : pos) m |= std::uint64_t{1} << p;
    return m;
}

std::vector<std::vector<int>> position_subsets(int n, int k) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<std::vector<int>> out;
    for (const VertexSet& s : subsets_of_size(VertexSet(all), static_cast<std::size_t>(k))) {
        out.push_back(s.items());
    }
    return out;
}

} // namespace

EliminationResult algorithm1_eliminate(const NetworkModel& m, const StructuralPattern& s,
                                       const TrialSet& trials, const NumericOptions& opts) {
    const VertexSet& rows_all = m.measured();
    const VertexSet& cols_all = m.excited();
    const int nr = static_cast<int>(rows_all.size());
    const int nc = static_cast<int>(cols_all.size());

    EliminationResult result;
    result.initial = function_set(m, s);
    result.reduced = result.initial;

    const int full = std::min(nr, nc);
    int limit = full;
    if (opts.max_subset > 0 && opts.max_subset < full) limit = opts.max_subset;
    result.searched_size = std::max(limit, 0);
    result.truncated = limit < full;
    if (limit < 2) return result;

    // Sparsified copies of T_{C,R}, one per trial, plus the live nonzero
    // pattern used for the structural rank.
    std::vector<Matrix> sparse;
    for (const NumericInstance& inst : trials.instances()) {
        sparse.push_back(inst.block(rows_all, cols_all));
    }
    std::vector<std::vector<bool>> nonzero(nr, std::vector<bool>(nc));
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) nonzero[r][c] = s.nonzero(rows_all[r], cols_all[c]);

    std::vector<std::vector<std::vector<int>>> row_subsets(limit + 1), col_subsets(limit + 1);
    for (int k = 2; k <= limit; ++k) {
        row_subsets[k] = position_subsets(nr, k);
        col_subsets[k] = position_subsets(nc, k);
    }

    // Subsets already shown not to satisfy the rank test; only a removal
    // inside a subset can change its verdict.
    const bool use_memo = nr <= 64 && nc <= 64;
    std::set<SubsetKey> settled;

    auto structural_rank = [&](const std::vector<int>& rp, const std::vector<int>& cp) {
        std::vector<std::vector<int>> adj(cp.size());
        for (std::size_t c = 0; c < cp.size(); ++c)
            for (std::size_t r = 0; r < rp.size(); ++r)
                if (nonzero[rp[r]][cp[c]]) adj[c].push_back(static_cast<int>(r));
        return matching_size(adj, static_cast<int>(rp.size()));
    };

    std::vector<std::size_t> rsel, csel;
    for (;;) {
        bool removed = false;
        for (int k = 2; k <= limit && !removed; ++k) {
            for (const auto& rp : row_subsets[k]) {
                for (const auto& cp : col_subsets[k]) {
                    SubsetKey key{mask_of(rp), mask_of(cp)};
                    if (use_memo && settled.count(key)) continue;

                    if (structural_rank(rp, cp) < k) {
                        if (use_memo) settled.insert(key);
                        continue;
                    }
                    rsel.assign(rp.begin(), rp.end());
                    csel.assign(cp.begin(), cp.end());
                    int best = 0;
                    for (const Matrix& sp : sparse) {
                        best = std::max(best, numeric_rank(sp.select(rsel, csel), opts.tolerance).rank);
                        if (best == k) break;
                    }
                    if (best == k) {
                        if (use_memo) settled.insert(key);
                        continue;
                    }

                    // Smallest (row, col) of the block still in the reduced set.
                    int hit_r = -1, hit_c = -1;
                    for (int r : rp) {
                        for (int c : cp) {
                            if (result.reduced.count({rows_all[r], cols_all[c]})) {
                                hit_r = r;
                                hit_c = c;
                                break;
                            }
                        }
                        if (hit_r >= 0) break;
                    }
                    if (hit_r < 0) {
                        if (use_memo) settled.insert(key);
                        continue;
                    }

                    EntryIndex entry{rows_all[hit_r], cols_all[hit_c]};
                    result.reduced.erase(entry);
                    nonzero[hit_r][hit_c] = false;
                    for (Matrix& sp : sparse) sp(static_cast<std::size_t>(hit_r), static_cast<std::size_t>(hit_c)) = 0.0;
                    const std::uint64_t rb = std::uint64_t{1} << hit_r;
                    const std::uint64_t cb = std::uint64_t{1} << hit_c;
                    for (auto it = settled.begin(); it != settled.end();) {
                        if ((it->first & rb) && (it->second & cb)) it = settled.erase(it);
                        else ++it;
                    }

                    std::vector<Vertex> rv, cv;
                    for (int r : rp) rv.push_back(rows_all[r]);
                    for (int c : cp) cv.push_back(cols_all[c]);
                    result.log.push_back({entry, VertexSet(rv), VertexSet(cv), best});
                    removed = true;
                    break;
                }
                if (removed) break;
            }
        }
        if (!removed) break;
    }
    return result;
}

EliminationResult algorithm1_eliminate(const NetworkModel& m, const NumericOptions& opts) {
    StructuralPattern s = structural_pattern(m);
    TrialSet trials(m, s, opts.trials, opts.seed);
    return algorithm1_eliminate(m, s, trials, opts);
}

EliminationResult algorithm1_eliminate(const NetworkModel& m, int trials, std::uint64_t seed,
                                       int max_subset) {
    NumericOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.max_subset = max_subset;
    return algorithm1_eliminate(m, opts);
}

} // namespace netid
