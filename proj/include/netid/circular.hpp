#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netid/combinatorics.hpp"
#include "netid/dense.hpp"
#include "netid/model.hpp"

namespace netid {

class NotACircle : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A T entry needed as a divisor was numerically zero; resample and retry.
class DegenerateInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A network that is exactly one directed cycle v_1 -> v_2 -> ... -> v_L -> v_1.
struct CircleDescriptor {
    std::vector<Vertex> ring;  ///< starts at vertex 1
    VertexSet excited;
    VertexSet measured;

    int size() const { return static_cast<int>(ring.size()); }
    /// Position of v in `ring`.
    int position(Vertex v) const;
    Vertex successor(Vertex v) const;
    NetworkModel to_model() const;
};

enum class CircularCondition {
    SingleExcitedMeasured,  ///< |R| = 1 and R inside C
    SingleMeasuredExcited,  ///< |C| = 1 and C inside R
    TwoDisjointPaths,       ///< |R|, |C| >= 2 with two vertex-disjoint R -> C paths
    CoverFailed,            ///< some vertex neither excited nor measured
    CaseFailed,             ///< cover holds but no case applies
};

const char* to_string(CircularCondition c);

struct CircularVerdict {
    bool identifiable = false;
    CircularCondition condition = CircularCondition::CaseFailed;
    /// TwoDisjointPaths: the two witness paths. CaseFailed with |R|, |C| >= 2:
    /// the maximum path family (fewer than two paths).
    std::vector<Path> paths;
    /// CoverFailed: uncovered vertices. Single-signal failures: the lone
    /// excited or measured vertex.
    VertexSet vertices;
};

/// Throws NotACircle unless the graph is a single directed cycle through all
/// vertices (L >= 2).
CircleDescriptor detect_circle(const NetworkModel& m);

CircularVerdict circular_identifiable(const CircleDescriptor& d);

struct RecoveredModules {
    /// gains[u] is the module on edge ring[u] -> ring[u+1] (cyclically).
    std::vector<double> gains;
    /// Loop gain, product of all modules.
    double loop_gain = 0.0;
    /// Vertices (a1, k, i, j) used in the four-entry loop-gain formula, or
    /// all zero when the loop gain came from a diagonal entry.
    std::array<Vertex, 4> loop_vertices{};

    double module(const CircleDescriptor& d, Vertex from) const {
        return gains[static_cast<std::size_t>(d.position(from))];
    }
};

/// Recovers every module of an identifiable circle from a numeric T_{C,R}
/// (rows ordered as d.measured, columns as d.excited). Throws
/// std::invalid_argument if the circle is not identifiable and
/// DegenerateInstance if a divisor is below `tolerance` times the largest
/// entry.
RecoveredModules recover_circle_modules(const CircleDescriptor& d, const Matrix& t_cr,
                                        double tolerance = 1e-12);

/// Instantiate -> extract T_{C,R} -> recover, compared against the drawn
/// modules. Degenerate draws are resampled with the next trial seed.
struct RecoveryCheck {
    std::uint64_t seed = 0;
    std::vector<double> expected;  ///< drawn gains, ring order
    RecoveredModules recovered;
    double expected_loop_gain = 0.0;
    double max_relative_error = 0.0;
    double loop_gain_relative_error = 0.0;
};

RecoveryCheck check_recovery(const CircleDescriptor& d, std::uint64_t seed);

} // namespace netid
