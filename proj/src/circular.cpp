#include "netid/circular.hpp"

#include <algorithm>
#include <cmath>

#include "netid/numeric.hpp"

namespace netid {

const char* to_string(CircularCondition c) {
    switch (c) {
    case CircularCondition::SingleExcitedMeasured: return "SingleExcitedMeasured";
    case CircularCondition::SingleMeasuredExcited: return "SingleMeasuredExcited";
    case CircularCondition::TwoDisjointPaths: return "TwoDisjointPaths";
    case CircularCondition::CoverFailed: return "CoverFailed";
    case CircularCondition::CaseFailed: return "CaseFailed";
    }
    return "?";
}

int CircleDescriptor::position(Vertex v) const {
    auto it = std::find(ring.begin(), ring.end(), v);
    if (it == ring.end()) throw std::out_of_range("vertex " + std::to_string(v) + " not on ring");
    return static_cast<int>(it - ring.begin());
}

Vertex CircleDescriptor::successor(Vertex v) const {
    return ring[static_cast<std::size_t>((position(v) + 1) % size())];
}

NetworkModel CircleDescriptor::to_model() const {
    std::vector<Edge> edges;
    for (int u = 0; u < size(); ++u) {
        edges.push_back({ring[u], ring[(u + 1) % size()]});
    }
    return NetworkModel(size(), std::move(edges), excited, measured);
}

CircleDescriptor detect_circle(const NetworkModel& m) {
    const int n = m.vertex_count();
    if (n < 2) throw NotACircle("a directed cycle needs at least two vertices");
    if (static_cast<int>(m.edge_count()) != n) {
        throw NotACircle("a cycle on " + std::to_string(n) + " vertices has " + std::to_string(n) +
                         " edges, found " + std::to_string(m.edge_count()));
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (m.in_neighbours(v).size() != 1 || m.out_neighbours(v).size() != 1) {
            throw NotACircle("vertex " + std::to_string(v) + " has in-degree " +
                             std::to_string(m.in_neighbours(v).size()) + " and out-degree " +
                             std::to_string(m.out_neighbours(v).size()));
        }
    }
    CircleDescriptor d{{}, m.excited(), m.measured()};
    Vertex v = 1;
    do {
        d.ring.push_back(v);
        v = m.out_neighbours(v)[0];
    } while (v != 1 && static_cast<int>(d.ring.size()) <= n);
    if (static_cast<int>(d.ring.size()) != n) {
        throw NotACircle("graph splits into several cycles");
    }
    return d;
}

CircularVerdict circular_identifiable(const CircleDescriptor& d) {
    CircularVerdict v;
    std::vector<Vertex> uncovered;
    for (Vertex x : d.ring) {
        if (!d.excited.contains(x) && !d.measured.contains(x)) uncovered.push_back(x);
    }
    if (!uncovered.empty()) {
        v.condition = CircularCondition::CoverFailed;
        v.vertices = VertexSet(uncovered);
        return v;
    }
    if (d.excited.size() == 1) {
        if (d.measured.contains(d.excited[0])) {
            v.identifiable = true;
            v.condition = CircularCondition::SingleExcitedMeasured;
        } else {
            v.condition = CircularCondition::CaseFailed;
        }
        v.vertices = d.excited;
        return v;
    }
    if (d.measured.size() == 1) {
        if (d.excited.contains(d.measured[0])) {
            v.identifiable = true;
            v.condition = CircularCondition::SingleMeasuredExcited;
        } else {
            v.condition = CircularCondition::CaseFailed;
        }
        v.vertices = d.measured;
        return v;
    }
    // Cover holds with |R| + |C| >= L >= 2, so here |R|, |C| >= 2.
    auto paths = vertex_disjoint_paths(d.to_model(), d.excited, d.measured);
    if (paths.size() >= 2) {
        v.identifiable = true;
        v.condition = CircularCondition::TwoDisjointPaths;
        paths.resize(2);
    } else {
        v.condition = CircularCondition::CaseFailed;
    }
    v.paths = std::move(paths);
    return v;
}

namespace {

class EntryReader {
public:
    EntryReader(const CircleDescriptor& d, const Matrix& t, double tolerance)
        : d_(d), t_(t), floor_(tolerance * t.max_abs()) {}

    double operator()(Vertex row, Vertex col) const {
        return t_(static_cast<std::size_t>(d_.measured.index_of(row)),
                  static_cast<std::size_t>(d_.excited.index_of(col)));
    }

    double divisor(Vertex row, Vertex col) const {
        double v = (*this)(row, col);
        if (!(std::abs(v) > floor_)) {
            throw DegenerateInstance("T(" + std::to_string(row) + "," + std::to_string(col) +
                                     ") is numerically zero");
        }
        return v;
    }

private:
    const CircleDescriptor& d_;
    const Matrix& t_;
    double floor_;
};

} // namespace

RecoveredModules recover_circle_modules(const CircleDescriptor& d, const Matrix& t_cr,
                                        double tolerance) {
    if (!circular_identifiable(d).identifiable) {
        throw std::invalid_argument("module recovery requires an identifiable circle");
    }
    if (t_cr.rows() != d.measured.size() || t_cr.cols() != d.excited.size()) {
        throw std::invalid_argument("T_{C,R} has shape " + std::to_string(t_cr.rows()) + "x" +
                                    std::to_string(t_cr.cols()) + ", expected " +
                                    std::to_string(d.measured.size()) + "x" +
                                    std::to_string(d.excited.size()));
    }
    const int n = d.size();
    EntryReader T(d, t_cr, tolerance);
    RecoveredModules out;

    // Loop gain from T_{j,a} T_{k,i} / (T_{k,a} T_{j,i}) with excited a, i and
    // measured k, j met in the order a <= k < i <= j when walking the ring
    // from a.
    bool found = false;
    for (Vertex a : d.excited) {
        auto offset = [&](Vertex v) { return (d.position(v) - d.position(a) + n) % n; };
        for (Vertex k : d.measured) {
            for (Vertex i : d.excited) {
                for (Vertex j : d.measured) {
                    if (!(offset(k) < offset(i) && offset(i) <= offset(j))) continue;
                    out.loop_gain = T(j, a) * T(k, i) / (T.divisor(k, a) * T.divisor(j, i));
                    out.loop_vertices = {a, k, i, j};
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) break;
    }
    if (!found) {
        // Single-signal cases: T_vv = 1 / (1 - phi) for v excited and measured.
        VertexSet both = d.excited.intersected(d.measured);
        if (both.empty()) throw std::invalid_argument("no entries determine the loop gain");
        out.loop_gain = 1.0 - 1.0 / T.divisor(both[0], both[0]);
    }
    const double phi = out.loop_gain;

    out.gains.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        const Vertex a = d.ring[u];
        const Vertex b = d.ring[(u + 1) % n];
        const bool a_meas = d.measured.contains(a);
        const bool b_meas = d.measured.contains(b);
        const bool a_exc = d.excited.contains(a);
        const bool b_exc = d.excited.contains(b);
        double g = 0.0;
        if (a_meas && b_meas) {
            // T_{b,s} / T_{a,s} for an excited s != b.
            auto s = std::find_if(d.excited.begin(), d.excited.end(), [&](Vertex x) { return x != b; });
            if (s != d.excited.end()) {
                g = T(b, *s) / T.divisor(a, *s);
            } else {
                g = phi * T(b, b) / T.divisor(a, b);
            }
        } else if (a_exc && b_meas) {
            g = (1.0 - phi) * T(b, a);
        } else if (a_exc && b_exc) {
            // T_{m,a} / T_{m,b} for a measured m != a.
            auto mm = std::find_if(d.measured.begin(), d.measured.end(), [&](Vertex x) { return x != a; });
            if (mm != d.measured.end()) {
                g = T(*mm, a) / T.divisor(*mm, b);
            } else {
                g = phi * T(a, a) / T.divisor(a, b);
            }
        } else {
            // a measured, b excited.
            g = phi / ((1.0 - phi) * T.divisor(a, b));
        }
        out.gains[static_cast<std::size_t>(u)] = g;
    }
    return out;
}

RecoveryCheck check_recovery(const CircleDescriptor& d, std::uint64_t seed) {
    const NetworkModel model = d.to_model();
    const StructuralPattern pattern = structural_pattern(model);
    constexpr int kAttempts = 8;
    for (int attempt = 0;; ++attempt) {
        RecoveryCheck out;
        out.seed = attempt == 0 ? seed : trial_seed(seed, attempt);
        NumericInstance inst = instantiate(model, pattern, out.seed);
        try {
            out.recovered = recover_circle_modules(d, inst.block(d.measured, d.excited));
        } catch (const DegenerateInstance&) {
            if (attempt + 1 == kAttempts) throw;
            continue;
        }
        out.expected_loop_gain = 1.0;
        for (int u = 0; u < d.size(); ++u) {
            const double g = inst.module(d.ring[u], d.ring[(u + 1) % d.size()]);
            out.expected.push_back(g);
            out.expected_loop_gain *= g;
            const double err = std::abs(out.recovered.gains[u] - g) / std::abs(g);
            out.max_relative_error = std::max(out.max_relative_error, err);
        }
        out.loop_gain_relative_error = std::abs(out.recovered.loop_gain - out.expected_loop_gain) /
                                       std::abs(out.expected_loop_gain);
        return out;
    }
}

} // namespace netid
