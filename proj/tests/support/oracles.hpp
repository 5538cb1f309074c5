#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the library's graph or numeric algorithms.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netid/model.hpp"

namespace netid::oracle {

inline std::string fixture_path(const std::string& name) {
    return std::string(NETID_FIXTURE_DIR) + "/" + name;
}

inline NetworkModel load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

/// adjacency[v] = successors of v, 0-based, built straight from the edge list.
inline std::vector<std::vector<int>> adjacency(const NetworkModel& m) {
    std::vector<std::vector<int>> adj(m.vertex_count());
    for (const Edge& e : m.edges()) adj[e.from - 1].push_back(e.to - 1);
    return adj;
}

/// reach[a][b]: recursive DFS, path of length >= 1 from a to b.
inline std::vector<std::vector<bool>> reach(const NetworkModel& m) {
    auto adj = adjacency(m);
    const int n = m.vertex_count();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::function<void(int)> visit = [&](int v) {
            for (int w : adj[v]) {
                if (!r[s][w]) {
                    r[s][w] = true;
                    visit(w);
                }
            }
        };
        visit(s);
    }
    return r;
}

/// Structural rank by trying every injective assignment of rows to columns.
inline int sprank(const std::vector<std::vector<bool>>& nz) {
    const int rows = static_cast<int>(nz.size());
    const int cols = rows ? static_cast<int>(nz[0].size()) : 0;
    std::vector<bool> used(cols, false);
    int best = 0;
    std::function<void(int, int)> go = [&](int r, int count) {
        if (count + (rows - r) <= best) return;
        if (r == rows) {
            best = std::max(best, count);
            return;
        }
        go(r + 1, count);
        for (int c = 0; c < cols; ++c) {
            if (nz[r][c] && !used[c]) {
                used[c] = true;
                go(r + 1, count + 1);
                used[c] = false;
            }
        }
    };
    go(0, 0);
    return best;
}

/// Maximum number of vertex-disjoint source->target paths by exhaustive
/// search: repeatedly pick a simple path from an unused source to the first
/// target it meets, over all choices.
inline int disjoint_paths(const NetworkModel& m, const VertexSet& sources, const VertexSet& targets) {
    auto adj = adjacency(m);
    const int n = m.vertex_count();
    std::vector<bool> used(n, false);
    std::vector<int> src;
    for (Vertex s : sources) src.push_back(s - 1);
    auto is_target = [&](int v) { return targets.contains(v + 1); };

    int best = 0;
    std::function<void(std::size_t, int)> choose;
    // Extend a path currently at v; when it hits a target, recurse on the
    // next source.
    std::function<void(int, std::size_t, int)> walk = [&](int v, std::size_t next_src, int count) {
        if (is_target(v)) {
            choose(next_src, count + 1);
            return;
        }
        for (int w : adj[v]) {
            if (used[w]) continue;
            used[w] = true;
            walk(w, next_src, count);
            used[w] = false;
        }
    };
    choose = [&](std::size_t k, int count) {
        best = std::max(best, count);
        if (count + static_cast<int>(src.size() - std::min(k, src.size())) <= best) return;
        for (std::size_t i = k; i < src.size(); ++i) {
            int s = src[i];
            if (used[s]) continue;
            used[s] = true;
            walk(s, i + 1, count);
            used[s] = false;
        }
    };
    choose(0, 0);
    return best;
}

struct RandomModelSpec {
    int min_vertices = 2;
    int max_vertices = 8;
    double min_density = 0.15;
    double max_density = 0.5;
};

/// Random simple digraph with random nonempty R and C.
inline NetworkModel random_model(std::mt19937_64& rng, const RandomModelSpec& spec = {}) {
    std::uniform_int_distribution<int> size(spec.min_vertices, spec.max_vertices);
    std::uniform_real_distribution<double> dens(spec.min_density, spec.max_density);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = size(rng);
    const double p = dens(rng);
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b && coin(rng) < p) edges.push_back({a, b});
    auto pick = [&] {
        std::vector<Vertex> vs;
        while (vs.empty()) {
            for (int v = 1; v <= n; ++v)
                if (coin(rng) < 0.5) vs.push_back(v);
        }
        return VertexSet(vs);
    };
    VertexSet r = pick();
    VertexSet c = pick();
    return NetworkModel(n, std::move(edges), r, c);
}

/// Directed ring 1 -> 2 -> ... -> n -> 1.
inline NetworkModel ring(int n, VertexSet excited, VertexSet measured) {
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
    return NetworkModel(n, std::move(edges), std::move(excited), std::move(measured));
}

/// Every subset of {1..n} as a VertexSet, by bitmask.
inline VertexSet subset_from_mask(int n, std::uint32_t mask) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) vs.push_back(v + 1);
    return VertexSet(vs);
}

} // namespace netid::oracle
