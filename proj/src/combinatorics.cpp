#include "netid/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace netid {

std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_count) {
    const int left_count = static_cast<int>(adj.size());
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> match_left(left_count, -1), match_right(right_count, -1);
    std::vector<int> dist(left_count);

    auto bfs = [&] {
        std::deque<int> queue;
        bool found = false;
        for (int u = 0; u < left_count; ++u) {
            if (match_left[u] < 0) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = kInf;
            }
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                int w = match_right[v];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    };

    auto dfs = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            int w = match_right[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    while (bfs()) {
        for (int u = 0; u < left_count; ++u) {
            if (match_left[u] < 0) dfs(dfs, u);
        }
    }
    return match_left;
}

int matching_size(const std::vector<std::vector<int>>& adj, int right_count) {
    auto match = hopcroft_karp(adj, right_count);
    return static_cast<int>(std::count_if(match.begin(), match.end(), [](int v) { return v >= 0; }));
}

Matching max_matching(const BipartiteGraph& b, const VertexSet& rows, const VertexSet& cols) {
    std::vector<std::vector<int>> adj(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (b.has_edge(cols[c], rows[r])) adj[c].push_back(static_cast<int>(r));
        }
    }
    auto match = hopcroft_karp(adj, static_cast<int>(rows.size()));
    Matching out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (match[c] >= 0) out.edges.push_back({cols[c], rows[match[c]]});
    }
    return out;
}

namespace {

// Unit-capacity flow network on split vertices: v_in = 2v, v_out = 2v + 1,
// super source 2L, super sink 2L + 1.
class SplitFlow {
public:
    SplitFlow(const NetworkModel& m, const VertexSet& sources, const VertexSet& targets)
        : n_(2 * m.vertex_count() + 2), source_(n_ - 2), sink_(n_ - 1), adj_(n_) {
        for (Vertex v = 1; v <= m.vertex_count(); ++v) add_arc(in(v), out(v));
        for (const Edge& e : m.edges()) add_arc(out(e.from), in(e.to));
        for (Vertex s : sources) add_arc(source_, in(s));
        for (Vertex t : targets) add_arc(out(t), sink_);
    }

    int run() {
        int flow = 0;
        std::vector<int> parent_arc(n_);
        for (;;) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::deque<int> queue{source_};
            parent_arc[source_] = -2;
            while (!queue.empty() && parent_arc[sink_] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int a : adj_[u]) {
                    const Arc& arc = arcs_[a];
                    if (arc.cap > 0 && parent_arc[arc.to] == -1) {
                        parent_arc[arc.to] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (parent_arc[sink_] == -1) break;
            for (int v = sink_; v != source_;) {
                int a = parent_arc[v];
                arcs_[a].cap -= 1;
                arcs_[a ^ 1].cap += 1;
                v = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<Path> paths() const {
        std::vector<Path> out_paths;
        for (int a : adj_[source_]) {
            if (!forward_carries_flow(a)) continue;
            Path p;
            int node = arcs_[a].to;
            for (;;) {
                Vertex v = node / 2 + 1;
                p.push_back(v);
                int next = -1;
                for (int b : adj_[out(v)]) {
                    if (forward_carries_flow(b)) {
                        next = arcs_[b].to;
                        break;
                    }
                }
                if (next == sink_ || next < 0) break;
                node = next;
            }
            out_paths.push_back(std::move(p));
        }
        return out_paths;
    }

private:
    struct Arc {
        int to;
        int cap;
    };

    static int in(Vertex v) { return 2 * (v - 1); }
    static int out(Vertex v) { return 2 * (v - 1) + 1; }

    void add_arc(int from, int to) {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, 1});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    // Forward arcs have even ids; flow 1 means residual capacity dropped to 0.
    bool forward_carries_flow(int a) const { return (a % 2 == 0) && arcs_[a].cap == 0; }

    int n_;
    int source_;
    int sink_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
};

} // namespace

std::vector<Path> vertex_disjoint_paths(const NetworkModel& m, const VertexSet& sources,
                                        const VertexSet& targets) {
    SplitFlow flow(m, sources, targets);
    flow.run();
    std::vector<Path> paths = flow.paths();
    for (Path& p : paths) {
        // Sub-paths of disjoint paths stay disjoint.
        std::size_t first = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (sources.contains(p[k])) first = k;
        }
        std::size_t last = first;
        while (!targets.contains(p[last])) ++last;
        p = Path(p.begin() + static_cast<std::ptrdiff_t>(first),
                 p.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

int max_vertex_disjoint_paths(const NetworkModel& m, const VertexSet& sources,
                              const VertexSet& targets) {
    SplitFlow flow(m, sources, targets);
    return flow.run();
}

std::vector<VertexSet> subsets_of_size(const VertexSet& set, std::size_t k) {
    std::vector<VertexSet> out;
    const std::size_t n = set.size();
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<Vertex> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = set[idx[i]];
        out.emplace_back(std::move(pick));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace netid
