#include "netid/structure.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace netid {

const char* to_string(EntryClass c) {
    switch (c) {
    case EntryClass::Zero: return "0";
    case EntryClass::ConstantOne: return "1";
    case EntryClass::NonConstant: return "*";
    }
    return "?";
}

StructuralPattern::StructuralPattern(int size)
    : size_(size),
      cells_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size),
             EntryClass::Zero) {}

std::vector<BipartiteEdge> BipartiteGraph::edges_between(const VertexSet& cols,
                                                         const VertexSet& rows) const {
    std::vector<BipartiteEdge> out;
    for (Vertex i : cols) {
        for (Vertex j : rows) {
            if (has_edge(i, j)) out.push_back({i, j});
        }
    }
    return out;
}

std::vector<std::vector<bool>> reachability(const NetworkModel& m) {
    const int n = m.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::deque<Vertex> queue;
    for (int s = 0; s < n; ++s) {
        auto& row = reach[s];
        queue.clear();
        for (Vertex w : m.out_neighbours(s + 1)) {
            if (!row[w - 1]) {
                row[w - 1] = true;
                queue.push_back(w);
            }
        }
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : m.out_neighbours(v)) {
                if (!row[w - 1]) {
                    row[w - 1] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return reach;
}

std::vector<VertexSet> strongly_connected_components(const NetworkModel& m) {
    // Iterative Tarjan.
    const int n = m.vertex_count();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<VertexSet> comps;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = m.out_neighbours(f.v + 1).items();
            if (f.next < succ.size()) {
                int w = succ[f.next++] - 1;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            int v = f.v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w + 1);
                } while (w != v);
                comps.emplace_back(std::move(comp));
            }
        }
    }
    return comps;
}

StructuralPattern structural_pattern(const NetworkModel& m) {
    const int n = m.vertex_count();
    StructuralPattern s(n);
    auto reach = reachability(m);
    for (int from = 0; from < n; ++from) {
        for (int to = 0; to < n; ++to) {
            if (from != to && reach[from][to]) {
                s.set(to + 1, from + 1, EntryClass::NonConstant);
            }
        }
    }
    for (const VertexSet& comp : strongly_connected_components(m)) {
        // Simple graphs have no self-loops, so a cycle needs >= 2 vertices.
        EntryClass diag = comp.size() >= 2 ? EntryClass::NonConstant : EntryClass::ConstantOne;
        for (Vertex v : comp) s.set(v, v, diag);
    }
    return s;
}

FunctionSet function_set(const NetworkModel& m, const StructuralPattern& s) {
    FunctionSet f;
    for (Vertex row : m.measured()) {
        for (Vertex col : m.excited()) {
            if (s.at(row, col) == EntryClass::NonConstant) f.insert({row, col});
        }
    }
    return f;
}

FunctionSet function_set(const NetworkModel& m) {
    return function_set(m, structural_pattern(m));
}

BipartiteGraph bipartite_graph(const NetworkModel& m, const StructuralPattern& s) {
    BipartiteGraph b{m.excited(), m.measured(), {}};
    for (Vertex i : m.excited()) {
        for (Vertex j : m.measured()) {
            if (s.nonzero(j, i)) b.edges.insert({i, j});
        }
    }
    return b;
}

BipartiteGraph bipartite_graph(const NetworkModel& m) {
    return bipartite_graph(m, structural_pattern(m));
}

std::string bipartite_to_dot(const BipartiteGraph& b, const std::set<BipartiteEdge>& dashed) {
    std::ostringstream os;
    os << "graph bipartite {\n"
       << "  rankdir=LR;\n"
       << "  node [shape=circle];\n"
       << "  subgraph cluster_excited {\n"
       << "    label=\"R (excited)\";\n"
       << "    rank=same;\n";
    for (Vertex v : b.excited) os << "    r" << v << " [label=\"" << v << "\"];\n";
    os << "  }\n"
       << "  subgraph cluster_measured {\n"
       << "    label=\"C (measured)\";\n"
       << "    rank=same;\n";
    for (Vertex v : b.measured) os << "    c" << v << " [label=\"" << v << "\"];\n";
    os << "  }\n";
    for (const BipartiteEdge& e : b.edges) {
        os << "  r" << e.excited << " -- c" << e.measured;
        if (dashed.count(e)) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace netid
