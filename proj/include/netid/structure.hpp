#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netid/model.hpp"

namespace netid {

enum class EntryClass { Zero, ConstantOne, NonConstant };

const char* to_string(EntryClass c);

/// Zero / one / nonconstant classification of every entry of T = (I - G)^-1.
///
/// Entry (row j, col i) with i != j is NonConstant iff i reaches j along a
/// directed path; the diagonal entry (i, i) is NonConstant iff i lies on a
/// directed cycle, ConstantOne otherwise.
class StructuralPattern {
public:
    StructuralPattern() = default;
    explicit StructuralPattern(int size);

    int size() const { return size_; }
    EntryClass at(Vertex row, Vertex col) const {
        return cells_[static_cast<std::size_t>((row - 1) * size_ + (col - 1))];
    }
    void set(Vertex row, Vertex col, EntryClass c) {
        cells_[static_cast<std::size_t>((row - 1) * size_ + (col - 1))] = c;
    }
    bool nonzero(Vertex row, Vertex col) const { return at(row, col) != EntryClass::Zero; }

    bool operator==(const StructuralPattern&) const = default;

private:
    int size_ = 0;
    std::vector<EntryClass> cells_;
};

/// Index pair (measured row, excited column) naming the entry T_{row,col}.
struct EntryIndex {
    Vertex row = 0;
    Vertex col = 0;

    auto operator<=>(const EntryIndex&) const = default;
};

/// Nonconstant entries of T_{C,R}.
using FunctionSet = std::set<EntryIndex>;

/// Edge of the bipartite graph: excited vertex -> measured vertex.
struct BipartiteEdge {
    Vertex excited = 0;
    Vertex measured = 0;

    auto operator<=>(const BipartiteEdge&) const = default;
};

/// B = (R, C, E_b) with (i, j) in E_b iff T_{ji} != 0.
struct BipartiteGraph {
    VertexSet excited;
    VertexSet measured;
    std::set<BipartiteEdge> edges;

    bool has_edge(Vertex i, Vertex j) const { return edges.count({i, j}) != 0; }
    /// Edges restricted to cols x rows.
    std::vector<BipartiteEdge> edges_between(const VertexSet& cols,
                                             const VertexSet& rows) const;
};

/// Reachability matrix: reach[a][b] true iff a directed path of length >= 1
/// leads from a to b. 0-based indices.
std::vector<std::vector<bool>> reachability(const NetworkModel& m);

/// Strongly connected components in Tarjan order; each component sorted.
std::vector<VertexSet> strongly_connected_components(const NetworkModel& m);

StructuralPattern structural_pattern(const NetworkModel& m);

FunctionSet function_set(const NetworkModel& m);
FunctionSet function_set(const NetworkModel& m, const StructuralPattern& s);

BipartiteGraph bipartite_graph(const NetworkModel& m);
BipartiteGraph bipartite_graph(const NetworkModel& m, const StructuralPattern& s);

/// Graphviz rendering. Edges listed in `dashed` are drawn dashed.
std::string bipartite_to_dot(const BipartiteGraph& b,
                             const std::set<BipartiteEdge>& dashed = {});

} // namespace netid
