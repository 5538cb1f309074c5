#pragma once

#include <cstddef>
#include <vector>

#include "netid/model.hpp"
#include "netid/structure.hpp"

namespace netid {

/// Edges of a bipartite graph sharing no endpoint.
struct Matching {
    std::vector<BipartiteEdge> edges;

    std::size_t size() const { return edges.size(); }
};

/// Maximum-cardinality matching on a bipartite graph given as adjacency
/// lists from left vertices [0, adj.size()) to right vertices
/// [0, right_count). Returns, for each left vertex, its matched right vertex
/// or -1. Hopcroft-Karp.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_count);

/// Cardinality of a maximum matching for an index-level adjacency.
int matching_size(const std::vector<std::vector<int>>& adj, int right_count);

/// Maximum matching of B restricted to cols (subset of R) x rows (subset of C).
/// Its cardinality is the structural rank of T_{rows,cols}.
Matching max_matching(const BipartiteGraph& b, const VertexSet& rows, const VertexSet& cols);

/// A directed path listed vertex by vertex. A single vertex is a path of
/// length 0.
using Path = std::vector<Vertex>;

/// A maximum family of mutually vertex-disjoint paths from `sources` to
/// `targets`. Each returned path starts at its last vertex in `sources` and
/// ends at its first vertex in `targets` after that.
std::vector<Path> vertex_disjoint_paths(const NetworkModel& m, const VertexSet& sources,
                                        const VertexSet& targets);

/// b_{sources -> targets}: maximum number of vertex-disjoint paths.
int max_vertex_disjoint_paths(const NetworkModel& m, const VertexSet& sources,
                              const VertexSet& targets);

/// All size-k subsets of `set`, in lexicographic order.
std::vector<VertexSet> subsets_of_size(const VertexSet& set, std::size_t k);

} // namespace netid
