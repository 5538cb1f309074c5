#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netid {

/// 1-based vertex index, as used in topology files and reports.
using Vertex = int;

/// Directed edge (from, to). Induces the module G_{to,from}.
struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);

    bool contains(Vertex v) const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    /// Position of v within the set, or -1.
    int index_of(Vertex v) const;

    Vertex operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Vertex>& items() const { return items_; }

    VertexSet united(const VertexSet& other) const;
    VertexSet intersected(const VertexSet& other) const;

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> items_;
};

enum class ModelErrorKind {
    MalformedJson,
    SelfLoop,
    IndexOutOfRange,
    DuplicateEdge,
};

class ModelError : public std::runtime_error {
public:
    ModelError(ModelErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ModelErrorKind kind() const { return kind_; }

private:
    ModelErrorKind kind_;
};

/// Topology of a dynamic network with its excited (R) and measured (C)
/// vertex sets. Immutable once built; the edge list is kept sorted.
class NetworkModel {
public:
    /// Validates and canonicalises. Throws ModelError.
    NetworkModel(int vertex_count, std::vector<Edge> edges, VertexSet excited,
                 VertexSet measured);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const VertexSet& excited() const { return excited_; }
    const VertexSet& measured() const { return measured_; }

    bool has_edge(Vertex from, Vertex to) const;
    VertexSet all_vertices() const;

    /// N_i^-: vertices with an edge into i.
    const VertexSet& in_neighbours(Vertex i) const;
    /// N_i^+: vertices reached by an edge out of i.
    const VertexSet& out_neighbours(Vertex i) const;

    bool operator==(const NetworkModel& other) const;

private:
    void check_vertex(Vertex v) const;

    int vertex_count_;
    std::vector<Edge> edges_;
    VertexSet excited_;
    VertexSet measured_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> out_;
};

VertexSet in_neighbours(const NetworkModel& m, Vertex i);
VertexSet out_neighbours(const NetworkModel& m, Vertex i);

NetworkModel parse_network(std::string_view text);
/// Canonical JSON topology text (edges sorted, vertex sets ascending).
std::string serialize_network(const NetworkModel& m);

} // namespace netid
