#include "netid/model.hpp"

#include <algorithm>

#include <json.hpp>

namespace netid {

VertexSet::VertexSet(std::initializer_list<Vertex> vs)
    : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
}

int VertexSet::index_of(Vertex v) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) return -1;
    return static_cast<int>(it - items_.begin());
}

VertexSet VertexSet::united(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                   other.items_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

NetworkModel::NetworkModel(int vertex_count, std::vector<Edge> edges,
                           VertexSet excited, VertexSet measured)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      excited_(std::move(excited)),
      measured_(std::move(measured)) {
    if (vertex_count_ < 1) {
        throw ModelError(ModelErrorKind::IndexOutOfRange,
                         "vertex count must be positive, got " +
                             std::to_string(vertex_count_));
    }
    for (const Edge& e : edges_) {
        if (e.from < 1 || e.from > vertex_count_ || e.to < 1 ||
            e.to > vertex_count_) {
            throw ModelError(ModelErrorKind::IndexOutOfRange,
                             "edge [" + std::to_string(e.from) + "," +
                                 std::to_string(e.to) + "] references a vertex outside 1.." +
                                 std::to_string(vertex_count_));
        }
        if (e.from == e.to) {
            throw ModelError(ModelErrorKind::SelfLoop,
                             "self-loop on vertex " + std::to_string(e.from));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw ModelError(ModelErrorKind::DuplicateEdge,
                         "duplicate edge [" + std::to_string(dup->from) + "," +
                             std::to_string(dup->to) + "]");
    }
    for (const VertexSet* set : {&excited_, &measured_}) {
        for (Vertex v : *set) {
            if (v < 1 || v > vertex_count_) {
                throw ModelError(ModelErrorKind::IndexOutOfRange,
                                 "vertex " + std::to_string(v) + " outside 1.." +
                                     std::to_string(vertex_count_));
            }
        }
    }

    std::vector<std::vector<Vertex>> in(vertex_count_), out(vertex_count_);
    for (const Edge& e : edges_) {
        in[e.to - 1].push_back(e.from);
        out[e.from - 1].push_back(e.to);
    }
    in_.reserve(vertex_count_);
    out_.reserve(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) {
        in_.emplace_back(std::move(in[v]));
        out_.emplace_back(std::move(out[v]));
    }
}

bool NetworkModel::has_edge(Vertex from, Vertex to) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

VertexSet NetworkModel::all_vertices() const {
    std::vector<Vertex> vs(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) vs[v] = v + 1;
    return VertexSet(std::move(vs));
}

void NetworkModel::check_vertex(Vertex v) const {
    if (v < 1 || v > vertex_count_) {
        throw ModelError(ModelErrorKind::IndexOutOfRange,
                         "vertex " + std::to_string(v) + " outside 1.." +
                             std::to_string(vertex_count_));
    }
}

const VertexSet& NetworkModel::in_neighbours(Vertex i) const {
    check_vertex(i);
    return in_[i - 1];
}

const VertexSet& NetworkModel::out_neighbours(Vertex i) const {
    check_vertex(i);
    return out_[i - 1];
}

bool NetworkModel::operator==(const NetworkModel& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_ &&
           excited_ == other.excited_ && measured_ == other.measured_;
}

VertexSet in_neighbours(const NetworkModel& m, Vertex i) {
    return m.in_neighbours(i);
}

VertexSet out_neighbours(const NetworkModel& m, Vertex i) {
    return m.out_neighbours(i);
}

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
    throw ModelError(ModelErrorKind::MalformedJson, what);
}

int as_int(const json& j, const char* field) {
    if (!j.is_number_integer()) {
        malformed(std::string("field '") + field + "' must hold integers");
    }
    return j.get<int>();
}

const json& require(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) malformed(std::string("missing field '") + field + "'");
    return *it;
}

VertexSet vertex_list(const json& doc, const char* field) {
    const json& arr = require(doc, field);
    if (!arr.is_array()) malformed(std::string("field '") + field + "' must be an array");
    std::vector<Vertex> vs;
    for (const json& v : arr) vs.push_back(as_int(v, field));
    return VertexSet(std::move(vs));
}

} // namespace

NetworkModel parse_network(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) malformed("topology must be a JSON object");

    int vertices = as_int(require(doc, "vertices"), "vertices");

    const json& edge_arr = require(doc, "edges");
    if (!edge_arr.is_array()) malformed("field 'edges' must be an array");
    std::vector<Edge> edges;
    for (const json& e : edge_arr) {
        if (!e.is_array() || e.size() != 2) {
            malformed("each edge must be a [from, to] pair");
        }
        edges.push_back({as_int(e[0], "edges"), as_int(e[1], "edges")});
    }

    return NetworkModel(vertices, std::move(edges), vertex_list(doc, "excited"),
                        vertex_list(doc, "measured"));
}

std::string serialize_network(const NetworkModel& m) {
    nlohmann::ordered_json doc;
    doc["vertices"] = m.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : m.edges()) edges.push_back({e.from, e.to});
    doc["edges"] = std::move(edges);
    doc["excited"] = m.excited().items();
    doc["measured"] = m.measured().items();
    return doc.dump();
}

} // namespace netid
