#include "netid/report.hpp"

#include <iomanip>
#include <sstream>

namespace netid {

using nlohmann::ordered_json;

namespace {

std::string set_text(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

std::string path_text(const Path& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "->" : "") << p[k];
    return os.str();
}

} // namespace

ordered_json model_to_json(const NetworkModel& m) {
    return ordered_json::parse(serialize_network(m));
}

ordered_json circular_to_json(const CircularSection& c, const RecoveryCheck* recovery) {
    ordered_json j;
    j["ring"] = c.circle.ring;
    j["identifiable"] = c.verdict.identifiable;
    j["condition"] = to_string(c.verdict.condition);
    j["paths"] = c.verdict.paths;
    j["vertices"] = c.verdict.vertices.items();
    if (recovery) {
        ordered_json rec;
        rec["seed"] = recovery->seed;
        auto modules = ordered_json::array();
        for (int u = 0; u < c.circle.size(); ++u) {
            ordered_json mod;
            mod["from"] = c.circle.ring[u];
            mod["to"] = c.circle.ring[(u + 1) % c.circle.size()];
            mod["expected"] = recovery->expected[u];
            mod["recovered"] = recovery->recovered.gains[u];
            modules.push_back(std::move(mod));
        }
        rec["modules"] = std::move(modules);
        rec["loop_gain"] = recovery->recovered.loop_gain;
        rec["expected_loop_gain"] = recovery->expected_loop_gain;
        rec["max_relative_error"] = recovery->max_relative_error;
        rec["loop_gain_relative_error"] = recovery->loop_gain_relative_error;
        j["recovery"] = std::move(rec);
    }
    return j;
}

ordered_json report_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["model"] = model_to_json(r.model);

    ordered_json opts;
    opts["seed"] = r.options.seed;
    opts["trials"] = r.options.trials;
    opts["tolerance"] = r.options.tolerance;
    if (r.options.max_subset > 0) {
        opts["max_subset"] = r.options.max_subset;
    } else {
        opts["max_subset"] = nullptr;
    }
    j["options"] = std::move(opts);

    auto conds = ordered_json::array();
    for (const ConditionResult& c : r.conditions) {
        ordered_json item;
        item["id"] = to_string(c.id);
        item["status"] = to_string(c.status);
        item["witness"] = c.witness;
        item["notes"] = c.notes;
        conds.push_back(std::move(item));
    }
    j["conditions"] = std::move(conds);

    auto a1 = ordered_json::array();
    if (r.algorithm1) {
        for (const EliminationStep& s : r.algorithm1->log) {
            ordered_json item;
            item["removed"] = {s.removed.row, s.removed.col};
            item["rows"] = s.rows.items();
            item["cols"] = s.cols.items();
            item["numeric_rank"] = s.numeric_rank;
            a1.push_back(std::move(item));
        }
    }
    j["algorithm1_log"] = std::move(a1);

    auto a2 = ordered_json::array();
    if (r.algorithm2) {
        for (const EdgeRemovalStep& s : r.algorithm2->log) {
            ordered_json item;
            item["removed"] = {s.removed.excited, s.removed.measured};
            item["excited"] = s.excited.items();
            item["measured"] = s.measured.items();
            item["paths"] = s.paths;
            item["matching"] = s.matching;
            a2.push_back(std::move(item));
        }
    }
    j["algorithm2_log"] = std::move(a2);

    j["verdict"] = to_string(r.verdict);
    j["circular"] = r.circular ? circular_to_json(*r.circular) : ordered_json(nullptr);
    return j;
}

std::string render_circular_text(const CircularSection& c, const RecoveryCheck* recovery) {
    std::ostringstream os;
    os << "circle: ";
    for (Vertex v : c.circle.ring) os << v << "->";
    os << c.circle.ring.front() << '\n';
    os << "  excited " << set_text(c.circle.excited) << ", measured " << set_text(c.circle.measured)
       << '\n';
    os << "  " << (c.verdict.identifiable ? "identifiable" : "not identifiable") << " ("
       << to_string(c.verdict.condition) << ")\n";
    for (const Path& p : c.verdict.paths) os << "    path " << path_text(p) << '\n';
    if (!c.verdict.vertices.empty()) os << "    vertices " << set_text(c.verdict.vertices) << '\n';
    if (recovery) {
        os << std::setprecision(12);
        os << "  recovery (seed " << recovery->seed << "):\n";
        for (int u = 0; u < c.circle.size(); ++u) {
            os << "    G[" << c.circle.ring[(u + 1) % c.circle.size()] << "," << c.circle.ring[u]
               << "] recovered " << recovery->recovered.gains[u] << " expected "
               << recovery->expected[u] << '\n';
        }
        os << "    loop gain " << recovery->recovered.loop_gain << " expected "
           << recovery->expected_loop_gain << '\n';
        os << std::setprecision(3);
        os << "    max relative module error " << recovery->max_relative_error << '\n';
    }
    return os.str();
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    const NetworkModel& m = r.model;
    os << "network: " << m.vertex_count() << " vertices, " << m.edge_count() << " edges\n"
       << "  excited " << set_text(m.excited()) << ", measured " << set_text(m.measured()) << "\n\n";
    os << "conditions:\n";
    for (const ConditionResult& c : r.conditions) {
        os << "  " << std::left << std::setw(16) << to_string(c.id) << ' ' << std::setw(20)
           << to_string(c.status) << ' ' << c.witness.dump() << '\n';
        if (!c.notes.empty()) os << "      " << c.notes << '\n';
    }
    if (r.algorithm1 && !r.algorithm1->log.empty()) {
        os << "\ndependent-entry elimination:\n";
        for (const EliminationStep& s : r.algorithm1->log) {
            os << "  remove T[" << s.removed.row << "," << s.removed.col << "]  rows "
               << set_text(s.rows) << " cols " << set_text(s.cols) << " rank " << s.numeric_rank
               << " < " << s.rows.size() << '\n';
        }
    }
    if (r.algorithm2 && !r.algorithm2->log.empty()) {
        os << "\nbipartite edge removal:\n";
        for (const EdgeRemovalStep& s : r.algorithm2->log) {
            os << "  remove (" << s.removed.excited << "," << s.removed.measured << ")  excited "
               << set_text(s.excited) << " measured " << set_text(s.measured) << " paths "
               << s.paths << " < matching " << s.matching << '\n';
        }
    }
    if (r.circular) os << '\n' << render_circular_text(*r.circular);
    os << "\nverdict: " << to_string(r.verdict) << '\n';
    return os.str();
}

} // namespace netid
