#include "netid/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "netid/conditions.hpp"
#include "netid/report.hpp"

namespace netid::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NetworkModel load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_network(buf.str());
    } catch (const ModelError& e) {
        throw InputError(path + ": " + e.what());
    }
}

NumericOptions numeric_options(const CliOptions& opts) {
    NumericOptions n;
    n.seed = opts.seed;
    n.trials = opts.trials;
    n.tolerance = opts.tolerance;
    n.max_subset = opts.max_subset;
    return n;
}

} // namespace

int cmd_analyze(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        NetworkModel m = load(opts.input);
        AnalysisReport rep = analyze(m, numeric_options(opts));
        if (opts.json) {
            out << report_to_json(rep).dump(2) << '\n';
        } else {
            out << render_text(rep);
        }
        return rep.verdict == Verdict::NotIdentifiable ? kNotIdentifiable : kOk;
    } catch (const InputError& e) {
        err << "netid: " << e.what() << '\n';
        return kUsageOrIo;
    } catch (const InstantiationError& e) {
        err << "netid: numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
}

int cmd_circular(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        NetworkModel m = load(opts.input);
        CircleDescriptor circle = detect_circle(m);
        CircularSection section{circle, circular_identifiable(circle)};
        std::optional<RecoveryCheck> recovery;
        if (opts.recover) {
            if (!section.verdict.identifiable) {
                err << "netid: --recover ignored: the circle is not identifiable\n";
            } else {
                recovery = check_recovery(circle, opts.seed);
            }
        }
        const RecoveryCheck* rec = recovery ? &*recovery : nullptr;
        if (opts.json) {
            nlohmann::ordered_json j;
            j["schema_version"] = kReportSchemaVersion;
            j["model"] = model_to_json(m);
            j["circular"] = circular_to_json(section, rec);
            out << j.dump(2) << '\n';
        } else {
            out << render_circular_text(section, rec);
        }
        return section.verdict.identifiable ? kOk : kNotIdentifiable;
    } catch (const InputError& e) {
        err << "netid: " << e.what() << '\n';
        return kUsageOrIo;
    } catch (const NotACircle& e) {
        err << "netid: not a circular network: " << e.what() << '\n';
        return kUsageOrIo;
    } catch (const InstantiationError& e) {
        err << "netid: numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const DegenerateInstance& e) {
        err << "netid: numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
}

int cmd_bipartite(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        NetworkModel m = load(opts.input);
        BipartiteGraph b = bipartite_graph(m);
        std::set<BipartiteEdge> dashed;
        if (opts.with_removals) {
            EdgeRemovalResult removal = algorithm2_remove_edges(m, b, opts.max_subset);
            for (const EdgeRemovalStep& s : removal.log) dashed.insert(s.removed);
        }
        const std::string dot = bipartite_to_dot(b, dashed);
        if (opts.dot_path) {
            std::ofstream file(*opts.dot_path, std::ios::binary);
            if (!file || !(file << dot) || !file.flush()) {
                err << "netid: cannot write '" << *opts.dot_path << "'\n";
                return kUsageOrIo;
            }
            out << "wrote " << b.edges.size() << " edges (" << dashed.size() << " dashed) to "
                << *opts.dot_path << '\n';
        } else {
            out << dot;
        }
        return kOk;
    } catch (const InputError& e) {
        err << "netid: " << e.what() << '\n';
        return kUsageOrIo;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Identifiability analysis of dynamic networks with partial excitation and measurement",
                 "netid"};
    app.require_subcommand(1);
    CliOptions opts;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opts.input, "JSON topology file")->required();
        sub->add_flag("--json", opts.json, "Emit the report as JSON");
        sub->add_option("--seed", opts.seed, "Seed for the random module values")->capture_default_str();
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--max-subset", opts.max_subset, "Cap the subset size searched")
            ->check(CLI::Range(2, 1 << 20));
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Evaluate every necessary condition");
    add_input(analyze_cmd);
    add_search(analyze_cmd);
    analyze_cmd->add_option("--trials", opts.trials, "Random instantiations per rank query")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze_cmd->add_option("--tol", opts.tolerance, "Relative singular-value cutoff")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* circular_cmd = app.add_subcommand("circular", "Definitive test for a single directed cycle");
    add_input(circular_cmd);
    circular_cmd->add_flag("--recover", opts.recover,
                           "Instantiate, recover every module from T_{C,R} and report the error");

    CLI::App* bipartite_cmd = app.add_subcommand("bipartite", "Export the bipartite graph of T_{C,R} as DOT");
    bipartite_cmd->add_option("input", opts.input, "JSON topology file")->required();
    bipartite_cmd->add_option("--dot", opts.dot_path, "Output path (default: standard output)");
    bipartite_cmd->add_flag("--with-removals", opts.with_removals, "Draw removable edges dashed");
    add_search(bipartite_cmd);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "netid: " << e.what() << '\n' << app.help();
        return kUsageOrIo;
    }

    if (analyze_cmd->parsed()) return cmd_analyze(opts, out, err);
    if (circular_cmd->parsed()) return cmd_circular(opts, out, err);
    return cmd_bipartite(opts, out, err);
}

} // namespace netid::cli
