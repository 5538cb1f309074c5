#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netid/cli.hpp"
#include "oracles.hpp"

using namespace netid;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "netid");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return oracle::fixture_path(name); }

} // namespace

TEST_CASE("analyze exit codes") {
    CHECK(run({"analyze", fixture("fig1.json")}).code == cli::kNotIdentifiable);
    Run fig6 = run({"analyze", fixture("fig6.json")});
    CHECK(fig6.code == cli::kOk);
    CHECK(fig6.out.find("identifiable (TwoDisjointPaths)") != std::string::npos);
    Run missing = run({"analyze", "/nonexistent/missing.json"});
    CHECK(missing.code == cli::kUsageOrIo);
    CHECK(missing.err.find("cannot read") != std::string::npos);
}

TEST_CASE("malformed input is a usage error") {
    auto path = std::filesystem::temp_directory_path() / "netid_bad.json";
    std::ofstream(path) << R"({"vertices":2,"edges":[[1,1]],"excited":[1],"measured":[2]})";
    Run r = run({"analyze", path.string()});
    CHECK(r.code == cli::kUsageOrIo);
    CHECK(r.err.find("self-loop") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("argument validation") {
    CHECK(run({}).code == cli::kUsageOrIo);
    CHECK(run({"frobnicate"}).code == cli::kUsageOrIo);
    CHECK(run({"analyze"}).code == cli::kUsageOrIo);
    CHECK(run({"analyze", fixture("fig1.json"), "--trials", "0"}).code == cli::kUsageOrIo);
    CHECK(run({"analyze", fixture("fig1.json"), "--tol", "-1"}).code == cli::kUsageOrIo);
    CHECK(run({"analyze", fixture("fig1.json"), "--max-subset", "1"}).code == cli::kUsageOrIo);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("JSON output is stable across runs") {
    Run a = run({"analyze", fixture("fig3.json"), "--json", "--seed", "9"});
    Run b = run({"analyze", fixture("fig3.json"), "--json", "--seed", "9"});
    CHECK(a.code == cli::kNotIdentifiable);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["options"]["seed"] == 9);
    CHECK(j["verdict"] == "NotIdentifiable");
}

TEST_CASE("max-subset caps the search") {
    Run r = run({"analyze", fixture("fig2.json"), "--json", "--max-subset", "2"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["options"]["max_subset"] == 2);
    CHECK(j["algorithm1_log"].empty());
}

TEST_CASE("circular subcommand") {
    CHECK(run({"circular", fixture("fig3.json")}).code == cli::kNotIdentifiable);
    Run fig1 = run({"circular", fixture("fig1.json")});
    CHECK(fig1.code == cli::kUsageOrIo);
    CHECK(fig1.err.find("not a circular network") != std::string::npos);

    Run rec = run({"circular", fixture("fig6.json"), "--recover", "--json", "--seed", "3"});
    CHECK(rec.code == cli::kOk);
    auto j = nlohmann::json::parse(rec.out);
    CHECK(j["circular"]["recovery"]["max_relative_error"].get<double>() <= 1e-6);
    CHECK(j["circular"]["recovery"]["seed"] == 3);
}

TEST_CASE("bipartite export") {
    Run stdout_run = run({"bipartite", fixture("fig3.json"), "--with-removals"});
    CHECK(stdout_run.code == cli::kOk);
    CHECK(stdout_run.out.find("[style=dashed]") != std::string::npos);

    auto path = std::filesystem::temp_directory_path() / "netid_fig3.dot";
    Run file_run = run({"bipartite", fixture("fig3.json"), "--dot", path.string()});
    CHECK(file_run.code == cli::kOk);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().rfind("graph bipartite {", 0) == 0);
    CHECK(buf.str().find("dashed") == std::string::npos);
    std::filesystem::remove(path);

    CHECK(run({"bipartite", fixture("fig3.json"), "--dot", "/nonexistent/dir/out.dot"}).code == cli::kUsageOrIo);
}
