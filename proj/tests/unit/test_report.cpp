#include <doctest.h>

#include "netid/report.hpp"
#include "oracles.hpp"

using namespace netid;
using nlohmann::ordered_json;

TEST_CASE("report JSON layout") {
    AnalysisReport rep = analyze(oracle::load_fixture("fig2.json"));
    ordered_json j = report_to_json(rep);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema_version", "model", "options", "conditions", "algorithm1_log",
                                           "algorithm2_log", "verdict", "circular"});
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["verdict"] == "NotIdentifiable");
    CHECK(j["circular"].is_null());
    CHECK(j["options"]["seed"] == 42);
    CHECK(j["options"]["max_subset"].is_null());
    CHECK(j["model"] == model_to_json(rep.model));
    CHECK(parse_network(j["model"].dump()) == rep.model);

    REQUIRE(j["algorithm1_log"].size() == 1);
    CHECK(j["algorithm1_log"][0]["rows"] == ordered_json::array({6, 7, 8}));
    CHECK(j["algorithm1_log"][0]["numeric_rank"] == 2);
    REQUIRE(j["algorithm2_log"].size() == 1);
    CHECK(j["algorithm2_log"][0]["paths"] == 2);
    CHECK(j["algorithm2_log"][0]["matching"] == 3);

    for (const auto& c : j["conditions"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("status"));
        CHECK(c["witness"].is_object());
    }
}

TEST_CASE("JSON is reproducible") {
    for (const char* name : {"fig1.json", "fig2.json", "fig3.json", "fig4.json", "fig5.json", "fig6.json"}) {
        auto m = oracle::load_fixture(name);
        CHECK(report_to_json(analyze(m)).dump(2) == report_to_json(analyze(m)).dump(2));
    }
}

TEST_CASE("circular section in JSON and text") {
    AnalysisReport rep = analyze(oracle::load_fixture("fig6.json"));
    ordered_json j = report_to_json(rep);
    REQUIRE(j["circular"].is_object());
    CHECK(j["circular"]["identifiable"] == true);
    CHECK(j["circular"]["condition"] == "TwoDisjointPaths");
    CHECK(j["circular"]["ring"] == ordered_json::array({1, 2, 3, 4, 5, 6}));
    CHECK(j["circular"]["paths"] == ordered_json::parse("[[1,2],[4,5]]"));

    RecoveryCheck chk = check_recovery(rep.circular->circle, 42);
    ordered_json withrec = circular_to_json(*rep.circular, &chk);
    CHECK(withrec["recovery"]["max_relative_error"].get<double>() <= 1e-6);

    std::string text = render_text(rep);
    CHECK(text.find("verdict: NoNecessaryConditionViolated") != std::string::npos);
    CHECK(text.find("identifiable (TwoDisjointPaths)") != std::string::npos);
    CHECK(render_circular_text(*rep.circular, &chk).find("max relative module error") != std::string::npos);
}

TEST_CASE("text report lists every condition") {
    AnalysisReport rep = analyze(oracle::load_fixture("fig1.json"));
    std::string text = render_text(rep);
    for (const char* id : {"CoverLemma1", "RankProp1", "NaiveCount", "Theorem1Count", "Corollary3Count"})
        CHECK(text.find(id) != std::string::npos);
    CHECK(text.find("verdict: NotIdentifiable") != std::string::npos);
}
