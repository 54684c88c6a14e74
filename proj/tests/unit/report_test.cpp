#include <doctest.h>

#include <cmath>

#include "hardysin/error.hpp"
#include "hardysin/report.hpp"
#include "hardysin/suites.hpp"

using namespace hardysin;
using nlohmann::json;

namespace {

report::ReportEnvelope sample() {
    report::ReportEnvelope env;
    env.command = "eigs";
    env.params = {{"s", "0.3"}, {"n", "2"}};
    env.results.columns = {"n", "lambda", "label", "ok"};
    env.results.rows = {{0, 0.6400000000000001, "first, \"quoted\"", true},
                        {1, 3.24, "second", false},
                        {2, 1e-300, "", true}};
    env.tolerances = {{"eigenvalue", 1e-8}};
    env.summary = {{"count", 3}};
    env.notes = {"note"};
    env.timestamp = "2026-01-01T00:00:00Z";
    return env;
}

}  // namespace

TEST_CASE("doubles print shortest round-trip") {
    CHECK(report::format_double(0.1) == "0.1");
    CHECK(report::format_double(2.0) == "2.0");
    CHECK(std::stod(report::format_double(0.6400000000000001)) == 0.6400000000000001);
}

TEST_CASE("CSV round trip preserves every cell") {
    const report::ReportEnvelope env = sample();
    const report::Table back = report::from_csv(report::to_csv(env.results));
    CHECK(back.columns == env.results.columns);
    REQUIRE(back.rows.size() == env.results.rows.size());
    for (std::size_t i = 0; i < back.rows.size(); ++i) {
        CHECK(back.rows[i][1].get<double>() == env.results.rows[i][1].get<double>());
        CHECK(back.rows[i][2] == env.results.rows[i][2]);
        CHECK(back.rows[i][3] == env.results.rows[i][3]);
    }
    CHECK_THROWS_AS(report::from_csv("a,b\n1\n"), DomainError);
    CHECK_THROWS_AS(report::from_csv("\"a\n"), DomainError);
}

TEST_CASE("JSON envelope round trip and key order") {
    const report::ReportEnvelope env = sample();
    const json j = report::to_json(env);
    CHECK(j.at("schema_version") == report::kSchemaVersion);
    CHECK(j.at("results").at("rows").size() == 3);
    const report::ReportEnvelope back = report::from_json(j);
    CHECK(report::render(back, "json") == report::render(env, "json"));
    CHECK_THROWS_AS(report::render(env, "xml"), DomainError);
}

TEST_CASE("suites are deterministic and concurrent runs match serial runs") {
    const auto serial = suites::run("closedform");
    const auto both = suites::run_many({"spectral", "closedform"});
    REQUIRE(both.size() == 2);
    CHECK(both[0].name == "spectral");
    REQUIRE(both[1].assertions.size() == serial.assertions.size());
    for (std::size_t i = 0; i < serial.assertions.size(); ++i) {
        CHECK(both[1].assertions[i].invariant == serial.assertions[i].invariant);
        CHECK(both[1].assertions[i].value == serial.assertions[i].value);
    }
    CHECK_THROWS_AS(suites::run("nope"), DomainError);
}
