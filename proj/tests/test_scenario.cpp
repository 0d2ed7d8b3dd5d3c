#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "isodyn/errors.hpp"
#include "isodyn/runner.hpp"
#include "isodyn/scenario.hpp"

using namespace isodyn;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) {
    const fs::path p = fs::path(ISODYN_FIXTURE_DIR) / name;
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture ", p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing artifact ", p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

/// Message of the InvalidArgument thrown by parse_scenario, for path checks.
std::string parse_error(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const InvalidArgument& e) {
        return e.what();
    }
    FAIL("expected InvalidArgument");
    return {};
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("isodyn_scenario_" + tag);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("minimal scenario materializes every default") {
    const auto sc = parse_scenario(R"({"run": {"kind": "spectrum"}})");
    CHECK(sc.D == 4);
    CHECK(sc.g2_over_4pi == 1.0);
    CHECK(sc.seed == 0);
    CHECK(sc.consts.c == 299792458.0);
    CHECK(sc.consts.G == 6.6743e-11);
    CHECK(sc.sources.empty());
    CHECK(sc.test_particles.empty());
    CHECK(sc.run.kind == RunKind::Spectrum);
    CHECK(sc.run.n_max == 3);
    CHECK(sc.outputs.empty());
    CHECK(default_artifacts(sc) == std::vector<std::string>{"spectrum.csv"});
}

TEST_CASE("simulate defaults: labels, velocity and cos_theta") {
    const auto sc = parse_scenario(R"({
        "sources": [{"mass": 1e30, "position": [0, 0, 0]},
                    {"mass": 2e30, "position": [1e10, 0, 0]}],
        "test_particles": [{"mass": 1, "position": [1e12, 0, 0]}],
        "run": {"kind": "simulate", "dtau": 10, "steps": 5}
    })");
    REQUIRE(sc.test_particles.size() == 1);
    const auto& tp = sc.test_particles[0];
    CHECK(tp.label == "p0");
    CHECK(norm(tp.velocity) == 0.0);
    CHECK(tp.cos_theta == std::vector<double>{-1.0, -1.0});
    CHECK(sc.run.output_every == 1);
    // Mass-locked source charges point along the first inner axis by default.
    CHECK(sc.sources[0].mass_locked);
    CHECK(sc.sources[0].charge_direction[0] == 1.0);
    CHECK(sc.sources[0].charge[0] == doctest::Approx(1e30 * sc.consts.c).epsilon(1e-15));
    CHECK(default_artifacts(sc) == std::vector<std::string>{"trajectory_p0.csv"});
}

TEST_CASE("scalar cos_theta broadcasts over all sources") {
    const auto sc = parse_scenario(R"({
        "sources": [{"mass": 1e30, "position": [0, 0, 0]},
                    {"mass": 1e30, "position": [1e10, 0, 0]}],
        "test_particles": [{"mass": 1, "position": [1e12, 0, 0], "cos_theta": 0.25}],
        "run": {"kind": "simulate", "dtau": 10, "steps": 5}
    })");
    CHECK(sc.test_particles[0].cos_theta == std::vector<double>{0.25, 0.25});
}

TEST_CASE("canonical form is a parse fixpoint for every fixture") {
    for (const char* name : {"earth_radiation.json", "kepler_orbit.json", "decay_demo.json",
                             "field_map_demo.json", "spectrum_d3.json",
                             "verify_default.json"}) {
        CAPTURE(name);
        const auto sc = parse_scenario(fixture(name));
        const std::string canon = canonical_scenario_json(sc);
        const std::string again = canonical_scenario_json(parse_scenario(canon));
        CHECK(canon == again);
    }
}

TEST_CASE("schema errors carry the JSON path of the offending field") {
    using doctest::String;
    auto has = [](const std::string& msg, const char* needle) {
        CAPTURE(msg);
        CHECK(msg.find(needle) != std::string::npos);
    };

    has(parse_error("{nope"), "not valid JSON");
    has(parse_error(R"({"run": {"kind": "verify"}, "extra": 1})"), "extra: unknown key");
    has(parse_error(R"({"D": 9, "run": {"kind": "verify"}})"), "D: inner dimension");
    has(parse_error(R"({"g2over4pi": 0, "run": {"kind": "verify"}})"), "g2over4pi");
    has(parse_error(R"({"seed": -1, "run": {"kind": "verify"}})"), "seed");
    has(parse_error(R"({"sources": [{"position": [0,0,0]}], "run": {"kind": "verify"}})"),
        "sources[0].mass: missing required number");
    has(parse_error(R"({"sources": [{"mass": 1}], "run": {"kind": "verify"}})"),
        "sources[0]: exactly one of \"position\" and \"trajectory\"");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0],
                                     "charge": [1,0,0,0]}],
                        "run": {"kind": "verify"}})"),
        "sources[0].charge: not allowed for mass-locked sources");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0],
                                     "mass_locked": false}],
                        "run": {"kind": "verify"}})"),
        "sources[0].charge: required when mass_locked is false");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0],
                                     "charge_direction": [1, 0]}],
                        "run": {"kind": "verify"}})"),
        "sources[0].charge_direction: expected 4 components");
    has(parse_error(R"({"sources": [{"mass": 1,
                                     "trajectory": {"kind": "warp"}}],
                        "run": {"kind": "verify"}})"),
        "sources[0].trajectory.kind");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "test_particles": [
                          {"mass": 1, "position": [1,0,0], "label": "x"},
                          {"mass": 1, "position": [2,0,0], "label": "x"}],
                        "run": {"kind": "simulate", "dtau": 1, "steps": 1}})"),
        "test_particles[1].label: duplicate");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "test_particles": [
                          {"mass": 1, "position": [1,0,0], "label": "a b"}],
                        "run": {"kind": "simulate", "dtau": 1, "steps": 1}})"),
        "labels use [A-Za-z0-9_-] only");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "test_particles": [
                          {"mass": 1, "position": [1,0,0], "cos_theta": [1.5]}],
                        "run": {"kind": "simulate", "dtau": 1, "steps": 1}})"),
        "cos_theta must lie in [-1, 1]");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "test_particles": [
                          {"mass": 1, "position": [1,0,0], "cos_theta": [-1, -1]}],
                        "run": {"kind": "simulate", "dtau": 1, "steps": 1}})"),
        "test_particles[0].cos_theta: expected one entry per source (1)");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "test_particles": [
                          {"mass": 1, "position": [1,0,0], "velocity": [3e8, 0, 0]}],
                        "run": {"kind": "simulate", "dtau": 1, "steps": 1}})"),
        "test_particles[0].velocity: must be subluminal");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}]})"),
        "run: missing required run spec");
    has(parse_error(R"({"run": {"kind": "fly"}})"), "run.kind");
    has(parse_error(R"({"run": {"kind": "simulate", "dtau": 1, "steps": 1}})"),
        "sources: simulate needs at least one source");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "run": {"kind": "field-map", "grid":
                          {"min": [0,0,0], "max": [1,1,1], "counts": [0, 1, 1]}}})"),
        "run.grid.counts[0]: must be a positive integer");
    has(parse_error(R"({"sources": [{"mass": 1, "position": [0,0,0]}],
                        "run": {"kind": "field-map", "grid":
                          {"min": [0,0,0], "max": [1,1,1], "counts": [200, 200, 200]}}})"),
        "grid too large");
    has(parse_error(R"({"run": {"kind": "radiation",
                                "orbit": {"mass": 1, "radius": 1, "v_hat": 0.5},
                                "R_over_rho": 1}})"),
        "run.R_over_rho: must be > 1");
    has(parse_error(R"({"run": {"kind": "radiation"}})"),
        "run.orbit: needs an explicit \"orbit\" or a circular source");
    has(parse_error(R"({"run": {"kind": "decay",
                                "orbit": {"mass": 1, "radius": 1, "v_hat": 0.5},
                                "companion_mass": 1, "duration": 1, "dt": 1,
                                "power_scale": -1}})"),
        "run.power_scale: must be >= 0");
    has(parse_error(R"({"run": {"kind": "spectrum", "n_max": 0}})"),
        "run.n_max: must be >= 1");
    has(parse_error(R"({"run": {"kind": "spectrum"}, "outputs": ["nope.csv"]})"),
        "outputs[0]: unknown artifact \"nope.csv\"; allowed: spectrum.csv");
}

TEST_CASE("artifact lists follow the run kind") {
    const auto two = parse_scenario(R"({
        "sources": [{"mass": 1e30, "position": [0, 0, 0]}],
        "test_particles": [
          {"mass": 1, "position": [1e12, 0, 0], "label": "a"},
          {"mass": 2, "position": [2e12, 0, 0], "label": "b"}],
        "run": {"kind": "simulate", "dtau": 10, "steps": 2}
    })");
    CHECK(default_artifacts(two) ==
          std::vector<std::string>{"trajectory_a.csv", "trajectory_b.csv"});
    CHECK(allowed_artifacts(two) == default_artifacts(two));

    const auto verify = parse_scenario(fixture("verify_default.json"));
    CHECK(default_artifacts(verify) ==
          std::vector<std::string>{"verify_report.json", "clock_report.json"});
    CHECK(allowed_artifacts(verify) ==
          std::vector<std::string>{"verify_report.json", "clock_report.json",
                                   "gauge_rules.txt"});
}

TEST_CASE("the Earth orbit fixture parses to its documented configuration") {
    const auto sc = parse_scenario(fixture("earth_radiation.json"));
    CHECK(sc.run.kind == RunKind::Radiation);
    CHECK(sc.run.method == "flux");
    REQUIRE(sc.run.orbit.has_value());
    CHECK(sc.run.orbit->mass == 5.972e24);
    CHECK(sc.run.orbit->radius == 1.496e11);
    CHECK(sc.run.orbit->v_hat == 9.94e-5);
    CHECK(sc.run.R_over_rho == 1e4);
    CHECK(sc.run.quadrature_order == 64);
}

TEST_CASE("radiation run writes one JSON artifact with the expected keys") {
    const auto sc = parse_scenario(fixture("earth_radiation.json"));
    const fs::path dir = fresh_dir("radiation");
    const auto report = run_scenario(sc, dir.string(), nullptr);
    CHECK(report.checks_passed);
    CHECK(report.artifacts == std::vector<std::string>{"radiation.json"});

    const auto doc = nlohmann::json::parse(slurp(dir / "radiation.json"));
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 5);
    CHECK(doc.contains("R_m"));
    CHECK(doc.contains("method"));
    CHECK(doc.contains("power_W"));
    CHECK(doc.contains("quadrature_order"));
    CHECK(doc.contains("relative_change"));
    CHECK(doc["method"] == "flux");
    const double p = doc["power_W"].get<double>();
    CHECK(std::abs(p / 2.64e10 - 1.0) < 0.05);

    // Reruns are byte-identical.
    const fs::path dir2 = fresh_dir("radiation2");
    run_scenario(sc, dir2.string(), nullptr);
    CHECK(slurp(dir / "radiation.json") == slurp(dir2 / "radiation.json"));
    fs::remove_all(dir);
    fs::remove_all(dir2);
}

TEST_CASE("simulate run writes one CSV per particle with the documented header") {
    const auto sc = parse_scenario(R"({
        "sources": [{"mass": 1e30, "position": [0, 0, 0]}],
        "test_particles": [
          {"mass": 1, "position": [1e12, 0, 0], "label": "a"},
          {"mass": 5, "position": [0, 1e12, 0], "label": "b"}],
        "run": {"kind": "simulate", "dtau": 1000, "steps": 10, "output_every": 5}
    })");
    const fs::path dir = fresh_dir("simulate");
    const auto report = run_scenario(sc, dir.string(), nullptr);
    CHECK(report.artifacts ==
          std::vector<std::string>{"trajectory_a.csv", "trajectory_b.csv"});

    const auto rows = lines_of(slurp(dir / "trajectory_a.csv"));
    REQUIRE(rows.size() == 4); // header + steps 0, 5, 10
    CHECK(rows[0] == "tau,t,x,y,z,ux,uy,uz,u0,norm_residual");
    CHECK(rows[1].substr(0, 2) == "0,");
    fs::remove_all(dir);
}

TEST_CASE("an outputs subset suppresses the other artifacts") {
    const auto sc = parse_scenario(R"({
        "sources": [{"mass": 1e30, "position": [0, 0, 0]}],
        "test_particles": [
          {"mass": 1, "position": [1e12, 0, 0], "label": "a"},
          {"mass": 5, "position": [0, 1e12, 0], "label": "b"}],
        "run": {"kind": "simulate", "dtau": 1000, "steps": 4, "output_every": 1},
        "outputs": ["trajectory_b.csv"]
    })");
    const fs::path dir = fresh_dir("subset");
    const auto report = run_scenario(sc, dir.string(), nullptr);
    CHECK(report.artifacts == std::vector<std::string>{"trajectory_b.csv"});
    CHECK(fs::exists(dir / "trajectory_b.csv"));
    CHECK(!fs::exists(dir / "trajectory_a.csv"));
    fs::remove_all(dir);
}

TEST_CASE("spectrum run tabulates the level table as CSV") {
    const auto sc = parse_scenario(fixture("spectrum_d3.json"));
    const fs::path dir = fresh_dir("spectrum");
    run_scenario(sc, dir.string(), nullptr);
    const auto rows = lines_of(slurp(dir / "spectrum.csv"));
    REQUIRE(rows.size() == 10); // header + 9 levels
    CHECK(rows[0] == "mass_kg,n_sq,multiplicity,representative");
    CHECK(rows[1].find(",1,3,0 0 1") != std::string::npos);
    CHECK(rows[9].find(",12,1,2 2 2") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("field map run covers grid x inner dimension rows") {
    const auto sc = parse_scenario(fixture("field_map_demo.json"));
    REQUIRE(sc.D == 2);
    const fs::path dir = fresh_dir("fieldmap");
    run_scenario(sc, dir.string(), nullptr);
    const auto rows = lines_of(slurp(dir / "field_map.csv"));
    REQUIRE(rows.size() == 1 + 5 * 5 * 1 * 2);
    CHECK(rows[0] == "x,y,z,t,M,e1,e2,e3,b1,b2,b3");
    fs::remove_all(dir);
}

TEST_CASE("decay run writes the banner comment and sample rows") {
    const auto sc = parse_scenario(fixture("decay_demo.json"));
    const fs::path dir = fresh_dir("decay");
    run_scenario(sc, dir.string(), nullptr);
    const auto rows = lines_of(slurp(dir / "decay.csv"));
    std::size_t comments = 0;
    while (comments < rows.size() && rows[comments][0] == '#') ++comments;
    CHECK(comments == 4);
    REQUIRE(rows.size() > comments + 1);
    CHECK(rows[comments] == "t,rho,E,P");
    // duration 1e9 at dt 1e7: initial sample plus 100 steps.
    CHECK(rows.size() == comments + 1 + 101);
    fs::remove_all(dir);
}
