// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned here, independently of the defaults the
// verification suite applies to the same checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "isodyn/runner.hpp"
#include "isodyn/scenario.hpp"
#include "isodyn/verification.hpp"

using namespace isodyn;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const char* title, bool passed, const std::string& detail) {
    std::printf("[%s] %2d %-38s %s\n", passed ? "PASS" : "FAIL", criterion, title,
                detail.c_str());
    if (!passed) ++g_failures;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

/// "worst <w> (tol <t>)" fragments joined with "; ".
struct Budget {
    std::string detail;
    bool ok = true;

    void add(const char* label, double worst, double tol) {
        if (!detail.empty()) detail += "; ";
        detail += std::string(label) + " " + num(worst) + " (tol " + num(tol) + ")";
        if (!(worst <= tol)) ok = false;
    }
};

const CheckResult* find_check(const std::vector<CheckResult>& checks, const char* name) {
    for (const CheckResult& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

/// Pulls a named suite check into the budget under the acceptance tolerance.
void pull(Budget& b, const std::vector<CheckResult>& checks, const char* name, double tol) {
    const CheckResult* c = find_check(checks, name);
    if (!c) {
        b.detail += std::string(b.detail.empty() ? "" : "; ") + name + " MISSING";
        b.ok = false;
        return;
    }
    b.add(name, c->worst, tol);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Criterion 1: the bundled Earth orbit fixture, end to end through the runner,
// lands within 5% of 26.4 GW in under a second.
void earth_radiation_criterion() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        const auto sc =
            parse_scenario(read_file(fs::path(ISODYN_FIXTURE_DIR) / "earth_radiation.json"));
        const fs::path dir = fs::temp_directory_path() / "isodyn_acceptance_radiation";
        fs::remove_all(dir);
        run_scenario(sc, dir.string(), nullptr);
        const auto doc = nlohmann::json::parse(read_file(dir / "radiation.json"));
        fs::remove_all(dir);
        const double power = doc["power_W"].get<double>();
        const double rel = std::abs(power / 2.64e10 - 1.0);
        const double elapsed = seconds_since(t0);
        ok = rel < 0.05 && elapsed < 1.0;
        detail = "power " + num(power) + " W, off 26.4 GW by " + num(rel) +
                 " (tol 0.05), " + num(elapsed) + " s (limit 1)";
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(1, "Earth orbit radiated power", ok, detail);
}

// Criterion 2: sphere quadrature of the angular distribution closes on the
// total-power formula for 100 random states with |v_hat| <= 0.5.
void larmor_closure_criterion() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalConstants consts{};
    const double worst = larmor_closure_mismatch(2026, 100, 0.5, consts);
    const double elapsed = seconds_since(t0);
    Budget b;
    b.add("closure", worst, 1e-6);
    b.detail += ", " + num(elapsed) + " s (limit 30)";
    report(2, "angular power closes on total power", b.ok && elapsed < 30.0, b.detail);
}

} // namespace

int main() {
    earth_radiation_criterion();
    larmor_closure_criterion();

    VerifyOptions opt;
    opt.seed = 2026;
    opt.D = 4;
    opt.thorough = true; // acceptance-grade sample counts
    const auto checks = run_verification_suite(opt);

    {
        Budget b;
        pull(b, checks, "newtonian_limit", 1e-6);
        pull(b, checks, "kepler_period", 1e-6);
        report(3, "slow-motion limit and Kepler period", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "weak_equivalence", 1e-12);
        report(4, "trajectories independent of test mass", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "static_field_closed_form", 1e-15);
        report(5, "static field reduction, b identically 0", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "potential_field_consistency", 1e-6);
        pull(b, checks, "lorentz_gauge_residual", 1e-5);
        pull(b, checks, "wave_equation_residual", 1e-5);
        report(6, "fields consistent with their potentials", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "gauge_linearization_first_order", 1e-12);
        pull(b, checks, "gauge_trace_preservation", 1e-13);
        report(7, "gauge variation commutes with composition", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "lagrangian_cube_quadrature", 1e-10);
        pull(b, checks, "cube_moment_tensors", 1e-14);
        pull(b, checks, "cube_moment_monte_carlo", 3.0); // sigma units
        report(8, "inner-volume Lagrangian weights", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "solar_clock_deficit", 1e-10);
        pull(b, checks, "static_clock_identity", 1e-15);
        report(9, "clock-rate deficit at 1 au", b.ok, b.detail);
    }
    {
        Budget b;
        pull(b, checks, "flux_power_agreement", 1e-2);
        report(10, "sphere flux equals orbit power", b.ok, b.detail);
    }

    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
