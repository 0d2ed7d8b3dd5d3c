// Command-line front end: every subcommand loads a scenario file, checks that
// its run kind matches the subcommand, and hands it to the library runner.
//
// Exit codes: 0 success, 1 failed verification checks, 2 usage or validation
// errors, 3 runtime numeric errors (domain, convergence, degeneracy).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "isodyn/errors.hpp"
#include "isodyn/runner.hpp"
#include "isodyn/scenario.hpp"

namespace {

struct Args {
    std::string scenario_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool quiet = false;
};

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw isodyn::InvalidArgument("cannot open scenario file " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauge-field toolkit for volume-preserving inner-space symmetry"};
    app.require_subcommand(1);

    const struct {
        const char* name;
        const char* help;
    } kinds[] = {
        {"simulate", "Integrate test-particle motion in retarded source fields"},
        {"field-map", "Sample field components on a spatial grid"},
        {"radiation", "Radiated power of a circular orbit (formula or flux)"},
        {"decay", "Adiabatic inspiral of a radiating circular binary"},
        {"verify", "Run the cross-module invariant check suite"},
        {"spectrum", "Quantized mass spectrum levels"},
    };

    Args args;
    for (const auto& kind : kinds) {
        CLI::App* sub = app.add_subcommand(kind.name, kind.help);
        sub->add_option("--scenario", args.scenario_path, "Scenario JSON file")
            ->required();
        sub->add_option("--out", args.out_dir, "Output directory for artifacts");
        sub->add_option("--seed", args.seed, "Override the scenario seed")
            ->each([&args](const std::string&) { args.seed_set = true; });
        sub->add_flag("--quiet", args.quiet, "Suppress progress output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string chosen = app.get_subcommands().front()->get_name();

    try {
        isodyn::Scenario sc = isodyn::parse_scenario(read_file(args.scenario_path));
        if (chosen != isodyn::run_kind_name(sc.run.kind)) {
            std::cerr << "error: scenario run kind is '" << isodyn::run_kind_name(sc.run.kind)
                      << "', but the '" << chosen << "' subcommand was invoked\n";
            return 2;
        }
        if (args.seed_set) sc.seed = args.seed;

        const isodyn::RunReport report =
            isodyn::run_scenario(sc, args.out_dir, args.quiet ? nullptr : &std::cout);
        return report.checks_passed ? 0 : 1;
    } catch (const isodyn::DomainExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const isodyn::OnWorldline& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const isodyn::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const isodyn::NumericFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const isodyn::Error& e) {
        // InvalidArgument and ConstraintViolation: bad input.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // JSON syntax errors and other environment failures.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
