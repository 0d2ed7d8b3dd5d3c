#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/particle.hpp"
#include "isodyn/radiation.hpp"
#include "isodyn/trajectory.hpp"
#include "isodyn/vec3.hpp"

namespace isodyn {

/// One field source: a charged particle on a prescribed worldline.
struct SourceSpec {
    double mass = 0.0;
    InnerVector charge;           ///< K [kg m/s]
    InnerVector charge_direction; ///< unit K direction (mass-locked sources)
    bool mass_locked = true;
    Trajectory trajectory = Trajectory::at_rest({});
};

/// One test particle; charges are mass-locked with orientation relative to
/// each source given by cos_theta (fields are linear in the charges, so only
/// the pairwise alignment angle enters the force).
struct TestParticleSpec {
    double mass = 0.0;
    Vec3 position;
    Vec3 velocity;
    std::vector<double> cos_theta; ///< one entry per source, in [-1, 1]
    std::string label;
};

struct GridSpec {
    Vec3 min;
    Vec3 max;
    int counts[3] = {1, 1, 1};
};

struct ClockSpec {
    double source_mass = 0.0; ///< [kg]
    double r = 0.0;           ///< [m]
};

enum class RunKind { Simulate, FieldMap, Radiation, Decay, Verify, Spectrum };

const char* run_kind_name(RunKind kind);

struct RunSpec {
    RunKind kind = RunKind::Verify;

    // simulate
    double dtau = 0.0;
    long steps = 0;
    int output_every = 1;

    // field-map
    double t = 0.0;
    GridSpec grid;

    // radiation
    std::string method = "formula"; ///< "formula" or "flux"
    std::optional<OrbitConfig> orbit;
    double R_over_rho = 1e4;
    int quadrature_order = 64;

    // decay
    double companion_mass = 0.0;
    double duration = 0.0;
    double dt = 0.0;
    double power_scale = 1.0;
    double contact_rho = 0.0;

    // verify
    std::optional<ClockSpec> clock;

    // spectrum
    int n_max = 3;
};

struct Scenario {
    PhysicalConstants consts{};
    int D = 4;
    double g2_over_4pi = 1.0;
    std::uint64_t seed = 0;
    std::vector<SourceSpec> sources;
    std::vector<TestParticleSpec> test_particles;
    RunSpec run;
    std::vector<std::string> outputs; ///< empty = all default artifacts
};

/// Parses and validates a scenario document.  Defaults: D = 4, g2over4pi = 1,
/// seed = 0, cos_theta = -1, CODATA constants.  Unknown keys are rejected;
/// all schema errors carry the JSON path of the offending field.
Scenario parse_scenario(const std::string& json_text);

/// Canonical JSON form with every default materialized; parsing it again
/// yields an identical canonical form (round-trip invariant).
std::string canonical_scenario_json(const Scenario& sc);

/// Artifact names the run kind writes when `outputs` is empty.
std::vector<std::string> default_artifacts(const Scenario& sc);

/// Artifacts that may be requested in `outputs` (defaults plus optional
/// extras such as the verify gauge-rules dump).
std::vector<std::string> allowed_artifacts(const Scenario& sc);

} // namespace isodyn
