#include "isodyn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "json.hpp"

#include "isodyn/errors.hpp"

namespace isodyn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw InvalidArgument(path + ": " + msg);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string elem(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void require_keys(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return it.key() == k; });
        if (!known) fail(join(path, it.key()), "unknown key");
    }
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double number_at(const json& obj, const char* key, const std::string& path) {
    const json* j = find(obj, key);
    if (!j) fail(join(path, key), "missing required number");
    if (!j->is_number()) fail(join(path, key), "expected a number");
    return j->get<double>();
}

double number_or(const json& obj, const char* key, const std::string& path, double def) {
    const json* j = find(obj, key);
    if (!j) return def;
    if (!j->is_number()) fail(join(path, key), "expected a number");
    return j->get<double>();
}

long integer_or(const json& obj, const char* key, const std::string& path, long def) {
    const json* j = find(obj, key);
    if (!j) return def;
    if (!j->is_number_integer()) fail(join(path, key), "expected an integer");
    return j->get<long>();
}

long integer_at(const json& obj, const char* key, const std::string& path) {
    const json* j = find(obj, key);
    if (!j) fail(join(path, key), "missing required integer");
    if (!j->is_number_integer()) fail(join(path, key), "expected an integer");
    return j->get<long>();
}

std::string string_or(const json& obj, const char* key, const std::string& path,
                      const std::string& def) {
    const json* j = find(obj, key);
    if (!j) return def;
    if (!j->is_string()) fail(join(path, key), "expected a string");
    return j->get<std::string>();
}

std::vector<double> number_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) fail(elem(path, i), "expected a number");
        out.push_back(j[i].get<double>());
    }
    return out;
}

Vec3 vec3_at(const json& obj, const char* key, const std::string& path) {
    const json* j = find(obj, key);
    if (!j) fail(join(path, key), "missing required 3-vector");
    const std::vector<double> v = number_array(*j, join(path, key));
    if (v.size() != 3) fail(join(path, key), "expected exactly 3 components");
    return {v[0], v[1], v[2]};
}

Vec3 vec3_or(const json& obj, const char* key, const std::string& path, const Vec3& def) {
    if (!find(obj, key)) return def;
    return vec3_at(obj, key, path);
}

PhysicalConstants parse_constants(const json* j, const std::string& path) {
    PhysicalConstants base = codata_constants();
    if (!j) return base;
    require_object(*j, path);
    require_keys(*j, path, {"c", "G", "hbar"});
    const double c = number_or(*j, "c", path, base.c);
    const double G = number_or(*j, "G", path, base.G);
    const double hbar = number_or(*j, "hbar", path, base.hbar);
    try {
        return planck_derive(c, G, hbar);
    } catch (const InvalidArgument& e) {
        fail(path, e.what());
    }
}

Trajectory parse_trajectory(const json& j, const std::string& path,
                            const PhysicalConstants& consts) {
    require_object(j, path);
    const std::string kind = string_or(j, "kind", path, "");
    if (kind == "static") {
        require_keys(j, path, {"kind", "position"});
        return Trajectory::at_rest(vec3_at(j, "position", path));
    }
    if (kind == "uniform") {
        require_keys(j, path, {"kind", "position", "velocity", "t0"});
        try {
            return Trajectory::uniform(vec3_at(j, "position", path),
                                       vec3_at(j, "velocity", path), consts,
                                       number_or(j, "t0", path, 0.0));
        } catch (const InvalidArgument& e) {
            fail(path, e.what());
        }
    }
    if (kind == "circular") {
        require_keys(j, path, {"kind", "center", "radius", "omega", "phase"});
        try {
            return Trajectory::circular(vec3_or(j, "center", path, {}),
                                        number_at(j, "radius", path),
                                        number_at(j, "omega", path), consts,
                                        number_or(j, "phase", path, 0.0));
        } catch (const InvalidArgument& e) {
            fail(path, e.what());
        }
    }
    if (kind == "tabulated") {
        require_keys(j, path, {"kind", "samples"});
        const json* samples = find(j, "samples");
        if (!samples || !samples->is_array()) {
            fail(join(path, "samples"), "expected an array of samples");
        }
        std::vector<TrajectorySample> out;
        out.reserve(samples->size());
        for (std::size_t i = 0; i < samples->size(); ++i) {
            const json& s = (*samples)[i];
            const std::string spath = elem(join(path, "samples"), i);
            require_object(s, spath);
            require_keys(s, spath, {"t", "position", "velocity"});
            TrajectorySample ts;
            ts.t = number_at(s, "t", spath);
            ts.position = vec3_at(s, "position", spath);
            ts.velocity = vec3_at(s, "velocity", spath);
            out.push_back(ts);
        }
        try {
            return Trajectory::tabulated(std::move(out), consts);
        } catch (const InvalidArgument& e) {
            fail(path, e.what());
        }
    }
    fail(join(path, "kind"),
         "expected one of \"static\", \"uniform\", \"circular\", \"tabulated\"");
}

InnerVector parse_inner(const json& j, const std::string& path, int D) {
    const std::vector<double> v = number_array(j, path);
    if (static_cast<int>(v.size()) != D) {
        fail(path, "expected " + std::to_string(D) + " components (inner dimension)");
    }
    return InnerVector(v);
}

SourceSpec parse_source(const json& j, const std::string& path, int D,
                        const PhysicalConstants& consts) {
    require_object(j, path);
    require_keys(j, path,
                 {"mass", "position", "trajectory", "charge_direction", "mass_locked", "charge"});
    SourceSpec src;
    src.mass = number_at(j, "mass", path);
    if (!(src.mass > 0.0)) fail(join(path, "mass"), "mass must be positive");

    const json* pos = find(j, "position");
    const json* traj = find(j, "trajectory");
    if ((pos == nullptr) == (traj == nullptr)) {
        fail(path, "exactly one of \"position\" and \"trajectory\" is required");
    }
    src.trajectory = pos ? Trajectory::at_rest(vec3_at(j, "position", path))
                         : parse_trajectory(*traj, join(path, "trajectory"), consts);

    src.mass_locked = true;
    if (const json* locked = find(j, "mass_locked")) {
        if (!locked->is_boolean()) fail(join(path, "mass_locked"), "expected a boolean");
        src.mass_locked = locked->get<bool>();
    }

    if (src.mass_locked) {
        if (find(j, "charge")) {
            fail(join(path, "charge"), "not allowed for mass-locked sources");
        }
        InnerVector dir = find(j, "charge_direction")
                              ? parse_inner(*find(j, "charge_direction"),
                                            join(path, "charge_direction"), D)
                              : InnerVector::axis(D, 0);
        const double n = dir.norm();
        if (n == 0.0) fail(join(path, "charge_direction"), "must be nonzero");
        // Leave already-unit vectors untouched so canonical output is a fixpoint.
        if (std::abs(n - 1.0) > 1e-12) dir *= 1.0 / n;
        src.charge_direction = dir;
        src.charge = dir * (src.mass * consts.c);
    } else {
        if (find(j, "charge_direction")) {
            fail(join(path, "charge_direction"),
                 "not allowed when mass_locked is false; give \"charge\"");
        }
        const json* q = find(j, "charge");
        if (!q) fail(join(path, "charge"), "required when mass_locked is false");
        src.charge = parse_inner(*q, join(path, "charge"), D);
        src.charge_direction = InnerVector(D);
    }
    return src;
}

TestParticleSpec parse_test_particle(const json& j, const std::string& path, std::size_t index,
                                     std::size_t n_sources) {
    require_object(j, path);
    require_keys(j, path, {"mass", "position", "velocity", "cos_theta", "label"});
    TestParticleSpec tp;
    tp.mass = number_at(j, "mass", path);
    if (!(tp.mass > 0.0)) fail(join(path, "mass"), "mass must be positive");
    tp.position = vec3_at(j, "position", path);
    tp.velocity = vec3_or(j, "velocity", path, {});
    tp.label = string_or(j, "label", path, "p" + std::to_string(index));
    if (tp.label.empty() ||
        tp.label.find_first_not_of(
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") !=
            std::string::npos) {
        fail(join(path, "label"), "labels use [A-Za-z0-9_-] only");
    }

    const json* ct = find(j, "cos_theta");
    if (!ct) {
        tp.cos_theta.assign(n_sources, -1.0);
    } else if (ct->is_number()) {
        tp.cos_theta.assign(n_sources, ct->get<double>());
    } else {
        tp.cos_theta = number_array(*ct, join(path, "cos_theta"));
        if (tp.cos_theta.size() != n_sources) {
            fail(join(path, "cos_theta"),
                 "expected one entry per source (" + std::to_string(n_sources) + ")");
        }
    }
    for (std::size_t i = 0; i < tp.cos_theta.size(); ++i) {
        if (!(tp.cos_theta[i] >= -1.0 && tp.cos_theta[i] <= 1.0)) {
            fail(ct && ct->is_array() ? elem(join(path, "cos_theta"), i)
                                      : join(path, "cos_theta"),
                 "cos_theta must lie in [-1, 1]");
        }
    }
    return tp;
}

OrbitConfig parse_orbit(const json& j, const std::string& path) {
    require_object(j, path);
    require_keys(j, path, {"mass", "radius", "v_hat"});
    OrbitConfig orbit;
    orbit.mass = number_at(j, "mass", path);
    orbit.radius = number_at(j, "radius", path);
    orbit.v_hat = number_at(j, "v_hat", path);
    if (!(orbit.mass > 0.0)) fail(join(path, "mass"), "mass must be positive");
    if (!(orbit.radius > 0.0)) fail(join(path, "radius"), "radius must be positive");
    if (!(orbit.v_hat > 0.0 && orbit.v_hat < 1.0)) {
        fail(join(path, "v_hat"), "v_hat must lie in (0, 1)");
    }
    return orbit;
}

// Orbit from the run spec or, failing that, the first circular source.
OrbitConfig resolve_orbit(const Scenario& sc, const std::string& context) {
    if (sc.run.orbit) return *sc.run.orbit;
    for (std::size_t i = 0; i < sc.sources.size(); ++i) {
        const SourceSpec& src = sc.sources[i];
        if (src.trajectory.kind() == Trajectory::Kind::Circular) {
            OrbitConfig orbit;
            orbit.mass = src.mass;
            orbit.radius = src.trajectory.radius();
            orbit.v_hat = std::abs(src.trajectory.omega()) * src.trajectory.radius() / sc.consts.c;
            if (!(orbit.v_hat > 0.0)) {
                fail(context, "circular source has omega = 0; cannot derive an orbit");
            }
            return orbit;
        }
    }
    fail(context, "needs an explicit \"orbit\" or a circular source");
}

RunSpec parse_run(const json& j, const std::string& path) {
    require_object(j, path);
    const std::string kind = string_or(j, "kind", path, "");
    RunSpec run;
    if (kind == "simulate") {
        run.kind = RunKind::Simulate;
        require_keys(j, path, {"kind", "dtau", "steps", "output_every"});
        run.dtau = number_at(j, "dtau", path);
        run.steps = integer_at(j, "steps", path);
        run.output_every = static_cast<int>(integer_or(j, "output_every", path, 1));
        if (!(run.dtau > 0.0)) fail(join(path, "dtau"), "must be positive");
        if (run.steps < 1) fail(join(path, "steps"), "must be >= 1");
        if (run.output_every < 1) fail(join(path, "output_every"), "must be >= 1");
    } else if (kind == "field-map") {
        run.kind = RunKind::FieldMap;
        require_keys(j, path, {"kind", "t", "grid"});
        run.t = number_or(j, "t", path, 0.0);
        const json* grid = find(j, "grid");
        if (!grid) fail(join(path, "grid"), "missing required grid");
        const std::string gpath = join(path, "grid");
        require_object(*grid, gpath);
        require_keys(*grid, gpath, {"min", "max", "counts"});
        run.grid.min = vec3_at(*grid, "min", gpath);
        run.grid.max = vec3_at(*grid, "max", gpath);
        const json* counts = find(*grid, "counts");
        if (!counts) fail(join(gpath, "counts"), "missing required counts");
        const std::vector<double> cv = number_array(*counts, join(gpath, "counts"));
        if (cv.size() != 3) fail(join(gpath, "counts"), "expected 3 entries");
        for (int i = 0; i < 3; ++i) {
            if (cv[static_cast<std::size_t>(i)] < 1.0 ||
                cv[static_cast<std::size_t>(i)] != std::floor(cv[static_cast<std::size_t>(i)])) {
                fail(elem(join(gpath, "counts"), static_cast<std::size_t>(i)),
                     "must be a positive integer");
            }
            run.grid.counts[i] = static_cast<int>(cv[static_cast<std::size_t>(i)]);
        }
        const long total = static_cast<long>(run.grid.counts[0]) * run.grid.counts[1] *
                           run.grid.counts[2];
        if (total > 2000000L) fail(join(gpath, "counts"), "grid too large (> 2e6 points)");
    } else if (kind == "radiation") {
        run.kind = RunKind::Radiation;
        require_keys(j, path, {"kind", "method", "orbit", "R_over_rho", "quadrature_order"});
        run.method = string_or(j, "method", path, "formula");
        if (run.method != "formula" && run.method != "flux") {
            fail(join(path, "method"), "expected \"formula\" or \"flux\"");
        }
        if (const json* orbit = find(j, "orbit")) {
            run.orbit = parse_orbit(*orbit, join(path, "orbit"));
        }
        run.R_over_rho = number_or(j, "R_over_rho", path, 1e4);
        run.quadrature_order = static_cast<int>(integer_or(j, "quadrature_order", path, 64));
        if (!(run.R_over_rho > 1.0)) fail(join(path, "R_over_rho"), "must be > 1");
        if (run.quadrature_order < 4) fail(join(path, "quadrature_order"), "must be >= 4");
    } else if (kind == "decay") {
        run.kind = RunKind::Decay;
        require_keys(j, path, {"kind", "orbit", "companion_mass", "duration", "dt", "power_scale",
                               "contact_rho"});
        if (const json* orbit = find(j, "orbit")) {
            run.orbit = parse_orbit(*orbit, join(path, "orbit"));
        }
        run.companion_mass = number_at(j, "companion_mass", path);
        run.duration = number_at(j, "duration", path);
        run.dt = number_at(j, "dt", path);
        run.power_scale = number_or(j, "power_scale", path, 1.0);
        run.contact_rho = number_or(j, "contact_rho", path, 0.0);
        if (!(run.companion_mass > 0.0)) fail(join(path, "companion_mass"), "must be positive");
        if (!(run.duration > 0.0)) fail(join(path, "duration"), "must be positive");
        if (!(run.dt > 0.0)) fail(join(path, "dt"), "must be positive");
        if (run.power_scale < 0.0) fail(join(path, "power_scale"), "must be >= 0");
        if (run.contact_rho < 0.0) fail(join(path, "contact_rho"), "must be >= 0");
    } else if (kind == "verify") {
        run.kind = RunKind::Verify;
        require_keys(j, path, {"kind", "clock"});
        if (const json* clock = find(j, "clock")) {
            const std::string cpath = join(path, "clock");
            require_object(*clock, cpath);
            require_keys(*clock, cpath, {"source_mass", "r"});
            ClockSpec cs;
            cs.source_mass = number_at(*clock, "source_mass", cpath);
            cs.r = number_at(*clock, "r", cpath);
            if (cs.source_mass < 0.0) fail(join(cpath, "source_mass"), "must be >= 0");
            if (!(cs.r > 0.0)) fail(join(cpath, "r"), "must be positive");
            run.clock = cs;
        }
    } else if (kind == "spectrum") {
        run.kind = RunKind::Spectrum;
        require_keys(j, path, {"kind", "n_max"});
        run.n_max = static_cast<int>(integer_or(j, "n_max", path, 3));
        if (run.n_max < 1) fail(join(path, "n_max"), "must be >= 1");
    } else {
        fail(join(path, "kind"),
             "expected one of \"simulate\", \"field-map\", \"radiation\", \"decay\", "
             "\"verify\", \"spectrum\"");
    }
    return run;
}

} // namespace

const char* run_kind_name(RunKind kind) {
    switch (kind) {
        case RunKind::Simulate: return "simulate";
        case RunKind::FieldMap: return "field-map";
        case RunKind::Radiation: return "radiation";
        case RunKind::Decay: return "decay";
        case RunKind::Verify: return "verify";
        case RunKind::Spectrum: return "spectrum";
    }
    return "?";
}

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("scenario is not valid JSON: ") + e.what());
    }
    require_object(doc, "scenario");
    require_keys(doc, "",
                 {"constants", "D", "g2over4pi", "seed", "sources", "test_particles", "run",
                  "outputs"});

    Scenario sc;
    sc.consts = parse_constants(find(doc, "constants"), "constants");
    sc.D = static_cast<int>(integer_or(doc, "D", "", 4));
    if (sc.D < 1 || sc.D > 8) fail("D", "inner dimension must be in [1, 8]");
    sc.g2_over_4pi = number_or(doc, "g2over4pi", "", 1.0);
    if (!(sc.g2_over_4pi > 0.0)) fail("g2over4pi", "must be positive");
    const long seed = integer_or(doc, "seed", "", 0);
    if (seed < 0) fail("seed", "must be >= 0");
    sc.seed = static_cast<std::uint64_t>(seed);

    if (const json* sources = find(doc, "sources")) {
        if (!sources->is_array()) fail("sources", "expected an array");
        for (std::size_t i = 0; i < sources->size(); ++i) {
            sc.sources.push_back(
                parse_source((*sources)[i], elem("sources", i), sc.D, sc.consts));
        }
    }
    if (const json* particles = find(doc, "test_particles")) {
        if (!particles->is_array()) fail("test_particles", "expected an array");
        std::set<std::string> labels;
        for (std::size_t i = 0; i < particles->size(); ++i) {
            TestParticleSpec tp = parse_test_particle((*particles)[i], elem("test_particles", i),
                                                      i, sc.sources.size());
            if (!labels.insert(tp.label).second) {
                fail(join(elem("test_particles", i), "label"),
                     "duplicate label \"" + tp.label + "\"");
            }
            if (!(norm(tp.velocity) < sc.consts.c)) {
                fail(join(elem("test_particles", i), "velocity"), "must be subluminal");
            }
            sc.test_particles.push_back(std::move(tp));
        }
    }

    const json* run = find(doc, "run");
    if (!run) fail("run", "missing required run spec");
    sc.run = parse_run(*run, "run");

    // Cross-field requirements per run kind.
    switch (sc.run.kind) {
        case RunKind::Simulate:
            if (sc.sources.empty()) fail("sources", "simulate needs at least one source");
            if (sc.test_particles.empty()) {
                fail("test_particles", "simulate needs at least one test particle");
            }
            break;
        case RunKind::FieldMap:
            if (sc.sources.empty()) fail("sources", "field-map needs at least one source");
            break;
        case RunKind::Radiation:
        case RunKind::Decay:
            sc.run.orbit = resolve_orbit(sc, "run.orbit");
            break;
        case RunKind::Verify:
        case RunKind::Spectrum:
            break;
    }

    if (const json* outputs = find(doc, "outputs")) {
        if (!outputs->is_array()) fail("outputs", "expected an array of artifact names");
        const std::vector<std::string> allowed = allowed_artifacts(sc);
        for (std::size_t i = 0; i < outputs->size(); ++i) {
            if (!(*outputs)[i].is_string()) fail(elem("outputs", i), "expected a string");
            const std::string name = (*outputs)[i].get<std::string>();
            if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
                std::string list;
                for (const std::string& a : allowed) list += (list.empty() ? "" : ", ") + a;
                fail(elem("outputs", i), "unknown artifact \"" + name + "\"; allowed: " + list);
            }
            sc.outputs.push_back(name);
        }
    }
    return sc;
}

namespace {

json trajectory_json(const Trajectory& tr) {
    json j;
    switch (tr.kind()) {
        case Trajectory::Kind::Static: {
            j["kind"] = "static";
            const Vec3 p = tr.position(0.0);
            j["position"] = {p.x, p.y, p.z};
            break;
        }
        case Trajectory::Kind::Uniform: {
            j["kind"] = "uniform";
            // Re-anchored at t0 = 0 so the emitted form is a parse fixpoint.
            const Vec3 p = tr.position(0.0);
            const Vec3 v = tr.velocity(0.0);
            j["position"] = {p.x, p.y, p.z};
            j["velocity"] = {v.x, v.y, v.z};
            j["t0"] = 0.0;
            break;
        }
        case Trajectory::Kind::Circular: {
            j["kind"] = "circular";
            const Vec3 cc = tr.center();
            j["center"] = {cc.x, cc.y, cc.z};
            j["radius"] = tr.radius();
            j["omega"] = tr.omega();
            j["phase"] = tr.phase();
            break;
        }
        case Trajectory::Kind::Tabulated: {
            j["kind"] = "tabulated";
            json samples = json::array();
            for (const TrajectorySample& ts : tr.samples()) {
                json s;
                s["t"] = ts.t;
                s["position"] = {ts.position.x, ts.position.y, ts.position.z};
                s["velocity"] = {ts.velocity.x, ts.velocity.y, ts.velocity.z};
                samples.push_back(s);
            }
            j["samples"] = samples;
            break;
        }
    }
    return j;
}

} // namespace

std::string canonical_scenario_json(const Scenario& sc) {
    json doc;
    doc["constants"] = {{"c", sc.consts.c}, {"G", sc.consts.G}, {"hbar", sc.consts.hbar}};
    doc["D"] = sc.D;
    doc["g2over4pi"] = sc.g2_over_4pi;
    doc["seed"] = sc.seed;

    json sources = json::array();
    for (const SourceSpec& src : sc.sources) {
        json s;
        s["mass"] = src.mass;
        s["trajectory"] = trajectory_json(src.trajectory);
        s["mass_locked"] = src.mass_locked;
        if (src.mass_locked) {
            s["charge_direction"] = src.charge_direction.components();
        } else {
            s["charge"] = src.charge.components();
        }
        sources.push_back(s);
    }
    doc["sources"] = sources;

    json particles = json::array();
    for (const TestParticleSpec& tp : sc.test_particles) {
        json p;
        p["mass"] = tp.mass;
        p["position"] = {tp.position.x, tp.position.y, tp.position.z};
        p["velocity"] = {tp.velocity.x, tp.velocity.y, tp.velocity.z};
        p["cos_theta"] = tp.cos_theta;
        p["label"] = tp.label;
        particles.push_back(p);
    }
    doc["test_particles"] = particles;

    json run;
    run["kind"] = run_kind_name(sc.run.kind);
    switch (sc.run.kind) {
        case RunKind::Simulate:
            run["dtau"] = sc.run.dtau;
            run["steps"] = sc.run.steps;
            run["output_every"] = sc.run.output_every;
            break;
        case RunKind::FieldMap:
            run["t"] = sc.run.t;
            run["grid"] = {{"min", {sc.run.grid.min.x, sc.run.grid.min.y, sc.run.grid.min.z}},
                           {"max", {sc.run.grid.max.x, sc.run.grid.max.y, sc.run.grid.max.z}},
                           {"counts",
                            {sc.run.grid.counts[0], sc.run.grid.counts[1], sc.run.grid.counts[2]}}};
            break;
        case RunKind::Radiation:
            run["method"] = sc.run.method;
            if (sc.run.orbit) {
                run["orbit"] = {{"mass", sc.run.orbit->mass},
                                {"radius", sc.run.orbit->radius},
                                {"v_hat", sc.run.orbit->v_hat}};
            }
            run["R_over_rho"] = sc.run.R_over_rho;
            run["quadrature_order"] = sc.run.quadrature_order;
            break;
        case RunKind::Decay:
            if (sc.run.orbit) {
                run["orbit"] = {{"mass", sc.run.orbit->mass},
                                {"radius", sc.run.orbit->radius},
                                {"v_hat", sc.run.orbit->v_hat}};
            }
            run["companion_mass"] = sc.run.companion_mass;
            run["duration"] = sc.run.duration;
            run["dt"] = sc.run.dt;
            run["power_scale"] = sc.run.power_scale;
            run["contact_rho"] = sc.run.contact_rho;
            break;
        case RunKind::Verify:
            if (sc.run.clock) {
                run["clock"] = {{"source_mass", sc.run.clock->source_mass},
                                {"r", sc.run.clock->r}};
            }
            break;
        case RunKind::Spectrum:
            run["n_max"] = sc.run.n_max;
            break;
    }
    doc["run"] = run;
    doc["outputs"] = sc.outputs;
    return doc.dump(2) + "\n";
}

std::vector<std::string> default_artifacts(const Scenario& sc) {
    std::vector<std::string> out;
    switch (sc.run.kind) {
        case RunKind::Simulate:
            for (const TestParticleSpec& tp : sc.test_particles) {
                out.push_back("trajectory_" + tp.label + ".csv");
            }
            break;
        case RunKind::FieldMap:
            out.push_back("field_map.csv");
            break;
        case RunKind::Radiation:
            out.push_back("radiation.json");
            break;
        case RunKind::Decay:
            out.push_back("decay.csv");
            break;
        case RunKind::Verify:
            out.push_back("verify_report.json");
            if (sc.run.clock) out.push_back("clock_report.json");
            break;
        case RunKind::Spectrum:
            out.push_back("spectrum.csv");
            break;
    }
    return out;
}

std::vector<std::string> allowed_artifacts(const Scenario& sc) {
    std::vector<std::string> out = default_artifacts(sc);
    if (sc.run.kind == RunKind::Verify) out.push_back("gauge_rules.txt");
    return out;
}

} // namespace isodyn
