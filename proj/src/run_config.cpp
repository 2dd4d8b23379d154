#include "spinsync/run_config.hpp"

#include <fstream>
#include <set>

namespace spinsync {

namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const std::string& scope,
                        const std::set<std::string>& known) {
    for (const auto& [key, _] : obj.items()) {
        if (!known.count(key)) {
            throw ConfigError("unknown field '" + (scope.empty() ? key : scope + "." + key) +
                              "'");
        }
    }
}

double get_number(const json& obj, const std::string& scope, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number()) {
        throw ConfigError("field '" + scope + "." + key + "' must be a number");
    }
    return obj.at(key).get<double>();
}

int get_int(const json& obj, const std::string& scope, const std::string& key,
            int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer()) {
        throw ConfigError("field '" + scope + "." + key + "' must be an integer");
    }
    return obj.at(key).get<int>();
}

std::string get_string(const json& obj, const std::string& scope, const std::string& key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_string()) {
        throw ConfigError("field '" + scope + "." + key + "' must be a string");
    }
    return obj.at(key).get<std::string>();
}

PhysicalConstants parse_constants(const json& j) {
    PhysicalConstants c;
    if (!j.contains("constants")) return c;
    const json& obj = j.at("constants");
    require_known_keys(obj, "constants",
                       {"gamma_aux_dprime_mhz", "gamma_aux_prime_mhz",
                        "zeeman_ground_mhz_per_gauss", "zeeman_excited_mhz_per_gauss"});
    c.gamma_aux_dprime = mhz_to_angular(get_number(obj, "constants", "gamma_aux_dprime_mhz",
                                                   angular_to_mhz(c.gamma_aux_dprime)));
    c.gamma_aux_prime = mhz_to_angular(get_number(obj, "constants", "gamma_aux_prime_mhz",
                                                  angular_to_mhz(c.gamma_aux_prime)));
    c.zeeman_ground = mhz_to_angular(get_number(obj, "constants", "zeeman_ground_mhz_per_gauss",
                                                angular_to_mhz(c.zeeman_ground)));
    c.zeeman_excited = mhz_to_angular(get_number(obj, "constants", "zeeman_excited_mhz_per_gauss",
                                                 angular_to_mhz(c.zeeman_excited)));
    if (c.gamma_aux_dprime <= 0 || c.gamma_aux_prime <= 0 || c.zeeman_ground <= 0 ||
        c.zeeman_excited <= 0) {
        throw ConfigError("field 'constants': all constants must be strictly positive");
    }
    return c;
}

DriveConfig parse_drive(const json& j, const PhysicalConstants& constants) {
    DriveConfig d;
    if (!j.contains("drive")) return d;
    const json& obj = j.at("drive");
    require_known_keys(obj, "drive",
                       {"omega_plus1_mhz", "omega_0_mhz", "omega_minus1_mhz",
                        "omega_prime_mhz", "phi_plus1", "phi_0", "phi_minus1", "phi_prime",
                        "delta_b_mhz", "delta_b_prime_mhz", "b_gauss", "delta_pi_dprime_mhz",
                        "delta_sigma_dprime_mhz", "delta_pi_prime_mhz"});
    d.omega_plus1 = mhz_to_angular(get_number(obj, "drive", "omega_plus1_mhz", 0.0));
    d.omega_0 = mhz_to_angular(get_number(obj, "drive", "omega_0_mhz", 0.0));
    d.omega_minus1 = mhz_to_angular(get_number(obj, "drive", "omega_minus1_mhz", 0.0));
    d.omega_prime = mhz_to_angular(get_number(obj, "drive", "omega_prime_mhz", 0.0));
    if (d.omega_plus1 < 0 || d.omega_0 < 0 || d.omega_minus1 < 0 || d.omega_prime < 0) {
        throw ConfigError("field 'drive': Rabi magnitudes must be >= 0");
    }
    d.phi_plus1 = get_number(obj, "drive", "phi_plus1", 0.0);
    d.phi_0 = get_number(obj, "drive", "phi_0", 0.0);
    d.phi_minus1 = get_number(obj, "drive", "phi_minus1", 0.0);
    d.phi_prime = get_number(obj, "drive", "phi_prime", 0.0);
    d.delta_pi_dprime = mhz_to_angular(get_number(obj, "drive", "delta_pi_dprime_mhz", 0.0));
    d.delta_sigma_dprime =
        mhz_to_angular(get_number(obj, "drive", "delta_sigma_dprime_mhz", 0.0));
    d.delta_pi_prime = mhz_to_angular(get_number(obj, "drive", "delta_pi_prime_mhz", 0.0));

    if (obj.contains("b_gauss") && obj.contains("delta_b_mhz")) {
        throw ConfigError("field 'drive': give either b_gauss or delta_b_mhz, not both");
    }
    if (obj.contains("b_gauss")) {
        const auto [db, dbp] =
            zeeman_shifts(get_number(obj, "drive", "b_gauss", 0.0), constants);
        d.delta_b = db;
        d.delta_b_prime = dbp;
    } else {
        d.delta_b = mhz_to_angular(get_number(obj, "drive", "delta_b_mhz", 0.0));
        d.delta_b_prime = default_delta_b_prime(d.delta_b, constants);
    }
    if (obj.contains("delta_b_prime_mhz")) {
        d.delta_b_prime = mhz_to_angular(get_number(obj, "drive", "delta_b_prime_mhz", 0.0));
    }
    return d;
}

IdealSpinModel parse_ideal(const json& j) {
    IdealSpinModel m;
    if (!j.contains("ideal")) return m;
    const json& obj = j.at("ideal");
    require_known_keys(obj, "ideal",
                       {"delta_mhz", "omega_mhz", "phi_s", "gamma_g_mhz", "gamma_d_mhz"});
    m.delta = mhz_to_angular(get_number(obj, "ideal", "delta_mhz", 0.0));
    m.omega = mhz_to_angular(get_number(obj, "ideal", "omega_mhz", 0.0));
    m.phi_s = get_number(obj, "ideal", "phi_s", 0.0);
    m.gamma_g = mhz_to_angular(get_number(obj, "ideal", "gamma_g_mhz", 0.0));
    m.gamma_d = mhz_to_angular(get_number(obj, "ideal", "gamma_d_mhz", 0.0));
    if (m.gamma_g < 0 || m.gamma_d < 0) {
        throw ConfigError("field 'ideal': rates must be >= 0");
    }
    return m;
}

SqVariant parse_variant(const std::string& s) {
    if (s == "eq20") return SqVariant::Eq20;
    if (s == "eq22") return SqVariant::Eq22;
    if (s == "eq23") return SqVariant::Eq23;
    if (s == "eq24") return SqVariant::Eq24;
    if (s == "eq25") return SqVariant::Eq25;
    if (s == "eq26") return SqVariant::Eq26;
    if (s == "eq27") return SqVariant::Eq27;
    throw ConfigError("field 'solver.variant': unknown variant '" + s + "'");
}

} // namespace

RunConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("configuration root must be a JSON object");
    }
    require_known_keys(j, "",
                       {"model", "drive", "constants", "ideal", "sweep", "beta", "approach",
                        "solver", "husimi", "evolve", "jobs"});
    RunConfig config;

    const std::string model = get_string(j, "", "model", "effective");
    if (model == "full") config.model = ModelKind::Full;
    else if (model == "effective") config.model = ModelKind::Effective;
    else if (model == "ideal") config.model = ModelKind::Ideal;
    else if (model == "expanded-ideal") config.model = ModelKind::ExpandedIdeal;
    else throw ConfigError("field 'model': unknown model '" + model + "'");

    config.constants = parse_constants(j);
    config.drive = parse_drive(j, config.constants);
    config.ideal = parse_ideal(j);

    if (j.contains("sweep")) {
        const json& obj = j.at("sweep");
        require_known_keys(obj, "sweep", {"variable", "start", "stop", "points"});
        SweepSpec sweep;
        const std::string var = get_string(obj, "sweep", "variable", "");
        if (var == "alpha") sweep.variable = SweepSpec::Variable::Alpha;
        else if (var == "delta_b") sweep.variable = SweepSpec::Variable::DeltaB;
        else if (var == "beta") sweep.variable = SweepSpec::Variable::Beta;
        else throw ConfigError("field 'sweep.variable': expected alpha, delta_b or beta");
        sweep.start = get_number(obj, "sweep", "start", 0.0);
        sweep.stop = get_number(obj, "sweep", "stop", 0.0);
        sweep.points = get_int(obj, "sweep", "points", 0);
        if (sweep.points < 2) {
            throw ConfigError("field 'sweep.points': need at least 2 points");
        }
        config.sweep = sweep;
    }

    config.beta = get_number(j, "", "beta", 1.0);
    if (!(config.beta >= 0.0 && config.beta <= 1.0)) {
        throw ConfigError("field 'beta': must lie in [0, 1]");
    }
    config.approach = get_int(j, "", "approach", 1);
    if (config.approach != 1 && config.approach != 2) {
        throw ConfigError("field 'approach': must be 1 or 2");
    }

    if (j.contains("solver")) {
        const json& obj = j.at("solver");
        require_known_keys(obj, "solver", {"kind", "order", "variant"});
        const std::string kind = get_string(obj, "solver", "kind", "exact");
        if (kind == "exact") config.solver.kind = SolverSpec::Kind::Exact;
        else if (kind == "perturbative") config.solver.kind = SolverSpec::Kind::Perturbative;
        else if (kind == "closed-form") config.solver.kind = SolverSpec::Kind::ClosedForm;
        else throw ConfigError("field 'solver.kind': expected exact, perturbative or closed-form");
        config.solver.order = get_int(obj, "solver", "order", 1);
        if (config.solver.order < 0) {
            throw ConfigError("field 'solver.order': must be >= 0");
        }
        config.solver.variant = parse_variant(get_string(obj, "solver", "variant", "eq20"));
    }

    if (j.contains("husimi")) {
        const json& obj = j.at("husimi");
        require_known_keys(obj, "husimi", {"n_theta", "n_phi"});
        config.husimi.n_theta = get_int(obj, "husimi", "n_theta", 181);
        config.husimi.n_phi = get_int(obj, "husimi", "n_phi", 360);
        if (config.husimi.n_theta < 3 || config.husimi.n_phi < 4) {
            throw ConfigError("field 'husimi': grid too coarse");
        }
    }

    if (j.contains("evolve")) {
        const json& obj = j.at("evolve");
        require_known_keys(obj, "evolve", {"t_max_us", "points", "initial"});
        config.evolve.t_max = get_number(obj, "evolve", "t_max_us", 2.0);
        config.evolve.points = get_int(obj, "evolve", "points", 21);
        config.evolve.initial = get_string(obj, "evolve", "initial", "state1");
        if (config.evolve.t_max <= 0) {
            throw ConfigError("field 'evolve.t_max_us': must be > 0");
        }
        if (config.evolve.points < 2) {
            throw ConfigError("field 'evolve.points': need at least 2 points");
        }
    }

    config.jobs = get_int(j, "", "jobs", 1);
    if (config.jobs < 1) {
        throw ConfigError("field 'jobs': must be >= 1");
    }
    return config;
}

nlohmann::json apply_overrides(json j, const std::vector<std::string>& sets) {
    for (const std::string& entry : sets) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("override '" + entry + "' is not of the form key=value");
        }
        const std::string path = entry.substr(0, eq);
        const std::string raw = entry.substr(eq + 1);
        json value;
        try {
            value = json::parse(raw);
        } catch (const json::parse_error&) {
            value = raw; // plain string
        }
        json* node = &j;
        size_t begin = 0;
        while (true) {
            const size_t dot = path.find('.', begin);
            const std::string key = path.substr(begin, dot - begin);
            if (key.empty()) {
                throw ConfigError("override '" + entry + "' has an empty path segment");
            }
            if (dot == std::string::npos) {
                (*node)[key] = value;
                break;
            }
            node = &(*node)[key];
            begin = dot + 1;
        }
    }
    return j;
}

RunConfig load_config_file(const std::string& path, const std::vector<std::string>& overrides) {
    json j = json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot open config file '" + path + "'");
        }
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw ConfigError("config file '" + path + "': " + e.what());
        }
    }
    return parse_config(apply_overrides(std::move(j), overrides));
}

} // namespace spinsync
