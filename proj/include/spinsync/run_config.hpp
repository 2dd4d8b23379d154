#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinsync/effective.hpp"
#include "spinsync/rb87.hpp"
#include "spinsync/steady.hpp"

namespace spinsync {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ModelKind { Full, Effective, Ideal, ExpandedIdeal };

struct SolverSpec {
    enum class Kind { Exact, Perturbative, ClosedForm };
    Kind kind = Kind::Exact;
    int order = 1;
    SqVariant variant = SqVariant::Eq20;
};

struct SweepSpec {
    enum class Variable { Alpha, DeltaB, Beta };
    Variable variable = Variable::Alpha;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
};

struct HusimiSpec {
    int n_theta = 181;
    int n_phi = 360;
};

struct EvolveSpec {
    double t_max = 2.0; // us
    int points = 21;
    std::string initial = "state1";
};

// Parsed run configuration; drive and constants already converted to rad/us.
struct RunConfig {
    ModelKind model = ModelKind::Effective;
    DriveConfig drive;
    PhysicalConstants constants;
    IdealSpinModel ideal;
    std::optional<SweepSpec> sweep;
    double beta = 1.0;
    int approach = 1;
    SolverSpec solver;
    HusimiSpec husimi;
    EvolveSpec evolve;
    int jobs = 1;
};

// Throws ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::json& j);

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& overrides);

// Applies "dotted.path=value" overrides onto the raw JSON document.
nlohmann::json apply_overrides(nlohmann::json j, const std::vector<std::string>& sets);

} // namespace spinsync
