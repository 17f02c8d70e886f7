#pragma once

// Scenario configuration files. The grammar is a strict subset of YAML; see
// README.md for every section and key. Unknown keys, wrong types and missing
// required keys raise ConfigError with file:line:column context.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fockdyn/dimensional.hpp"
#include "fockdyn/gravonon.hpp"
#include "fockdyn/meanfield.hpp"
#include "fockdyn/models.hpp"

namespace fockdyn::scenario {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Sampling {
    double t_min = 0.0;
    std::optional<double> t_max;  // chooser default: 5 / gamma
    std::size_t points = 2048;
};

enum class ChooserInitial { zero_state, q0, r0, kproj };

struct ChooserScenario {
    models::ChooserParams params;
    /// Delta is recomputed as pi |U| (which makes gamma = |U|) whenever U changes.
    bool delta_self_consistent = false;
    ChooserInitial initial = ChooserInitial::zero_state;
    Sampling sampling;

    /// Fills in delta for the self-consistent case and validates.
    void finalize();
};

struct TelegraphScenario {
    models::TelegraphParams params;
    int initial_site = 1;  // 1 or 2
    Sampling sampling;
};

struct GravononScenario {
    gravonon::SiteBasis basis;
};

struct MeanFieldScenario {
    meanfield::GridState state;
    double dt = 0.0;
    std::size_t steps = 0;
    std::size_t sample_every = 1;
};

struct DimensionalScenario {
    dimensional::PhysicalConstants constants;
    std::vector<double> radii = dimensional::kTableRadii;
    double probe_mass = 1e4;        // M in the potential comparison
    double probe_distance = 6.0;    // r
    double compactification = 1e4;  // a
    double kappa = 10.0;
    double box_length = 1e7;        // L
    double adparticle_mass = 2000.0;
    double graviton_k = 10.0;
    double energy_spread_ev = 1e-3;
    double geometry_spread = 1e-1;
    double n_sites = 1e20;
    double geometry_resolution = 1e-5;
};

enum class SweepModel { chooser, telegraph };

struct SweepScenario {
    SweepModel model = SweepModel::chooser;
    ChooserScenario chooser;
    TelegraphScenario telegraph;
    std::vector<std::pair<std::string, std::vector<double>>> vary;
    std::size_t max_points = 10000;
};

using ScenarioBody = std::variant<ChooserScenario, TelegraphScenario, GravononScenario, MeanFieldScenario,
                                  DimensionalScenario, SweepScenario>;

struct ScenarioConfig {
    std::string scenario;
    std::optional<std::string> output;
    ScenarioBody body;
};

/// Parses YAML text. `origin` names the source in diagnostics; relative file
/// references are resolved against `base_dir`.
ScenarioConfig parse_config(const std::string& text, const std::string& origin,
                            const std::filesystem::path& base_dir);

ScenarioConfig load_config(const std::filesystem::path& path);

/// Keys accepted in sweep `vary` lists for each model.
const std::vector<std::string>& sweep_keys(SweepModel model);

/// Applies one swept value to a scenario copy. Ratio keys (W_over_U, V_over_U)
/// are applied after U, so key order in the grid does not matter.
void apply_sweep_values(ChooserScenario& s, const std::vector<std::pair<std::string, double>>& values);
void apply_sweep_values(TelegraphScenario& s, const std::vector<std::pair<std::string, double>>& values);

}  // namespace fockdyn::scenario
