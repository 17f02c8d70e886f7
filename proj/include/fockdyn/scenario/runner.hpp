#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fockdyn/analysis.hpp"
#include "fockdyn/models.hpp"
#include "fockdyn/propagator.hpp"
#include "fockdyn/scenario/config.hpp"

namespace fockdyn::scenario {

/// Exit statuses of the command-line runner.
enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_contract = 3,
    exit_resource = 4,
};

struct OutputFile {
    std::string suffix;  // appended to the output prefix, e.g. ".csv"
    std::string content;
};

struct ScenarioResult {
    std::vector<OutputFile> files;
    std::string summary;  // short human-readable digest for stdout
};

/// key = value lines in insertion order.
class Report {
public:
    void add(const std::string& key, double value);
    void add(const std::string& key, const std::string& value);
    void add_count(const std::string& key, std::size_t value);
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

/// Evenly spaced samples over [t_min, t_max]; t_max falls back to default_t_max.
std::vector<double> time_grid(const Sampling& s, double default_t_max);

/// Hamiltonian, initial state, time grid and weight groups of a model scenario.
struct PreparedSystem {
    models::HamiltonianMatrix h;
    Eigen::VectorXcd psi0;
    std::vector<double> times;
    propagator::IndexGroups groups;
};

/// Also returns gamma = pi U^2 / delta (0 without a band) through `gamma`.
PreparedSystem prepare_chooser(const ChooserScenario& s, double& gamma);
PreparedSystem prepare_telegraph(const TelegraphScenario& s);

struct ChooserRun {
    propagator::TimeSeries series;  // w_Q0, w_R0, w_Kproj, w_band
    std::vector<double> analytic_band;
    double gamma = 0.0;
    double t_max = 0.0;
    double max_deviation = 0.0;  // sup |w_band - analytic| over t >= 1/gamma
    double plateau = 0.0;        // mean w_band over the last 2/gamma of the run
    double analytic_plateau = 0.0;
    double decay_rate = 0.0;     // fitted rate of w_Kproj over [1/gamma, 3/gamma]
    double norm_error = 0.0;     // max |sum of channels - 1|
    std::size_t basis_size = 0;
};

ChooserRun simulate_chooser(const ChooserScenario& s);

struct TelegraphRun {
    propagator::TimeSeries series;  // w_grav_site1, w_grav_site2, w_matter_site1, w_matter_site2
    analysis::TelegraphScore score;
    double norm_error = 0.0;
    std::size_t basis_size = 0;
};

TelegraphRun simulate_telegraph(const TelegraphScenario& s);

/// Computes every output in memory. Throws on any failure before anything is written.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

/// Writes prefix + suffix for every file. Each file goes to a temporary name
/// first; the renames happen only after all writes succeeded, and on failure
/// the temporaries are removed, so no partial output set is left behind.
void write_outputs(const std::string& prefix, const std::vector<OutputFile>& files);

}  // namespace fockdyn::scenario
