#include "fockdyn/scenario/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <variant>

#include "fockdyn/analytic.hpp"
#include "fockdyn/csv.hpp"
#include "fockdyn/dimensional.hpp"
#include "fockdyn/errors.hpp"
#include "fockdyn/fock.hpp"
#include "fockdyn/gravonon.hpp"
#include "fockdyn/meanfield.hpp"
#include "fockdyn/models.hpp"
#include "fockdyn/scenario/sweep.hpp"

namespace fockdyn::scenario {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void Report::add(const std::string& key, double value) { lines_.emplace_back(key, csv::format(value)); }
void Report::add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
void Report::add_count(const std::string& key, std::size_t value) { lines_.emplace_back(key, std::to_string(value)); }

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : lines_) out += k + " = " + v + "\n";
    return out;
}

std::vector<double> time_grid(const Sampling& s, double default_t_max) {
    const double t_max = s.t_max.value_or(default_t_max);
    if (!(t_max >= s.t_min)) throw ParameterError("sampling: t_max must be >= t_min");
    return propagator::linear_grid(s.t_min, t_max, s.points);
}

PreparedSystem prepare_chooser(const ChooserScenario& s, double& gamma) {
    const auto& p = s.params;
    p.validate();
    gamma = p.N > 0 ? analytic::gamma_from(p.U, p.delta) : 0.0;
    if (!(gamma > 0.0) && !s.sampling.t_max) {
        throw ParameterError("chooser: sampling.t_max is required when the band width gamma is zero");
    }
    PreparedSystem sys;
    sys.times = time_grid(s.sampling, gamma > 0.0 ? 5.0 / gamma : 0.0);
    sys.h = models::build_chooser(p);
    sys.psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sys.h.dim()));
    switch (s.initial) {
        case ChooserInitial::zero_state: {
            const auto c = analytic::zero_state_coeffs(p.V, p.W);
            for (int i = 0; i < 3; ++i) sys.psi0(i) = c[static_cast<std::size_t>(i)];
            break;
        }
        case ChooserInitial::q0: sys.psi0(models::chooser_index::q0) = 1.0; break;
        case ChooserInitial::r0: sys.psi0(models::chooser_index::r0) = 1.0; break;
        case ChooserInitial::kproj: sys.psi0(models::chooser_index::kproj) = 1.0; break;
    }
    sys.groups = {{"w_Q0", {models::chooser_index::q0}},
                  {"w_R0", {models::chooser_index::r0}},
                  {"w_Kproj", {models::chooser_index::kproj}},
                  {"w_band", {}}};
    for (std::size_t i = models::chooser_index::band_begin; i < sys.h.dim(); ++i) sys.groups.back().second.push_back(i);
    return sys;
}

ChooserRun simulate_chooser(const ChooserScenario& s) {
    const auto& p = s.params;
    ChooserRun run;
    const auto sys = prepare_chooser(s, run.gamma);
    const auto& times = sys.times;
    run.t_max = times.back();
    run.basis_size = sys.h.dim();

    const auto d = propagator::diagonalize(sys.h);
    run.series = propagator::occupation_weights(d, sys.psi0, times, sys.groups);

    for (std::size_t m = 0; m < times.size(); ++m) {
        double total = 0.0;
        for (const auto& [name, values] : run.series.channels) total += values[m];
        run.norm_error = std::max(run.norm_error, std::abs(total - 1.0));
    }

    const auto& band = run.series.channel("w_band");
    const auto& kproj = run.series.channel("w_Kproj");
    if (run.gamma > 0.0 && p.U != 0.0) {
        for (double t : times) run.analytic_band.push_back(analytic::band_weight(t, p.U, p.W, run.gamma));
        const double tg = 1.0 / run.gamma;
        run.analytic_plateau = 1.0 - (p.W * p.W) / (p.U * p.U);
        run.max_deviation = times.back() >= tg ? analysis::max_abs_deviation(times, band, run.analytic_band, tg) : kNaN;
        const double t0 = std::max(times.front(), run.t_max - 2.0 * tg);
        run.plateau = analysis::window_mean(times, band, t0, run.t_max);
        try {
            run.decay_rate = analysis::log_linear_rate(times, kproj, tg, 3.0 * tg);
        } catch (const ContractViolation&) {
            run.decay_rate = kNaN;
        }
    } else {
        run.analytic_band.assign(times.size(), kNaN);
        run.max_deviation = run.plateau = run.analytic_plateau = run.decay_rate = kNaN;
    }
    return run;
}

PreparedSystem prepare_telegraph(const TelegraphScenario& s) {
    const auto& p = s.params;
    p.validate();
    if (!s.sampling.t_max) throw ParameterError("telegraph: sampling.t_max is required");
    PreparedSystem sys;
    sys.times = time_grid(s.sampling, 0.0);

    const auto space = models::telegraph_space(p);
    const auto configs = fock::enumerate_configs(space);
    const auto layout = models::telegraph_layout(p);
    if (configs.size() > propagator::kMaxDenseDim) {
        throw SizeLimitError("telegraph: basis of " + std::to_string(configs.size()) +
                             " configurations exceeds the dense cap " + std::to_string(propagator::kMaxDenseDim));
    }
    sys.h = models::build_telegraph(p, space);

    fock::OccupationConfig start{std::vector<int>(space.n_matter_modes, 0), std::vector<int>(space.n_gravonon_modes, 0)};
    start.at(models::TelegraphLayout::g(static_cast<std::size_t>(s.initial_site - 1))) = 1;
    start.at(models::TelegraphLayout::grav(0)) = 1;
    start.at(models::TelegraphLayout::grav(1)) = 1;
    const auto it = std::lower_bound(configs.begin(), configs.end(), start);
    if (it == configs.end() || *it != start) throw ContractViolation("telegraph: initial configuration not in basis");
    sys.psi0 = propagator::basis_state(configs.size(), static_cast<std::size_t>(it - configs.begin()));

    sys.groups = {{"w_grav_site1", {}}, {"w_grav_site2", {}}, {"w_matter_site1", {}}, {"w_matter_site2", {}}};
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& c = configs[i];
        for (std::size_t site = 0; site < 2; ++site) {
            bool continuum = false;
            for (std::size_t l = 0; l < layout.band_size(site); ++l) continuum = continuum || c.at(layout.k(site, l)) > 0;
            if (continuum) sys.groups[site].second.push_back(i);
            if (c.at(models::TelegraphLayout::g(site)) > 0 || c.at(models::TelegraphLayout::w(site)) > 0) {
                sys.groups[2 + site].second.push_back(i);
            }
        }
    }
    return sys;
}

TelegraphRun simulate_telegraph(const TelegraphScenario& s) {
    const auto sys = prepare_telegraph(s);
    TelegraphRun run;
    run.basis_size = sys.h.dim();
    const auto d = propagator::diagonalize(sys.h);
    run.series = propagator::occupation_weights(d, sys.psi0, sys.times, sys.groups);
    const auto& m1 = run.series.channel("w_matter_site1");
    const auto& m2 = run.series.channel("w_matter_site2");
    for (std::size_t m = 0; m < sys.times.size(); ++m) {
        run.norm_error = std::max(run.norm_error, std::abs(m1[m] + m2[m] - 1.0));
    }
    run.score = analysis::score_telegraph(run.series.channel("w_grav_site1"), run.series.channel("w_grav_site2"));
    return run;
}

namespace {

ScenarioResult chooser_outputs(const ChooserScenario& s) {
    const auto run = simulate_chooser(s);
    Report r;
    r.add("scenario", std::string("chooser"));
    r.add_count("basis_size", run.basis_size);
    r.add("V", s.params.V);
    r.add("W", s.params.W);
    r.add("U", s.params.U);
    r.add_count("N", s.params.N);
    r.add("delta", s.params.delta);
    r.add("alpha", s.params.alpha);
    r.add("gamma", run.gamma);
    r.add("t_max", run.t_max);
    r.add("max_abs_deviation_band_vs_analytic_t_ge_1_over_gamma", run.max_deviation);
    r.add("band_weight_plateau", run.plateau);
    r.add("analytic_plateau", run.analytic_plateau);
    r.add("kproj_weight_decay_rate", run.decay_rate);
    r.add("analytic_kproj_weight_decay_rate", 2.0 * run.gamma);
    r.add("max_norm_error", run.norm_error);
    ScenarioResult out;
    out.files.push_back({".csv", csv::from_time_series(run.series).str()});
    out.files.push_back({"_report.txt", r.str()});
    out.summary = r.str();
    return out;
}

ScenarioResult telegraph_outputs(const TelegraphScenario& s) {
    const auto run = simulate_telegraph(s);
    Report r;
    r.add("scenario", std::string("telegraph"));
    r.add_count("basis_size", run.basis_size);
    r.add("hop", s.params.hop);
    r.add_count("alternations", run.score.alternations);
    for (std::size_t i = 0; i < 2; ++i) {
        const std::string site = "site" + std::to_string(i + 1);
        r.add("plateau_high_" + site, run.score.plateaus[i].high);
        r.add("plateau_low_" + site, run.score.plateaus[i].low);
        r.add("fraction_near_plateau_" + site, run.score.fraction[i]);
    }
    r.add("contrast", run.score.contrast);
    r.add("max_norm_error", run.norm_error);
    for (const auto& note : run.series.notes) r.add("note", note);
    ScenarioResult out;
    out.files.push_back({".csv", csv::from_time_series(run.series).str()});
    out.files.push_back({"_report.txt", r.str()});
    out.summary = r.str();
    return out;
}

ScenarioResult gravonon_outputs(const GravononScenario& s) {
    const auto omega = gravonon::build_omega(s.basis);
    const auto spec = gravonon::diagonalize_modes(omega);
    csv::Table spectrum;
    spectrum.header = {"mode", "frequency"};
    spectrum.integer_columns = {0};
    for (Eigen::Index k = 0; k < spec.frequencies.size(); ++k) {
        spectrum.rows.push_back({static_cast<double>(k), spec.frequencies(k)});
    }
    csv::Table om;
    om.header.push_back("site");
    om.integer_columns = {0};
    for (Eigen::Index j = 0; j < omega.cols(); ++j) om.header.push_back("omega_" + std::to_string(j));
    for (Eigen::Index i = 0; i < omega.rows(); ++i) {
        std::vector<double> row{static_cast<double>(i)};
        for (Eigen::Index j = 0; j < omega.cols(); ++j) row.push_back(omega(i, j));
        om.rows.push_back(std::move(row));
    }
    csv::Table modes;
    modes.header.push_back("site");
    modes.integer_columns = {0};
    for (Eigen::Index k = 0; k < spec.transform.cols(); ++k) modes.header.push_back("mode_" + std::to_string(k));
    for (Eigen::Index i = 0; i < spec.transform.rows(); ++i) {
        std::vector<double> row{static_cast<double>(i)};
        for (Eigen::Index k = 0; k < spec.transform.cols(); ++k) row.push_back(spec.transform(i, k));
        modes.rows.push_back(std::move(row));
    }
    ScenarioResult out;
    out.files.push_back({".csv", spectrum.str()});
    out.files.push_back({"_omega.csv", om.str()});
    out.files.push_back({"_modes.csv", modes.str()});
    Report r;
    r.add("scenario", std::string("gravonon-modes"));
    r.add_count("sites", s.basis.size());
    r.add("lowest_frequency", spec.frequencies.size() ? spec.frequencies(0) : kNaN);
    r.add("highest_frequency", spec.frequencies.size() ? spec.frequencies(spec.frequencies.size() - 1) : kNaN);
    out.summary = r.str();
    return out;
}

ScenarioResult meanfield_outputs(const MeanFieldScenario& s) {
    meanfield::GridState final_state;
    const auto ts = meanfield::run(s.state, s.dt, s.steps, s.sample_every, final_state);
    csv::Table fields;
    fields.header = {"x", "re_psi", "im_psi", "re_zeta", "im_zeta"};
    for (std::size_t i = 0; i < final_state.grid.n_points; ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        fields.rows.push_back({final_state.grid.x(i), final_state.psi(k).real(), final_state.psi(k).imag(),
                               final_state.zeta(k).real(), final_state.zeta(k).imag()});
    }
    const auto& np = ts.channel("norm_psi");
    const auto& nz = ts.channel("norm_zeta");
    double drift_psi = 0.0, drift_zeta = 0.0;
    for (std::size_t i = 0; i < np.size(); ++i) {
        drift_psi = std::max(drift_psi, std::abs(np[i] - np.front()));
        drift_zeta = std::max(drift_zeta, std::abs(nz[i] - nz.front()));
    }
    Report r;
    r.add("scenario", std::string("meanfield"));
    r.add_count("steps", s.steps);
    r.add("dt", s.dt);
    r.add("stability_bound_dt", meanfield::max_stable_dt(s.state));
    r.add("max_norm_drift_psi", drift_psi);
    r.add("max_norm_drift_zeta", drift_zeta);
    r.add("final_width_psi", ts.channel("width_psi").back());
    r.add("final_mean_x_psi", ts.channel("mean_x_psi").back());
    r.add("final_overlap_initial", ts.channel("overlap_initial").back());
    ScenarioResult out;
    out.files.push_back({".csv", csv::from_time_series(ts).str()});
    out.files.push_back({"_final.csv", fields.str()});
    out.files.push_back({"_report.txt", r.str()});
    out.summary = r.str();
    return out;
}

ScenarioResult dimensional_outputs(const DimensionalScenario& s) {
    namespace dim = fockdyn::dimensional;
    const auto& k = s.constants;
    csv::Table table;
    table.header = {"a", "g11", "g11_over_pi7", "enhancement_2a_pow7"};
    for (const auto& row : dim::g11_table(k.G, s.radii)) {
        table.rows.push_back({row.a, row.g11, row.g11_over_pi7, row.enhancement});
    }
    const double g11 = dim::g11_from_compactification(k.G, s.compactification);
    const double energy = s.kappa * k.c;
    const auto ratio = dim::density_ratio(energy, k.c, s.box_length, s.compactification, s.adparticle_mass);
    const auto gm = dim::gravonon_mass(s.graviton_k, k.c);
    const double spread_hartree = s.energy_spread_ev / dim::kHartreeEv;
    const auto sel = dim::site_selection_scales(spread_hartree, s.geometry_spread, s.n_sites, s.geometry_resolution);
    const double v4 = dim::v_grav_4d(k.G, s.probe_mass, s.probe_distance);
    const double v11 = dim::v_grav_11d(g11, s.probe_mass, s.probe_distance);

    Report r;
    r.add("scenario", std::string("dimensional"));
    r.add("G [a.u.]", k.G);
    r.add("c [a.u.]", k.c);
    r.add("v_grav_4d(M, r) [Hartree]", v4);
    r.add("v_grav_4d(M, r) [eV]", v4 * dim::kHartreeEv);
    r.add("v_grav_11d(M, r) [Hartree]", v11);
    r.add("v_grav_11d(M, r) [eV]", v11 * dim::kHartreeEv);
    r.add("probe_mass M [me]", s.probe_mass);
    r.add("probe_distance r [bohr]", s.probe_distance);
    r.add("a [bohr]", s.compactification);
    r.add("G11 [a.u.]", g11);
    r.add("G11/pi^7 [a.u.]", g11 / std::pow(std::numbers::pi, 7));
    r.add("enhancement (2a)^7", dim::enhancement_factor(s.compactification));
    r.add("graviton_energy kappa*c [Hartree]", energy);
    r.add("mode_density_d10 [states/Hartree]", dim::mode_density(energy, k.c, 10, s.box_length, s.compactification));
    r.add("rho_2d [states/Hartree]", dim::rho_2d(s.adparticle_mass, s.box_length));
    r.add("density_ratio_full", ratio.full);
    r.add("density_ratio_displayed_expression", ratio.displayed);
    r.add("gravonon_mass m_g [me]", gm.m_g);
    r.add("V_o [Hartree]", gm.v_o);
    r.add("V_o [eV]", gm.v_o * dim::kHartreeEv);
    r.add("energy_spacing [Hartree]", sel.energy_spacing);
    r.add("energy_spacing [eV]", sel.energy_spacing * dim::kHartreeEv);
    r.add("geometry_spacing [bohr]", sel.geometry_spacing);
    r.add("filtered_sites", sel.filtered_sites);
    r.add("filtered_energy_scale [Hartree]", sel.filtered_energy);
    r.add("filtered_energy_scale [eV]", sel.filtered_energy * dim::kHartreeEv);

    ScenarioResult out;
    out.files.push_back({".csv", table.str()});
    out.files.push_back({"_report.txt", r.str()});
    out.summary = r.str();
    return out;
}

ScenarioResult sweep_outputs(const SweepScenario& s) {
    const auto table = run_sweep(s);
    ScenarioResult out;
    out.files.push_back({".csv", table.str()});
    out.summary = "scenario = sweep\npoints = " + std::to_string(table.rows.size()) + "\n";
    return out;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    return std::visit(
        [](const auto& body) -> ScenarioResult {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, ChooserScenario>) return chooser_outputs(body);
            if constexpr (std::is_same_v<T, TelegraphScenario>) return telegraph_outputs(body);
            if constexpr (std::is_same_v<T, GravononScenario>) return gravonon_outputs(body);
            if constexpr (std::is_same_v<T, MeanFieldScenario>) return meanfield_outputs(body);
            if constexpr (std::is_same_v<T, DimensionalScenario>) return dimensional_outputs(body);
            if constexpr (std::is_same_v<T, SweepScenario>) return sweep_outputs(body);
        },
        cfg.body);
}

void write_outputs(const std::string& prefix, const std::vector<OutputFile>& files) {
    namespace fs = std::filesystem;
    std::vector<fs::path> temps;
    auto cleanup = [&] {
        std::error_code ec;
        for (const auto& t : temps) fs::remove(t, ec);
    };
    try {
        const fs::path parent = fs::path(prefix + "x").parent_path();
        if (!parent.empty()) fs::create_directories(parent);
        for (const auto& f : files) {
            const fs::path tmp = prefix + f.suffix + ".partial";
            temps.push_back(tmp);
            std::ofstream out(tmp, std::ios::binary);
            out << f.content;
            out.close();
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
        }
        for (std::size_t i = 0; i < files.size(); ++i) fs::rename(temps[i], prefix + files[i].suffix);
    } catch (...) {
        cleanup();
        throw;
    }
}

}  // namespace fockdyn::scenario
