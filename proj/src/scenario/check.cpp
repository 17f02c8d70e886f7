#include "fockdyn/scenario/check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <variant>

#include "fockdyn/csv.hpp"
#include "fockdyn/dimensional.hpp"
#include "fockdyn/errors.hpp"
#include "fockdyn/gravonon.hpp"
#include "fockdyn/meanfield.hpp"
#include "fockdyn/propagator.hpp"
#include "fockdyn/scenario/runner.hpp"

namespace fockdyn::scenario {

namespace {

using Results = std::vector<CheckResult>;

void expect(Results& out, std::string name, bool ok, const std::string& detail) {
    out.push_back({std::move(name), ok, detail});
}

std::string value(const std::string& label, double v) { return label + " = " + csv::format(v); }

// At most `n` evenly chosen samples of the grid, always including the last one.
std::vector<double> thin(const std::vector<double>& times, std::size_t n) {
    if (times.size() <= n) return times;
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(times[i * (times.size() - 1) / (n - 1)]);
    return out;
}

void check_system(Results& out, const PreparedSystem& sys) {
    expect(out, "hamiltonian_hermitian", sys.h.is_hermitian(), "exact entrywise H == H^dagger");

    propagator::SpectralDecomposition d;
    try {
        d = propagator::diagonalize(sys.h, propagator::Verify::yes);
        expect(out, "decomposition_contract", true, "residual <= 1e-10 ||H||, orthonormality <= 1e-12");
    } catch (const ContractViolation& e) {
        expect(out, "decomposition_contract", false, e.what());
        return;
    }

    const auto times = thin(sys.times, 64);
    const auto states = propagator::evolve(d, sys.psi0, times);
    double norm_err = 0.0;
    const double e0 = propagator::energy(sys.h, sys.psi0);
    const double scale = std::max(std::abs(e0), sys.h.max_abs());
    double energy_err = 0.0;
    for (const auto& psi : states) {
        norm_err = std::max(norm_err, std::abs(psi.norm() - 1.0));
        energy_err = std::max(energy_err, std::abs(propagator::energy(sys.h, psi) - e0) / (scale > 0.0 ? scale : 1.0));
    }
    expect(out, "norm_conservation", norm_err <= propagator::kNormTol, value("max | ||psi|| - 1 |", norm_err));
    expect(out, "energy_conservation", energy_err <= 1e-9, value("max relative energy drift", energy_err));

    const double t = times.back();
    const auto forward = propagator::evolve(d, sys.psi0, std::vector<double>{t});
    const auto back = propagator::evolve(d, forward.front(), std::vector<double>{-t});
    const double rev = (back.front() - sys.psi0).norm();
    expect(out, "time_reversal", rev <= 1e-9, value("||psi(t -> -t) - psi0||", rev));

    const auto ts = propagator::occupation_weights(d, sys.psi0, sys.times, sys.groups);
    expect(out, "weight_channels_finite", std::all_of(ts.channels.begin(), ts.channels.end(),
                                                      [](const auto& c) {
                                                          return std::all_of(c.second.begin(), c.second.end(),
                                                                             [](double v) { return std::isfinite(v); });
                                                      }),
           "all grouped weights finite");
}

void check_gravonon(Results& out, const gravonon::SiteBasis& basis) {
    const auto omega = gravonon::build_omega(basis);
    expect(out, "omega_symmetric", omega == omega.transpose(), "exact Omega == Omega^T");
    const auto spec = gravonon::diagonalize_modes(omega);
    const auto n = spec.transform.cols();
    const double orth = (spec.transform.transpose() * spec.transform - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    expect(out, "transform_orthonormal", orth <= 1e-12, value("max |T^T T - I|", orth));

    // Relabel sites in reverse order; the spectrum must not change.
    gravonon::SiteBasis rev = basis;
    std::reverse(rev.vgrav_values.begin(), rev.vgrav_values.end());
    for (std::size_t i = 0; i < basis.size(); ++i) rev.positions[i] = -basis.positions[basis.size() - 1 - i];
    const auto spec_rev = gravonon::diagonalize_modes(gravonon::build_omega(rev));
    const double scale = std::max(1.0, spec.frequencies.cwiseAbs().maxCoeff());
    const double diff = (spec.frequencies - spec_rev.frequencies).cwiseAbs().maxCoeff() / scale;
    expect(out, "spectrum_permutation_invariant", diff <= 1e-12, value("max relative frequency change", diff));
}

void check_meanfield(Results& out, const MeanFieldScenario& s) {
    try {
        s.state.validate();
        expect(out, "initial_state_valid", true, "sizes, finiteness and edge condition");
    } catch (const std::exception& e) {
        expect(out, "initial_state_valid", false, e.what());
        return;
    }
    const double bound = meanfield::max_stable_dt(s.state);
    expect(out, "stability_bound", s.dt <= bound, value("dt", s.dt) + ", " + value("bound", bound));
    if (s.dt > bound) return;

    const std::size_t steps = std::min<std::size_t>(s.steps, 1000);
    const auto ts = meanfield::run(s.state, s.dt, steps, std::max<std::size_t>(1, steps / 10));
    const auto& np = ts.channel("norm_psi");
    const auto& nz = ts.channel("norm_zeta");
    double drift = 0.0;
    for (std::size_t i = 0; i < np.size(); ++i) {
        drift = std::max({drift, std::abs(np[i] - np.front()), std::abs(nz[i] - nz.front())});
    }
    expect(out, "norm_drift", drift < 1e-6, value("max norm drift over " + std::to_string(steps) + " steps", drift));

    const double dx = s.state.grid.dx();
    const auto newton = meanfield::newton_profile(s.state.grid, s.state.params);
    const auto v = meanfield::psi_potential(newton, s.state.zeta.cwiseAbs2(), s.state.params);
    const auto fwd = meanfield::crank_nicolson(s.state.psi, v, s.state.params.m, dx, s.dt);
    const auto back = meanfield::crank_nicolson(fwd, v, s.state.params.m, dx, -s.dt);
    const double rev = (back - s.state.psi).cwiseAbs().maxCoeff();
    expect(out, "crank_nicolson_reversal", rev <= 1e-8, value("max |f(dt, -dt) - f|", rev));
}

void check_dimensional(Results& out, const DimensionalScenario& s) {
    namespace dim = fockdyn::dimensional;
    const auto& k = s.constants;
    const double a = s.compactification;
    const double ratio = dim::g11_from_compactification(k.G, 2.0 * a) / dim::g11_from_compactification(k.G, a);
    expect(out, "g11_scaling", std::abs(ratio - 128.0) <= 1e-9, value("G11(2a)/G11(a)", ratio));

    const double r = 2.0 * a;
    const double v4 = dim::v_grav_4d(k.G, s.probe_mass, r);
    const double v11 = dim::v_grav_11d(dim::g11_from_compactification(k.G, a), s.probe_mass, r);
    const double match = std::abs(v11 / v4 - 1.0);
    expect(out, "laws_match_at_r_2a", match <= 1e-12, value("|v11/v4 - 1| at r = 2a", match));

    const double e = s.kappa * k.c;
    const double base = dim::mode_density(e, k.c, 10, s.box_length, a);
    const bool mono = dim::mode_density(1.01 * e, k.c, 10, s.box_length, a) > base &&
                      dim::mode_density(e, k.c, 10, 1.01 * s.box_length, a) > base &&
                      dim::mode_density(e, k.c, 10, s.box_length, 1.01 * a) > base;
    expect(out, "mode_density_monotone", mono, "increasing in E, L and a at d = 10");
}

}  // namespace

std::vector<CheckResult> run_checks(const ScenarioConfig& cfg) {
    Results out;
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            double gamma = 0.0;
            if constexpr (std::is_same_v<T, ChooserScenario>) {
                check_system(out, prepare_chooser(body, gamma));
            } else if constexpr (std::is_same_v<T, TelegraphScenario>) {
                check_system(out, prepare_telegraph(body));
            } else if constexpr (std::is_same_v<T, GravononScenario>) {
                check_gravonon(out, body.basis);
            } else if constexpr (std::is_same_v<T, MeanFieldScenario>) {
                check_meanfield(out, body);
            } else if constexpr (std::is_same_v<T, DimensionalScenario>) {
                check_dimensional(out, body);
            } else {
                if (body.model == SweepModel::chooser) {
                    check_system(out, prepare_chooser(body.chooser, gamma));
                } else {
                    check_system(out, prepare_telegraph(body.telegraph));
                }
            }
        },
        cfg.body);
    return out;
}

}  // namespace fockdyn::scenario
