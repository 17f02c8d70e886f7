#pragma once

// Closed-form results for the chooser model in the weak-coupling limit. Each
// function takes the resonance width gamma explicitly, so self-consistent
// (delta = pi * gamma) and free parameterizations can both be evaluated.

#include <array>
#include <complex>

namespace fockdyn::analytic {

using Complex = std::complex<double>;

struct ChooserAnalytics {
    double gamma = 0.0;
    double delta = 0.0;
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
    double alpha = 0.0;

    /// gamma = pi u^2 / delta.
    static ChooserAnalytics from_coupling(double u, double delta, double v = 0.0, double w = 0.0,
                                          double alpha = 0.0);
    /// delta = pi * gamma together with gamma = pi u^2 / delta, i.e. gamma = |u| and delta = pi |u|.
    static ChooserAnalytics self_consistent(double u, double v = 0.0, double w = 0.0);
};

/// Golden-rule width of a flat band: pi u^2 / delta.
double gamma_from(double u, double delta);

/// Resonance Green function 1 / (eps - alpha + i gamma).
Complex green(double eps, double alpha, double gamma);

/// Eigenvalues of the three-state chooser matrix, ordered (0, +r, -r) with r = sqrt(v^2 + w^2).
std::array<double, 3> chooser_eigenvalues(double v, double w);

/// Coefficients (C_Q0, C_R0, C_Kproj) of the zero-energy eigenstate:
/// (w, 0, -v) / sqrt(v^2 + w^2). The relative sign is the one that makes
/// H c = 0 for the matrix built by models::build_chooser.
std::array<double, 3> zero_state_coeffs(double v, double w);

/// <Kproj|Psi(t)> = i pi (u/delta) exp(-gamma t).
Complex kproj_amplitude(double t, double u, double delta, double gamma);

/// <R0|Psi(t)> = pi u w / (delta (gamma - i alpha)), constant in time.
Complex r0_amplitude(double u, double w, double delta, double gamma, double alpha);

/// Summed band weight 1 - exp(-2 gamma t) - w^2/u^2. Negative near t = 0; only
/// meaningful for t of order 1/gamma and later.
double band_weight(double t, double u, double w, double gamma);

}  // namespace fockdyn::analytic
