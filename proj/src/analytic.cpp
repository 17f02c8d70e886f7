#include "fockdyn/analytic.hpp"

#include <cmath>
#include <numbers>

#include "fockdyn/errors.hpp"

namespace fockdyn::analytic {

using std::numbers::pi;

ChooserAnalytics ChooserAnalytics::from_coupling(double u, double delta, double v, double w, double alpha) {
    return {gamma_from(u, delta), delta, u, v, w, alpha};
}

ChooserAnalytics ChooserAnalytics::self_consistent(double u, double v, double w) {
    const double g = std::abs(u);
    return {g, pi * g, u, v, w, 0.0};
}

double gamma_from(double u, double delta) {
    if (!(delta > 0.0)) throw ParameterError("gamma_from: delta must be > 0");
    return pi * u * u / delta;
}

Complex green(double eps, double alpha, double gamma) {
    if (!(gamma > 0.0)) throw ParameterError("green: gamma must be > 0");
    return 1.0 / Complex(eps - alpha, gamma);
}

std::array<double, 3> chooser_eigenvalues(double v, double w) {
    const double r = std::hypot(v, w);
    return {0.0, r, -r};
}

std::array<double, 3> zero_state_coeffs(double v, double w) {
    const double r = std::hypot(v, w);
    if (r == 0.0) throw ParameterError("zero_state_coeffs: v = w = 0 leaves the zero eigenvector undefined");
    return {w / r, 0.0, -v / r};
}

Complex kproj_amplitude(double t, double u, double delta, double gamma) {
    if (t < 0.0) throw ParameterError("kproj_amplitude: t must be >= 0");
    return Complex(0.0, pi * u / delta * std::exp(-gamma * t));
}

Complex r0_amplitude(double u, double w, double delta, double gamma, double alpha) {
    if (!(gamma > 0.0)) throw ParameterError("r0_amplitude: gamma must be > 0");
    return pi * u * w / (delta * Complex(gamma, -alpha));
}

double band_weight(double t, double u, double w, double gamma) {
    if (t < 0.0) throw ParameterError("band_weight: t must be >= 0");
    if (u == 0.0) throw ParameterError("band_weight: u must be nonzero");
    return 1.0 - std::exp(-2.0 * gamma * t) - (w * w) / (u * u);
}

}  // namespace fockdyn::analytic
