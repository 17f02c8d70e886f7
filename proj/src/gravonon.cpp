#include "fockdyn/gravonon.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fockdyn/errors.hpp"

namespace fockdyn::gravonon {

using std::numbers::pi;

void SiteBasis::validate() const {
    if (!(envelope_width > 0.0)) throw ParameterError("SiteBasis: envelope width must be > 0");
    if (!(m_g > 0.0)) throw ParameterError("SiteBasis: gravonon mass must be > 0");
    if (vgrav_values.size() != positions.size()) {
        throw DimensionError("SiteBasis: " + std::to_string(vgrav_values.size()) + " V_grav values for " +
                             std::to_string(positions.size()) + " sites");
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (!(positions[i] > positions[i - 1])) throw ParameterError("SiteBasis: positions must be strictly increasing");
    }
}

double SiteBasis::envelope(std::size_t i, double x) const {
    const double s2 = envelope_width * envelope_width;
    const double d = x - positions.at(i);
    return std::pow(pi * s2, -0.25) * std::exp(-d * d / (2.0 * s2));
}

Eigen::MatrixXd build_omega(const SiteBasis& basis) {
    basis.validate();
    const auto n = static_cast<Eigen::Index>(basis.size());
    const double s2 = basis.envelope_width * basis.envelope_width;
    const double theta2 = basis.theta * basis.theta;
    Eigen::MatrixXd omega(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double d = basis.positions[static_cast<std::size_t>(i)] - basis.positions[static_cast<std::size_t>(j)];
            const double overlap = std::exp(-d * d / (4.0 * s2));
            // <g_i| -1/2 d^2/dx^2 |g_j> for equal-width Gaussians.
            const double kinetic = overlap / (4.0 * s2) * (1.0 - d * d / (2.0 * s2));
            const double v = theta2 * basis.vgrav_values[static_cast<std::size_t>(i)] *
                             basis.vgrav_values[static_cast<std::size_t>(j)];
            omega(i, j) = omega(j, i) = v * (kinetic / basis.m_g + basis.v_o * overlap);
        }
    }
    return omega;
}

ModeSpectrum diagonalize_modes(const Eigen::MatrixXd& omega) {
    if (omega.rows() != omega.cols()) throw DimensionError("diagonalize_modes: matrix is not square");
    if (omega != omega.transpose()) {
        throw ContractViolation("diagonalize_modes: Omega is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(omega);
    if (es.info() != Eigen::Success) throw ContractViolation("diagonalize_modes: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

double coupling_function(double x, std::size_t i, const SiteBasis& basis, double omega_i) {
    if (omega_i < 0.0) {
        throw ParameterError("coupling_function: negative mode frequency " + std::to_string(omega_i) +
                             " (unstable mode)");
    }
    return std::sqrt(0.5 * omega_i) * basis.envelope(i, x) * basis.vgrav_values.at(i) * basis.theta;
}

namespace {

double half_field(double x, std::span<const double> q, const SiteBasis& basis, std::span<const double> frequencies) {
    if (q.size() != basis.size() || frequencies.size() != basis.size()) {
        throw DimensionError("potential term: expected " + std::to_string(basis.size()) +
                             " displacements and frequencies");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * coupling_function(x, i, basis, frequencies[i]);
    return s;
}

}  // namespace

double field_value(double x, std::span<const double> q, const SiteBasis& basis, std::span<const double> frequencies) {
    return 2.0 * half_field(x, q, basis, frequencies);
}

double potential_term(double x, std::span<const double> q, const SiteBasis& basis,
                      std::span<const double> frequencies) {
    const double h = half_field(x, q, basis, frequencies);
    return h * h;
}

SiteBasis uniform_chain(std::size_t n, double spacing, double sigma, double vgrav, double m_g, double v_o, double x0,
                        double theta) {
    SiteBasis b;
    for (std::size_t i = 0; i < n; ++i) b.positions.push_back(x0 + spacing * static_cast<double>(i));
    b.envelope_width = sigma;
    b.vgrav_values.assign(n, vgrav);
    b.theta = theta;
    b.m_g = m_g;
    b.v_o = v_o;
    return b;
}

}  // namespace fockdyn::gravonon
