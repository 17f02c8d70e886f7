#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fockdyn::gravonon {

/// Localized gravonon envelopes on a 1D chain of atomic cores.
///
/// Each envelope is the normalized Gaussian
///   g_i(x) = (pi sigma^2)^(-1/4) exp(-(x - x_i)^2 / (2 sigma^2)),
/// so that <g_i|g_i> = 1 and <g_i| -d^2/dx^2 / 2m |g_i> = 1 / (4 m sigma^2).
struct SiteBasis {
    std::vector<double> positions;     // strictly increasing
    double envelope_width = 1.0;       // sigma
    std::vector<double> vgrav_values;  // V_grav(x_i), one per site
    double theta = 1.0;
    double m_g = 1.0;
    double v_o = 0.0;

    void validate() const;
    std::size_t size() const { return positions.size(); }
    /// g_i(x).
    double envelope(std::size_t i, double x) const;
};

/// Omega_ij = theta^2 V_i V_j <g_i| -d^2/dx^2 / (2 m_g) + V_o |g_j>, from closed-form Gaussian integrals.
Eigen::MatrixXd build_omega(const SiteBasis& basis);

struct ModeSpectrum {
    Eigen::VectorXd frequencies;  // ascending
    Eigen::MatrixXd transform;    // columns: normal modes in the site basis
};

/// Throws ContractViolation for a non-symmetric input.
ModeSpectrum diagonalize_modes(const Eigen::MatrixXd& omega);

/// g(x - x_i) = sqrt(omega_i / 2) g_i(x) V_i theta. Throws ParameterError for omega_i < 0.
double coupling_function(double x, std::size_t i, const SiteBasis& basis, double omega_i);

/// zeta+(x) + zeta(x) = sum_i 2 q_i g(x - x_i), with omega_i = frequencies[i].
double field_value(double x, std::span<const double> q, const SiteBasis& basis, std::span<const double> frequencies);

/// sum_ij q_i q_j g(x - x_i) g(x - x_j), i.e. the square of half the field value.
double potential_term(double x, std::span<const double> q, const SiteBasis& basis,
                      std::span<const double> frequencies);

/// Uniform chain helper: n sites at spacing `spacing` starting at x0, all with V_grav = vgrav.
SiteBasis uniform_chain(std::size_t n, double spacing, double sigma, double vgrav, double m_g, double v_o,
                        double x0 = 0.0, double theta = 1.0);

}  // namespace fockdyn::gravonon
