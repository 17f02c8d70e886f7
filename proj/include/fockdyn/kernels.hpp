#pragma once

// Data-parallel inner loops. Every OpenMP kernel has a plain serial twin kept
// as a test reference. Work is split into fixed-size chunks independent of the
// thread count, so parallel results are bit-identical for any --threads value.

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fockdyn::kernels {

inline constexpr Eigen::Index kTimeChunk = 32;

/// Column m holds sum_k vecs(:,k) * exp(-i vals(k) times[m]) * coeffs(k).
Eigen::MatrixXcd spectral_states(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                                 const Eigen::VectorXcd& coeffs, std::span<const double> times);
Eigen::MatrixXcd spectral_states_serial(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                                        const Eigen::VectorXcd& coeffs, std::span<const double> times);

/// Entry (m, g) = sum over i in groups[g] of |psi_i(times[m])|^2, without
/// materializing all states at once.
Eigen::MatrixXd group_weights(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                              const Eigen::VectorXcd& coeffs, std::span<const double> times,
                              const std::vector<std::vector<Eigen::Index>>& groups);
Eigen::MatrixXd group_weights_serial(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                                     const Eigen::VectorXcd& coeffs, std::span<const double> times,
                                     const std::vector<std::vector<Eigen::Index>>& groups);

/// Right-hand side (1 - i dt/2 H) f of a Crank-Nicolson step, with
/// H = -(1/2m) d^2/dx^2 + potential on a uniform grid with zero boundary values.
Eigen::VectorXcd cn_rhs(const Eigen::VectorXcd& f, const Eigen::VectorXd& potential, double mass, double dx,
                        double dt);
Eigen::VectorXcd cn_rhs_serial(const Eigen::VectorXcd& f, const Eigen::VectorXd& potential, double mass,
                               double dx, double dt);

}  // namespace fockdyn::kernels
