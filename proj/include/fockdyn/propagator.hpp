#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fockdyn/models.hpp"

namespace fockdyn::propagator {

using Complex = std::complex<double>;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending, eigenvectors as orthonormal columns.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// Sampled times with named real channels of equal length.
struct TimeSeries {
    std::vector<double> times;
    std::vector<std::pair<std::string, std::vector<double>>> channels;
    /// Free-form notes carried into reports (e.g. overlapping groups).
    std::vector<std::string> notes;

    void add_channel(std::string name, std::vector<double> values);
    const std::vector<double>& channel(const std::string& name) const;
    bool has_channel(const std::string& name) const;
    /// Throws DimensionError if a channel length differs from times.size().
    void validate() const;
};

/// Tolerances of the decomposition contract.
inline constexpr double kResidualTol = 1e-10;       // relative to ||H||
inline constexpr double kOrthonormalityTol = 1e-12;
inline constexpr double kNormTol = 1e-10;

enum class Verify { yes, no };

/// Largest matrix the dense eigensolver accepts.
inline constexpr std::size_t kMaxDenseDim = 20'000;

/// Dense Hermitian eigensolver (LAPACK). Real input uses the real symmetric
/// driver. With Verify::yes the residual and orthonormality bounds are checked
/// and a ContractViolation is thrown if either fails. Matrices above
/// kMaxDenseDim raise SizeLimitError.
SpectralDecomposition diagonalize(const models::HamiltonianMatrix& h, Verify verify = Verify::yes);

/// Psi(t) = sum_k exp(-i lambda_k t) v_k <v_k|psi0> for every requested time.
/// Requires ||psi0|| = 1 within kNormTol.
std::vector<Eigen::VectorXcd> evolve(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0,
                                     std::span<const double> times);

/// <target|Psi(t)>.
Complex amplitude(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0, std::size_t target, double t);

using IndexGroups = std::vector<std::pair<std::string, std::vector<std::size_t>>>;

/// Channel g(t) = sum_{i in g} |Psi_i(t)|^2. Overlapping groups are allowed and
/// recorded in TimeSeries::notes.
TimeSeries occupation_weights(std::span<const Eigen::VectorXcd> states, std::span<const double> times,
                              const IndexGroups& groups);

/// Same channels computed straight from the decomposition, without storing
/// every state. Used for large bases and long time grids.
TimeSeries occupation_weights(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0,
                              std::span<const double> times, const IndexGroups& groups);

/// <psi|H|psi>, real part.
double energy(const models::HamiltonianMatrix& h, const Eigen::VectorXcd& psi);

/// n points evenly spaced over [t0, t1], endpoints included.
std::vector<double> linear_grid(double t0, double t1, std::size_t n);

/// Unit vector e_i of dimension n.
Eigen::VectorXcd basis_state(std::size_t n, std::size_t i);

}  // namespace fockdyn::propagator
