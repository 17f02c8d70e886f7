#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>

#include <Eigen/Dense>

#include "fockdyn/propagator.hpp"

namespace fockdyn::meanfield {

/// Uniform grid of n_points over [x_min, x_max], endpoints included. Fields
/// are taken to vanish just outside the grid.
struct Grid {
    double x_min = -10.0;
    double x_max = 10.0;
    std::size_t n_points = 256;

    void validate() const;
    double dx() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }
    double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }
    Eigen::VectorXd points() const;
};

struct MeanFieldParams {
    double m = 1.0;
    double m_g = 1.0;
    double g_newton = 0.0;         // G^(D) m M_ext
    double d_spatial = 3.0;        // D in the r^(D-2) law
    double v_o = 0.0;
    double k = 0.0;
    double c = 137.036;
    std::optional<double> softening;  // r0; defaults to one grid spacing
    double source_position = 0.0;
    /// Enables the -(k c / 2) h00 term in the gravonon equation.
    bool graviton_term = false;

    void validate() const;
};

struct GridState {
    Grid grid;
    Eigen::VectorXcd psi;
    Eigen::VectorXcd zeta;
    MeanFieldParams params;
    Eigen::VectorXd h00;  // static background, empty means zero

    /// Sizes, finiteness and the edge condition (|f| at both ends below 1e-8 of its peak).
    void validate() const;
};

inline constexpr double kEdgeTol = 1e-8;

/// G^(D) m M_ext / (r^2 + r0^2)^((D-2)/2) on the grid.
Eigen::VectorXd newton_profile(const Grid& grid, const MeanFieldParams& p);

/// Potential felt by psi: -N (1 - |zeta|^2 / 4) - (m/2) |zeta|^2.
Eigen::VectorXd psi_potential(const Eigen::VectorXd& newton, const Eigen::VectorXd& zeta_density,
                              const MeanFieldParams& p);

/// Potential felt by zeta: -(m/2)|psi|^2 + N |psi|^2 / 4 + V_o [- (k c / 2) h00].
Eigen::VectorXd zeta_potential(const Eigen::VectorXd& newton, const Eigen::VectorXd& psi_density,
                               const Eigen::VectorXd& h00, const MeanFieldParams& p);

/// One Crank-Nicolson step of i df/dt = (-(1/2m) d^2/dx^2 + V) f with a fixed
/// potential. Any sign of dt is accepted, so a step followed by the step with
/// -dt restores f up to round-off.
Eigen::VectorXcd crank_nicolson(const Eigen::VectorXcd& f, const Eigen::VectorXd& potential, double mass, double dx,
                                double dt);

/// Largest dt accepted by step: dx^2 * min(m, m_g).
double max_stable_dt(const GridState& s);

/// Coupled step. A predictor pass with the current densities gives provisional
/// fields; the corrector repeats the step from the start with densities
/// averaged over both ends of the interval. Throws ContractViolation if dt
/// exceeds max_stable_dt and ParameterError if dt <= 0.
GridState step(const GridState& s, double dt);

/// Channels norm_psi, norm_zeta, mean_x_psi, width_psi, overlap_initial
/// sampled at step 0 and every sample_every steps. Throws ContractViolation if
/// a field reaches the grid edges.
propagator::TimeSeries run(const GridState& s, double dt, std::size_t n_steps, std::size_t sample_every);

/// Same as run, also returning the final state.
propagator::TimeSeries run(const GridState& s, double dt, std::size_t n_steps, std::size_t sample_every,
                           GridState& final_state);

/// Sampled values exp(-(x - x0)^2 / (4 sigma^2)) exp(i p0 x), normalized on the grid,
/// so that |f|^2 has standard deviation sigma.
Eigen::VectorXcd gaussian_packet(const Grid& grid, double x0, double sigma, double p0 = 0.0);

/// Discrete inner products and moments with the grid measure dx.
double norm(const Grid& grid, const Eigen::VectorXcd& f);
std::complex<double> overlap(const Grid& grid, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);
double mean_x(const Grid& grid, const Eigen::VectorXcd& f);
double width(const Grid& grid, const Eigen::VectorXcd& f);

/// Dense matrix of -(1/2m) d^2/dx^2 + V with zero boundary values.
Eigen::MatrixXd grid_hamiltonian(const Grid& grid, const Eigen::VectorXd& potential, double mass);

/// Reads rows "x, Re, Im" (an optional header line is skipped). The x column
/// must reproduce the grid points to 1e-9 relative to the spacing.
Eigen::VectorXcd load_field_csv(const std::filesystem::path& path, const Grid& grid);

/// Reads rows "x, value" for a real profile such as h00, with the same grid check.
Eigen::VectorXd load_profile_csv(const std::filesystem::path& path, const Grid& grid);

}  // namespace fockdyn::meanfield
