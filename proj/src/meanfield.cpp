#include "fockdyn/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fockdyn/errors.hpp"
#include "fockdyn/kernels.hpp"

namespace fockdyn::meanfield {

using Complex = std::complex<double>;

void Grid::validate() const {
    if (n_points < 16) throw ParameterError("grid: n_points must be >= 16, got " + std::to_string(n_points));
    if (!(x_max > x_min)) throw ParameterError("grid: x_max must exceed x_min");
}

Eigen::VectorXd Grid::points() const {
    Eigen::VectorXd xs(static_cast<Eigen::Index>(n_points));
    for (std::size_t i = 0; i < n_points; ++i) xs(static_cast<Eigen::Index>(i)) = x(i);
    return xs;
}

void MeanFieldParams::validate() const {
    if (!(m > 0.0)) throw ParameterError("meanfield: m must be > 0");
    if (!(m_g > 0.0)) throw ParameterError("meanfield: m_g must be > 0");
    if (softening && !(*softening > 0.0)) throw ParameterError("meanfield: softening must be > 0");
    for (double v : {g_newton, d_spatial, v_o, k, c, source_position}) {
        if (!std::isfinite(v)) throw ParameterError("meanfield: non-finite parameter");
    }
}

namespace {

void check_edges(const Eigen::VectorXcd& f, const char* name) {
    const double peak = f.cwiseAbs().maxCoeff();
    if (peak == 0.0) return;
    const double edge = std::max(std::abs(f(0)), std::abs(f(f.size() - 1)));
    if (edge >= kEdgeTol * peak) {
        throw ContractViolation(std::string("meanfield: ") + name + " is not negligible at the grid edge (|edge|/peak = " +
                                std::to_string(edge / peak) + ")");
    }
}

}  // namespace

void GridState::validate() const {
    grid.validate();
    params.validate();
    const auto n = static_cast<Eigen::Index>(grid.n_points);
    if (psi.size() != n || zeta.size() != n) throw DimensionError("meanfield: field length differs from n_points");
    if (h00.size() != 0 && h00.size() != n) throw DimensionError("meanfield: h00 length differs from n_points");
    if (!psi.allFinite() || !zeta.allFinite()) throw ContractViolation("meanfield: non-finite field values");
    check_edges(psi, "psi");
    check_edges(zeta, "zeta");
}

Eigen::VectorXd newton_profile(const Grid& grid, const MeanFieldParams& p) {
    const double r0 = p.softening.value_or(grid.dx());
    const double expo = 0.5 * (p.d_spatial - 2.0);
    Eigen::VectorXd out(static_cast<Eigen::Index>(grid.n_points));
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        const double r = grid.x(i) - p.source_position;
        out(static_cast<Eigen::Index>(i)) = p.g_newton / std::pow(r * r + r0 * r0, expo);
    }
    return out;
}

Eigen::VectorXd psi_potential(const Eigen::VectorXd& newton, const Eigen::VectorXd& zeta_density,
                              const MeanFieldParams& p) {
    return -(newton.array() * (1.0 - 0.25 * zeta_density.array())) - 0.5 * p.m * zeta_density.array();
}

Eigen::VectorXd zeta_potential(const Eigen::VectorXd& newton, const Eigen::VectorXd& psi_density,
                               const Eigen::VectorXd& h00, const MeanFieldParams& p) {
    Eigen::VectorXd v = (-0.5 * p.m * psi_density.array() + 0.25 * newton.array() * psi_density.array() + p.v_o).matrix();
    if (p.graviton_term && h00.size() != 0) v.array() -= 0.5 * p.k * p.c * h00.array();
    return v;
}

Eigen::VectorXcd crank_nicolson(const Eigen::VectorXcd& f, const Eigen::VectorXd& potential, double mass, double dx,
                                double dt) {
    const Eigen::Index n = f.size();
    if (potential.size() != n) throw DimensionError("crank_nicolson: potential length differs from field length");
    const Eigen::VectorXcd rhs = kernels::cn_rhs(f, potential, mass, dx, dt);
    // Thomas algorithm for (1 + i dt/2 H) x = rhs; H is tridiagonal with constant off-diagonal.
    const double kin = 1.0 / (2.0 * mass * dx * dx);
    const Complex half(0.0, 0.5 * dt);
    const Complex off = -half * kin;
    std::vector<Complex> cp(static_cast<std::size_t>(n));
    Eigen::VectorXcd x(n);
    Complex denom = 1.0 + half * (2.0 * kin + potential(0));
    cp[0] = off / denom;
    x(0) = rhs(0) / denom;
    for (Eigen::Index i = 1; i < n; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        denom = 1.0 + half * (2.0 * kin + potential(i)) - off * cp[iu - 1];
        cp[iu] = off / denom;
        x(i) = (rhs(i) - off * x(i - 1)) / denom;
    }
    for (Eigen::Index i = n - 2; i >= 0; --i) x(i) -= cp[static_cast<std::size_t>(i)] * x(i + 1);
    return x;
}

double max_stable_dt(const GridState& s) {
    const double dx = s.grid.dx();
    return dx * dx * std::min(s.params.m, s.params.m_g);
}

GridState step(const GridState& s, double dt) {
    if (!(dt > 0.0)) throw ParameterError("step: dt must be > 0");
    const double bound = max_stable_dt(s);
    if (dt > bound) {
        throw ContractViolation("step: dt = " + std::to_string(dt) + " exceeds the stability bound dx^2 min(m, m_g) = " +
                                std::to_string(bound));
    }
    const MeanFieldParams& p = s.params;
    const double dx = s.grid.dx();
    const Eigen::VectorXd newton = newton_profile(s.grid, p);
    const Eigen::VectorXd rho_psi = s.psi.cwiseAbs2();
    const Eigen::VectorXd rho_zeta = s.zeta.cwiseAbs2();

    const Eigen::VectorXcd psi_pred = crank_nicolson(s.psi, psi_potential(newton, rho_zeta, p), p.m, dx, dt);
    const Eigen::VectorXcd zeta_pred =
        crank_nicolson(s.zeta, zeta_potential(newton, rho_psi, s.h00, p), p.m_g, dx, dt);

    const Eigen::VectorXd rho_psi_half = 0.5 * (rho_psi + psi_pred.cwiseAbs2());
    const Eigen::VectorXd rho_zeta_half = 0.5 * (rho_zeta + zeta_pred.cwiseAbs2());

    GridState next = s;
    next.psi = crank_nicolson(s.psi, psi_potential(newton, rho_zeta_half, p), p.m, dx, dt);
    next.zeta = crank_nicolson(s.zeta, zeta_potential(newton, rho_psi_half, s.h00, p), p.m_g, dx, dt);
    return next;
}

double norm(const Grid& grid, const Eigen::VectorXcd& f) { return f.squaredNorm() * grid.dx(); }

Complex overlap(const Grid& grid, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return a.dot(b) * grid.dx();
}

double mean_x(const Grid& grid, const Eigen::VectorXcd& f) {
    const Eigen::VectorXd rho = f.cwiseAbs2();
    const double total = rho.sum();
    if (total == 0.0) return 0.0;
    return rho.dot(grid.points()) / total;
}

double width(const Grid& grid, const Eigen::VectorXcd& f) {
    const Eigen::VectorXd rho = f.cwiseAbs2();
    const double total = rho.sum();
    if (total == 0.0) return 0.0;
    const double mu = mean_x(grid, f);
    const Eigen::VectorXd d = grid.points().array() - mu;
    return std::sqrt(rho.dot(d.cwiseAbs2()) / total);
}

propagator::TimeSeries run(const GridState& s, double dt, std::size_t n_steps, std::size_t sample_every,
                           GridState& final_state) {
    s.validate();
    if (sample_every == 0) throw ParameterError("run: sample_every must be >= 1");
    const double psi0_norm = std::sqrt(norm(s.grid, s.psi));

    std::vector<double> times, n_psi, n_zeta, mx, wd, ov;
    auto sample = [&](const GridState& cur, std::size_t k) {
        times.push_back(dt * static_cast<double>(k));
        const double np = norm(cur.grid, cur.psi);
        n_psi.push_back(np);
        n_zeta.push_back(norm(cur.grid, cur.zeta));
        mx.push_back(mean_x(cur.grid, cur.psi));
        wd.push_back(width(cur.grid, cur.psi));
        const double denom = psi0_norm * std::sqrt(np);
        ov.push_back(denom > 0.0 ? std::abs(overlap(cur.grid, s.psi, cur.psi)) / denom : 0.0);
    };

    GridState cur = s;
    sample(cur, 0);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        cur = step(cur, dt);
        if (k % sample_every == 0 || k == n_steps) {
            check_edges(cur.psi, "psi");
            check_edges(cur.zeta, "zeta");
            sample(cur, k);
        }
    }

    propagator::TimeSeries ts;
    ts.times = std::move(times);
    ts.add_channel("norm_psi", std::move(n_psi));
    ts.add_channel("norm_zeta", std::move(n_zeta));
    ts.add_channel("mean_x_psi", std::move(mx));
    ts.add_channel("width_psi", std::move(wd));
    ts.add_channel("overlap_initial", std::move(ov));
    final_state = std::move(cur);
    return ts;
}

propagator::TimeSeries run(const GridState& s, double dt, std::size_t n_steps, std::size_t sample_every) {
    GridState unused;
    return run(s, dt, n_steps, sample_every, unused);
}

Eigen::VectorXcd gaussian_packet(const Grid& grid, double x0, double sigma, double p0) {
    if (!(sigma > 0.0)) throw ParameterError("gaussian_packet: sigma must be > 0");
    Eigen::VectorXcd f(static_cast<Eigen::Index>(grid.n_points));
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        const double d = x - x0;
        f(static_cast<Eigen::Index>(i)) = std::exp(-d * d / (4.0 * sigma * sigma)) * std::polar(1.0, p0 * x);
    }
    return f / std::sqrt(norm(grid, f));
}

Eigen::MatrixXd grid_hamiltonian(const Grid& grid, const Eigen::VectorXd& potential, double mass) {
    const auto n = static_cast<Eigen::Index>(grid.n_points);
    if (potential.size() != n) throw DimensionError("grid_hamiltonian: potential length differs from n_points");
    const double dx = grid.dx();
    const double kin = 1.0 / (2.0 * mass * dx * dx);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = 2.0 * kin + potential(i);
        if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -kin;
    }
    return h;
}

namespace {

// Rows of at least `columns` numbers whose first column reproduces the grid.
std::vector<std::vector<double>> read_grid_rows(const std::filesystem::path& path, const Grid& grid,
                                                std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read field file " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::vector<double> row(columns);
        bool ok = true;
        for (auto& v : row) ok = ok && static_cast<bool>(ls >> v);
        if (!ok) {
            if (line_no == 1) continue;  // header
            throw ParameterError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                                 std::to_string(columns) + " numeric columns");
        }
        const std::size_t i = rows.size();
        if (i >= grid.n_points) throw DimensionError(path.string() + ": more rows than grid points");
        if (std::abs(row[0] - grid.x(i)) > 1e-9 * grid.dx()) {
            throw DimensionError(path.string() + ":" + std::to_string(line_no) + ": x does not match grid point " +
                                 std::to_string(grid.x(i)));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != grid.n_points) throw DimensionError(path.string() + ": fewer rows than grid points");
    return rows;
}

}  // namespace

Eigen::VectorXcd load_field_csv(const std::filesystem::path& path, const Grid& grid) {
    const auto rows = read_grid_rows(path, grid, 3);
    Eigen::VectorXcd f(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) f(static_cast<Eigen::Index>(i)) = Complex(rows[i][1], rows[i][2]);
    return f;
}

Eigen::VectorXd load_profile_csv(const std::filesystem::path& path, const Grid& grid) {
    const auto rows = read_grid_rows(path, grid, 2);
    Eigen::VectorXd f(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) f(static_cast<Eigen::Index>(i)) = rows[i][1];
    return f;
}

}  // namespace fockdyn::meanfield
