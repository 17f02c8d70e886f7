#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fockdyn/errors.hpp"
#include "fockdyn/meanfield.hpp"
#include "fockdyn/propagator.hpp"
#include "oracles/grid.hpp"

using namespace fockdyn;
using namespace fockdyn::meanfield;

namespace {

GridState free_state(const Grid& g, double sigma, double p0 = 0.0) {
    GridState s;
    s.grid = g;
    s.psi = gaussian_packet(g, 0.0, sigma, p0);
    s.zeta = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.n_points));
    return s;
}

}  // namespace

TEST_CASE("gaussian packet moments") {
    const Grid g{-20.0, 20.0, 801};
    const auto f = gaussian_packet(g, 1.5, 1.2, 0.7);
    CHECK(norm(g, f) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean_x(g, f) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(width(g, f) == doctest::Approx(1.2).epsilon(1e-8));
}

TEST_CASE("free packet spreads by the analytic law") {
    const Grid g{-30.0, 30.0, 1201};
    const auto s = free_state(g, 1.0);
    const double dt = 0.0025;
    const auto ts = run(s, dt, 1600, 16);
    const auto& w = ts.channel("width_psi");
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.times.size(); ++i) {
        worst = std::max(worst, std::abs(w[i] / oracle::free_width(1.0, 1.0, ts.times[i]) - 1.0));
    }
    CHECK(ts.times.back() == doctest::Approx(4.0));
    CHECK(worst < 1e-3);
    const auto& n = ts.channel("norm_psi");
    for (double v : n) CHECK(std::abs(v - n.front()) < 1e-6);
}

TEST_CASE("discrete ground state of a static well is stationary") {
    const Grid g{-20.0, 20.0, 801};
    GridState s;
    s.grid = g;
    s.params.g_newton = 1.0;
    s.params.softening = 0.5;
    s.zeta = Eigen::VectorXcd::Zero(801);
    const auto newton = newton_profile(g, s.params);
    const Eigen::VectorXd v = psi_potential(newton, Eigen::VectorXd::Zero(801), s.params);
    const Eigen::VectorXd gs = oracle::discrete_ground_state(v, 1.0, g.dx());
    s.psi = gs.cast<std::complex<double>>() / std::sqrt(gs.squaredNorm() * g.dx());
    const auto ts = run(s, 0.0025, 1000, 50);
    for (double o : ts.channel("overlap_initial")) CHECK(o >= 1.0 - 1e-6);
    for (double z : ts.channel("norm_zeta")) CHECK(z == 0.0);
}

TEST_CASE("newton profile is regularized") {
    const Grid g{-5.0, 5.0, 101};
    MeanFieldParams p;
    p.g_newton = 2.0;
    p.d_spatial = 4.0;
    p.softening = 0.5;
    const auto n = newton_profile(g, p);
    CHECK(n(50) == doctest::Approx(2.0 / 0.25));
    CHECK(n(60) == doctest::Approx(2.0 / (1.0 + 0.25)));
    p.d_spatial = 2.0;
    CHECK(newton_profile(g, p).cwiseAbs().minCoeff() == doctest::Approx(2.0));
}

TEST_CASE("zero coupling matches exact propagation of the grid Hamiltonian") {
    const Grid g{-25.0, 25.0, 501};
    const auto s = free_state(g, 1.0, 0.5);
    GridState end;
    run(s, 0.002, 500, 500, end);
    models::HamiltonianMatrix h;
    h.entries = grid_hamiltonian(g, Eigen::VectorXd::Zero(501), 1.0).cast<std::complex<double>>();
    const auto d = propagator::diagonalize(h);
    const double scale = std::sqrt(g.dx());
    const Eigen::VectorXcd psi0 = s.psi * scale;
    const Eigen::VectorXcd exact = propagator::evolve(d, psi0, std::vector<double>{1.0}).front() / scale;
    CHECK((end.psi - exact).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("Crank-Nicolson step is reversible") {
    const Grid g{-10.0, 10.0, 401};
    const auto f = gaussian_packet(g, 0.5, 0.8, 1.0);
    Eigen::VectorXd v = g.points().array().square() * 0.3;
    const auto fwd = crank_nicolson(f, v, 1.0, g.dx(), 0.01);
    const auto back = crank_nicolson(fwd, v, 1.0, g.dx(), -0.01);
    CHECK((back - f).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK((fwd - f).cwiseAbs().maxCoeff() > 1e-4);
}

TEST_CASE("mutual attraction slows spreading") {
    const Grid g{-30.0, 30.0, 1201};
    auto s = free_state(g, 1.0);
    s.params.m = 4.0;
    s.params.m_g = 4.0;
    s.zeta = gaussian_packet(g, 0.0, 1.0);
    s.zeta *= 2.0;
    const auto bound = run(s, 0.0025, 800, 800).channel("width_psi").back();
    auto f = free_state(g, 1.0);
    f.params.m = 4.0;
    f.params.m_g = 4.0;
    const auto free = run(f, 0.0025, 800, 800).channel("width_psi").back();
    CHECK(bound < free);
}

TEST_CASE("refinement is second order") {
    // Packet moving in a soft well; compare the final mean position as dx and dt halve together.
    auto final_mean = [](std::size_t n, double dt, std::size_t steps) {
        const Grid g{-12.0, 12.0, n};
        GridState s;
        s.grid = g;
        s.params.g_newton = 1.0;
        s.params.softening = 1.0;
        // Heavier particle keeps dt <= dx^2 m satisfied at every level.
        s.params.m = 4.0;
        s.params.m_g = 4.0;
        s.psi = gaussian_packet(g, 1.0, 0.7, 0.5);
        s.zeta = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
        return run(s, dt, steps, steps).channel("mean_x_psi").back();
    };
    const double a = final_mean(121, 0.02, 50);
    const double b = final_mean(241, 0.01, 100);
    const double c = final_mean(481, 0.005, 200);
    const double d1 = std::abs(a - b), d2 = std::abs(b - c);
    MESSAGE("refinement changes " << d1 << " then " << d2);
    CHECK(d2 > 0.0);
    CHECK(d1 / d2 > 3.0);
    CHECK(d1 / d2 < 5.0);
}

TEST_CASE("step contract") {
    const Grid g{-10.0, 10.0, 201};
    const auto s = free_state(g, 1.0);
    CHECK_THROWS_AS(step(s, 0.0), ParameterError);
    CHECK_THROWS_AS(step(s, 1.01 * max_stable_dt(s)), ContractViolation);
    CHECK(max_stable_dt(s) == doctest::Approx(g.dx() * g.dx()));
}

TEST_CASE("fields reaching the edges are rejected") {
    const Grid g{-4.0, 4.0, 161};
    auto s = free_state(g, 1.0);
    CHECK_THROWS_AS(s.validate(), ContractViolation);
    const Grid wide{-8.0, 8.0, 161};
    auto moving = free_state(wide, 0.5, 20.0);
    CHECK_NOTHROW(moving.validate());
    CHECK_THROWS_AS(run(moving, 0.0025, 400, 10), ContractViolation);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((Grid{0.0, 1.0, 8}.validate()), ParameterError);
    CHECK_THROWS_AS((Grid{1.0, 0.0, 64}.validate()), ParameterError);
}

TEST_CASE("field and profile files") {
    const Grid g{-2.0, 2.0, 17};
    const auto dir = std::filesystem::temp_directory_path() / "fockdyn_meanfield_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "field.csv");
        f << "x,re,im\n";
        for (std::size_t i = 0; i < 17; ++i) f << g.x(i) << "," << 0.1 * i << "," << -0.2 * i << "\n";
        std::ofstream p(dir / "profile.csv");
        for (std::size_t i = 0; i < 17; ++i) p << g.x(i) << "," << 2.0 * i << "\n";
        std::ofstream bad(dir / "bad.csv");
        for (std::size_t i = 0; i < 17; ++i) bad << g.x(i) + 0.01 << "," << 1.0 << "\n";
    }
    const auto f = load_field_csv(dir / "field.csv", g);
    CHECK(f(3) == std::complex<double>(0.3, -0.6));
    CHECK(load_profile_csv(dir / "profile.csv", g)(16) == 32.0);
    CHECK_THROWS_AS(load_profile_csv(dir / "bad.csv", g), DimensionError);
    CHECK_THROWS(load_profile_csv(dir / "missing.csv", g));
    std::filesystem::remove_all(dir);
}
