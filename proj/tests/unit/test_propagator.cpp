#include "doctest.h"

#include <cmath>
#include <random>

#include "fockdyn/errors.hpp"
#include "fockdyn/propagator.hpp"
#include "oracles/charpoly.hpp"
#include "oracles/rk4.hpp"

using namespace fockdyn;
using propagator::Complex;

namespace {

models::HamiltonianMatrix random_hermitian(int n, unsigned seed, bool real) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> d;
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = Complex(d(rng), real ? 0.0 : d(rng));
    }
    models::HamiltonianMatrix h;
    h.entries = 0.5 * (a + a.adjoint());
    for (int i = 0; i < n; ++i) h.entries(i, i) = h.entries(i, i).real();
    return h;
}

}  // namespace

TEST_CASE("eigenvalues agree with characteristic-polynomial roots") {
    const auto h = random_hermitian(6, 7, true);
    const auto d = propagator::diagonalize(h);
    const auto roots = oracle::char_poly_roots(h.entries.real());
    REQUIRE(roots.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(d.eigenvalues(k) == doctest::Approx(roots[k]).epsilon(1e-10));
}

TEST_CASE("complex hermitian input uses the complex driver") {
    const auto h = random_hermitian(12, 3, false);
    const auto d = propagator::diagonalize(h);
    const Eigen::MatrixXcd recon = d.eigenvectors * d.eigenvalues.cast<Complex>().asDiagonal() * d.eigenvectors.adjoint();
    CHECK((recon - h.entries).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("non-hermitian input is a contract violation") {
    auto h = random_hermitian(4, 1, true);
    h.entries(0, 1) += 1e-3;
    CHECK_THROWS_AS(propagator::diagonalize(h), ContractViolation);
}

TEST_CASE("spectral propagation matches RK4") {
    const auto h = random_hermitian(10, 11, false);
    const auto d = propagator::diagonalize(h);
    const auto psi0 = propagator::basis_state(10, 3);
    const std::vector<double> t{2.5};
    const auto psi = propagator::evolve(d, psi0, t).front();
    const auto ref = oracle::rk4(h.entries, psi0, 2.5, 20000);
    CHECK((psi - ref).norm() <= 1e-10);
    CHECK(std::abs(propagator::amplitude(d, psi0, 5, 2.5) - ref(5)) <= 1e-10);
}

TEST_CASE("norm, energy and time reversal") {
    const auto h = random_hermitian(40, 5, true);
    const auto d = propagator::diagonalize(h);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Ones(40) / std::sqrt(40.0);
    const auto times = propagator::linear_grid(0.0, 50.0, 101);
    const auto states = propagator::evolve(d, psi0, times);
    const double e0 = propagator::energy(h, psi0);
    for (const auto& s : states) {
        CHECK(std::abs(s.norm() - 1.0) <= 1e-10);
        CHECK(std::abs(propagator::energy(h, s) - e0) <= 1e-9 * h.max_abs());
    }
    const auto back = propagator::evolve(d, states.back(), std::vector<double>{-50.0}).front();
    CHECK((back - psi0).norm() <= 1e-9);
}

TEST_CASE("grouped weights from states and from the decomposition agree") {
    const auto h = random_hermitian(30, 9, true);
    const auto d = propagator::diagonalize(h);
    const auto psi0 = propagator::basis_state(30, 0);
    const auto times = propagator::linear_grid(0.0, 10.0, 77);
    std::vector<std::size_t> rest;
    for (std::size_t i = 8; i < 30; ++i) rest.push_back(i);
    const propagator::IndexGroups groups{{"a", {0, 1, 2}}, {"b", {3, 4, 5, 6, 7}}, {"rest", rest}};
    const auto states = propagator::evolve(d, psi0, times);
    const auto a = propagator::occupation_weights(states, times, groups);
    const auto b = propagator::occupation_weights(d, psi0, times, groups);
    for (const auto& name : {"a", "b", "rest"}) {
        for (std::size_t m = 0; m < times.size(); ++m) {
            CHECK(std::abs(a.channel(name)[m] - b.channel(name)[m]) <= 1e-12);
        }
    }
    for (std::size_t m = 0; m < times.size(); ++m) {
        CHECK(std::abs(b.channel("a")[m] + b.channel("b")[m] + b.channel("rest")[m] - 1.0) <= 1e-10);
    }
    CHECK(b.notes.empty());
}

TEST_CASE("overlapping groups are noted, bad indices rejected") {
    const auto h = random_hermitian(4, 2, true);
    const auto d = propagator::diagonalize(h);
    const auto psi0 = propagator::basis_state(4, 0);
    const std::vector<double> t{0.0, 1.0};
    const auto ts = propagator::occupation_weights(d, psi0, t, {{"x", {0, 1}}, {"y", {1, 2}}});
    CHECK(ts.notes.size() == 1);
    CHECK_THROWS_AS(propagator::occupation_weights(d, psi0, t, {{"x", {4}}}), DimensionError);
}

TEST_CASE("unnormalized initial state is rejected") {
    const auto h = random_hermitian(3, 4, true);
    const auto d = propagator::diagonalize(h);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Ones(3);
    CHECK_THROWS_AS(propagator::evolve(d, psi0, std::vector<double>{1.0}), ContractViolation);
    CHECK_THROWS_AS(propagator::evolve(d, Eigen::VectorXcd::Ones(2) / std::sqrt(2.0), std::vector<double>{1.0}),
                    DimensionError);
}

TEST_CASE("time series channel bookkeeping") {
    propagator::TimeSeries ts;
    ts.times = {0.0, 1.0};
    CHECK_THROWS_AS(ts.add_channel("x", {1.0}), DimensionError);
    ts.add_channel("x", {1.0, 2.0});
    CHECK(ts.has_channel("x"));
    CHECK_THROWS_AS(ts.channel("y"), DimensionError);
}
