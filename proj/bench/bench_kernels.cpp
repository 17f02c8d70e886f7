// Serial reference vs OpenMP kernels on chooser-sized and grid-sized inputs.

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <vector>

#include "fockdyn/kernels.hpp"
#include "fockdyn/models.hpp"
#include "fockdyn/propagator.hpp"

using namespace fockdyn;

namespace {

struct Spectral {
    propagator::SpectralDecomposition d;
    Eigen::VectorXcd coeffs;
    std::vector<double> times;
    std::vector<std::vector<Eigen::Index>> groups;
};

const Spectral& chooser_case(std::size_t n_band) {
    static std::map<std::size_t, Spectral> cache;
    auto it = cache.find(n_band);
    if (it != cache.end()) return it->second;
    models::ChooserParams p{.V = 1.0, .W = 0.1, .N = n_band, .delta = 3.14159265358979, .U = 1.0};
    Spectral s;
    s.d = propagator::diagonalize(models::build_chooser(p), propagator::Verify::no);
    s.coeffs = s.d.eigenvectors.adjoint() * propagator::basis_state(s.d.dim(), 0);
    s.times = propagator::linear_grid(0.0, 5.0, 512);
    std::vector<Eigen::Index> band;
    for (Eigen::Index i = 3; i < static_cast<Eigen::Index>(s.d.dim()); ++i) band.push_back(i);
    s.groups = {{0}, {1}, {2}, band};
    return cache.emplace(n_band, std::move(s)).first->second;
}

void BM_group_weights_serial(benchmark::State& state) {
    const auto& s = chooser_case(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::group_weights_serial(s.d.eigenvectors, s.d.eigenvalues, s.coeffs, s.times, s.groups));
    }
}

void BM_group_weights(benchmark::State& state) {
    const auto& s = chooser_case(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::group_weights(s.d.eigenvectors, s.d.eigenvalues, s.coeffs, s.times, s.groups));
    }
}

void BM_spectral_states_serial(benchmark::State& state) {
    const auto& s = chooser_case(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::spectral_states_serial(s.d.eigenvectors, s.d.eigenvalues, s.coeffs, s.times));
    }
}

void BM_spectral_states(benchmark::State& state) {
    const auto& s = chooser_case(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::spectral_states(s.d.eigenvectors, s.d.eigenvalues, s.coeffs, s.times));
    }
}

struct GridCase {
    Eigen::VectorXcd f;
    Eigen::VectorXd v;
};

GridCase grid_case(Eigen::Index n) {
    GridCase g{Eigen::VectorXcd(n), Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = -20.0 + 40.0 * static_cast<double>(i) / static_cast<double>(n - 1);
        g.f(i) = std::polar(std::exp(-0.5 * x * x), 0.4 * x);
        g.v(i) = -1.0 / std::sqrt(x * x + 0.25);
    }
    return g;
}

void BM_cn_rhs_serial(benchmark::State& state) {
    const auto g = grid_case(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cn_rhs_serial(g.f, g.v, 1.0, 0.01, 1e-4));
}

void BM_cn_rhs(benchmark::State& state) {
    const auto g = grid_case(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cn_rhs(g.f, g.v, 1.0, 0.01, 1e-4));
}

}  // namespace

BENCHMARK(BM_group_weights_serial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_group_weights)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectral_states_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectral_states)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cn_rhs_serial)->Arg(4001)->Arg(64001);
BENCHMARK(BM_cn_rhs)->Arg(4001)->Arg(64001);

BENCHMARK_MAIN();
