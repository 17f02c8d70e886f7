#include "fockdyn/kernels.hpp"

#include <algorithm>
#include <complex>

namespace fockdyn::kernels {

using Complex = std::complex<double>;

namespace {

Eigen::Index n_chunks(Eigen::Index n) { return (n + kTimeChunk - 1) / kTimeChunk; }

// Phase-weighted coefficient block: column j is exp(-i vals t_j) * coeffs.
Eigen::MatrixXcd phase_block(const Eigen::VectorXd& vals, const Eigen::VectorXcd& coeffs,
                             std::span<const double> times, Eigen::Index begin, Eigen::Index end) {
    Eigen::MatrixXcd block(vals.size(), end - begin);
    for (Eigen::Index j = begin; j < end; ++j) {
        const double t = times[static_cast<std::size_t>(j)];
        for (Eigen::Index k = 0; k < vals.size(); ++k) {
            block(k, j - begin) = std::polar(1.0, -vals(k) * t) * coeffs(k);
        }
    }
    return block;
}

}  // namespace

Eigen::MatrixXcd spectral_states(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                                 const Eigen::VectorXcd& coeffs, std::span<const double> times) {
    const auto nt = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXcd out(vecs.rows(), nt);
    const Eigen::Index chunks = n_chunks(nt);
#pragma omp parallel for schedule(dynamic, 1)
    for (Eigen::Index c = 0; c < chunks; ++c) {
        const Eigen::Index b = c * kTimeChunk;
        const Eigen::Index e = std::min(nt, b + kTimeChunk);
        out.middleCols(b, e - b).noalias() = vecs * phase_block(vals, coeffs, times, b, e);
    }
    return out;
}

Eigen::MatrixXcd spectral_states_serial(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                                        const Eigen::VectorXcd& coeffs, std::span<const double> times) {
    const Eigen::Index n = vecs.rows();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, static_cast<Eigen::Index>(times.size()));
    for (std::size_t m = 0; m < times.size(); ++m) {
        for (Eigen::Index k = 0; k < vals.size(); ++k) {
            const Complex w = std::polar(1.0, -vals(k) * times[m]) * coeffs(k);
            for (Eigen::Index i = 0; i < n; ++i) out(i, static_cast<Eigen::Index>(m)) += vecs(i, k) * w;
        }
    }
    return out;
}

Eigen::MatrixXd group_weights(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                              const Eigen::VectorXcd& coeffs, std::span<const double> times,
                              const std::vector<std::vector<Eigen::Index>>& groups) {
    const auto nt = static_cast<Eigen::Index>(times.size());
    const auto ng = static_cast<Eigen::Index>(groups.size());
    Eigen::MatrixXd out(nt, ng);
    const Eigen::Index chunks = n_chunks(nt);
#pragma omp parallel for schedule(dynamic, 1)
    for (Eigen::Index c = 0; c < chunks; ++c) {
        const Eigen::Index b = c * kTimeChunk;
        const Eigen::Index e = std::min(nt, b + kTimeChunk);
        const Eigen::MatrixXcd states = vecs * phase_block(vals, coeffs, times, b, e);
        for (Eigen::Index j = 0; j < e - b; ++j) {
            for (Eigen::Index g = 0; g < ng; ++g) {
                double s = 0.0;
                for (Eigen::Index i : groups[static_cast<std::size_t>(g)]) s += std::norm(states(i, j));
                out(b + j, g) = s;
            }
        }
    }
    return out;
}

Eigen::MatrixXd group_weights_serial(const Eigen::MatrixXcd& vecs, const Eigen::VectorXd& vals,
                                     const Eigen::VectorXcd& coeffs, std::span<const double> times,
                                     const std::vector<std::vector<Eigen::Index>>& groups) {
    const Eigen::MatrixXcd states = spectral_states_serial(vecs, vals, coeffs, times);
    Eigen::MatrixXd out(states.cols(), static_cast<Eigen::Index>(groups.size()));
    for (Eigen::Index m = 0; m < states.cols(); ++m) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            double s = 0.0;
            for (Eigen::Index i : groups[g]) s += std::norm(states(i, m));
            out(m, static_cast<Eigen::Index>(g)) = s;
        }
    }
    return out;
}

Eigen::VectorXcd cn_rhs(const Eigen::VectorXcd& f, const Eigen::VectorXd& potential, double mass, double dx,
                        double dt) {
    const Eigen::Index n = f.size();
    const double kin = 1.0 / (2.0 * mass * dx * dx);
    const Complex half(0.0, 0.5 * dt);
    Eigen::VectorXcd out(n);
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex left = i > 0 ? f(i - 1) : Complex{};
        const Complex right = i + 1 < n ? f(i + 1) : Complex{};
        const Complex hf = kin * (2.0 * f(i) - left - right) + potential(i) * f(i);
        out(i) = f(i) - half * hf;
    }
    return out;
}

Eigen::VectorXcd cn_rhs_serial(const Eigen::VectorXcd& f, const Eigen::VectorXd& potential, double mass,
                               double dx, double dt) {
    const Eigen::Index n = f.size();
    const double kin = 1.0 / (2.0 * mass * dx * dx);
    const Complex half(0.0, 0.5 * dt);
    Eigen::VectorXcd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex left = i > 0 ? f(i - 1) : Complex{};
        const Complex right = i + 1 < n ? f(i + 1) : Complex{};
        const Complex hf = kin * (2.0 * f(i) - left - right) + potential(i) * f(i);
        out(i) = f(i) - half * hf;
    }
    return out;
}

}  // namespace fockdyn::kernels
