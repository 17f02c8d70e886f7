#include "fockdyn/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <lapacke.h>

#include "fockdyn/errors.hpp"
#include "fockdyn/kernels.hpp"

namespace fockdyn::propagator {

void TimeSeries::add_channel(std::string name, std::vector<double> values) {
    if (values.size() != times.size()) {
        throw DimensionError("channel '" + name + "' has " + std::to_string(values.size()) + " samples, expected " +
                             std::to_string(times.size()));
    }
    channels.emplace_back(std::move(name), std::move(values));
}

const std::vector<double>& TimeSeries::channel(const std::string& name) const {
    for (const auto& [n, v] : channels) {
        if (n == name) return v;
    }
    throw DimensionError("no channel named '" + name + "'");
}

bool TimeSeries::has_channel(const std::string& name) const {
    return std::any_of(channels.begin(), channels.end(), [&](const auto& c) { return c.first == name; });
}

void TimeSeries::validate() const {
    for (const auto& [name, v] : channels) {
        if (v.size() != times.size()) throw DimensionError("channel '" + name + "' length mismatch");
    }
}

namespace {

bool is_real(const Eigen::MatrixXcd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, j).imag() != 0.0) return false;
        }
    }
    return true;
}

void check_lapack(lapack_int info, const char* routine) {
    if (info != 0) {
        throw ContractViolation(std::string(routine) + " failed to converge (info = " + std::to_string(info) + ")");
    }
}

template <typename Matrix>
void verify_decomposition(const Matrix& h, const Matrix& vecs, const Eigen::VectorXd& vals) {
    using Scalar = typename Matrix::Scalar;
    const Eigen::Index n = vals.size();
    if (n == 0) return;
    const double scale = std::max(vals.cwiseAbs().maxCoeff(), h.cwiseAbs().maxCoeff());
    Matrix residual = h * vecs;
    residual -= vecs * vals.cast<Scalar>().asDiagonal();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double r = residual.col(k).norm();
        if (r > kResidualTol * scale && r > 0.0) {
            throw ContractViolation("eigenpair residual " + std::to_string(r) + " exceeds 1e-10 * ||H|| for k = " +
                                    std::to_string(k));
        }
    }
    Matrix gram = vecs.adjoint() * vecs;
    gram.diagonal().array() -= Scalar(1.0);
    const double dev = gram.cwiseAbs().maxCoeff();
    if (dev > kOrthonormalityTol) {
        throw ContractViolation("eigenvectors deviate from orthonormality by " + std::to_string(dev));
    }
}

void check_normalized(const Eigen::VectorXcd& psi0, std::size_t dim) {
    if (static_cast<std::size_t>(psi0.size()) != dim) {
        throw DimensionError("initial state has dimension " + std::to_string(psi0.size()) + ", expected " +
                             std::to_string(dim));
    }
    const double norm = psi0.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
        throw ContractViolation("initial state is not normalized (||psi0|| = " + std::to_string(norm) + ")");
    }
}

}  // namespace

SpectralDecomposition diagonalize(const models::HamiltonianMatrix& h, Verify verify) {
    if (h.entries.rows() != h.entries.cols()) throw DimensionError("diagonalize: matrix is not square");
    if (h.dim() > kMaxDenseDim) {
        throw SizeLimitError("diagonalize: dimension " + std::to_string(h.dim()) + " exceeds the dense cap " +
                             std::to_string(kMaxDenseDim));
    }
    if (!h.is_hermitian()) throw ContractViolation("diagonalize: matrix is not Hermitian");
    const auto n = static_cast<lapack_int>(h.entries.rows());
    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    if (n == 0) {
        d.eigenvectors.resize(0, 0);
        return d;
    }
    if (is_real(h.entries)) {
        const Eigen::MatrixXd real = h.entries.real();
        Eigen::MatrixXd a = real;
        check_lapack(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, d.eigenvalues.data()), "dsyevd");
        if (verify == Verify::yes) verify_decomposition(real, a, d.eigenvalues);
        d.eigenvectors = a.cast<Complex>();
    } else {
        d.eigenvectors = h.entries;
        check_lapack(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                    reinterpret_cast<lapack_complex_double*>(d.eigenvectors.data()), n,
                                    d.eigenvalues.data()),
                     "zheevd");
        if (verify == Verify::yes) verify_decomposition(h.entries, d.eigenvectors, d.eigenvalues);
    }
    return d;
}

std::vector<Eigen::VectorXcd> evolve(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0,
                                     std::span<const double> times) {
    check_normalized(psi0, d.dim());
    const Eigen::VectorXcd coeffs = d.eigenvectors.adjoint() * psi0;
    const Eigen::MatrixXcd states = kernels::spectral_states(d.eigenvectors, d.eigenvalues, coeffs, times);
    std::vector<Eigen::VectorXcd> out;
    out.reserve(times.size());
    for (Eigen::Index m = 0; m < states.cols(); ++m) out.emplace_back(states.col(m));
    return out;
}

Complex amplitude(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0, std::size_t target, double t) {
    check_normalized(psi0, d.dim());
    if (target >= d.dim()) {
        throw DimensionError("amplitude: target index " + std::to_string(target) + " out of range");
    }
    const Eigen::VectorXcd coeffs = d.eigenvectors.adjoint() * psi0;
    Complex acc{};
    const auto row = static_cast<Eigen::Index>(target);
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        acc += d.eigenvectors(row, k) * std::polar(1.0, -d.eigenvalues(k) * t) * coeffs(k);
    }
    return acc;
}

namespace {

std::vector<std::vector<Eigen::Index>> checked_groups(const IndexGroups& groups, std::size_t dim,
                                                      std::vector<std::string>& notes) {
    std::vector<std::vector<Eigen::Index>> out;
    std::set<std::size_t> seen;
    bool overlap = false;
    for (const auto& [name, idx] : groups) {
        std::vector<Eigen::Index> g;
        for (std::size_t i : idx) {
            if (i >= dim) {
                throw DimensionError("group '" + name + "' references basis index " + std::to_string(i) +
                                     " beyond dimension " + std::to_string(dim));
            }
            if (!seen.insert(i).second) overlap = true;
            g.push_back(static_cast<Eigen::Index>(i));
        }
        out.push_back(std::move(g));
    }
    if (overlap) notes.emplace_back("overlapping groups: channels do not form a partition");
    return out;
}

}  // namespace

TimeSeries occupation_weights(std::span<const Eigen::VectorXcd> states, std::span<const double> times,
                              const IndexGroups& groups) {
    if (states.size() != times.size()) throw DimensionError("occupation_weights: states and times differ in length");
    TimeSeries ts;
    ts.times.assign(times.begin(), times.end());
    const std::size_t dim = states.empty() ? 0 : static_cast<std::size_t>(states.front().size());
    const auto idx = checked_groups(groups, dim, ts.notes);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<double> w(states.size(), 0.0);
        for (std::size_t m = 0; m < states.size(); ++m) {
            for (Eigen::Index i : idx[g]) w[m] += std::norm(states[m](i));
        }
        ts.add_channel(groups[g].first, std::move(w));
    }
    return ts;
}

TimeSeries occupation_weights(const SpectralDecomposition& d, const Eigen::VectorXcd& psi0,
                              std::span<const double> times, const IndexGroups& groups) {
    check_normalized(psi0, d.dim());
    TimeSeries ts;
    ts.times.assign(times.begin(), times.end());
    const auto idx = checked_groups(groups, d.dim(), ts.notes);
    const Eigen::VectorXcd coeffs = d.eigenvectors.adjoint() * psi0;
    const Eigen::MatrixXd w = kernels::group_weights(d.eigenvectors, d.eigenvalues, coeffs, times, idx);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto col = w.col(static_cast<Eigen::Index>(g));
        ts.add_channel(groups[g].first, std::vector<double>(col.data(), col.data() + col.size()));
    }
    return ts;
}

double energy(const models::HamiltonianMatrix& h, const Eigen::VectorXcd& psi) {
    return psi.dot(h.entries * psi).real();
}

std::vector<double> linear_grid(double t0, double t1, std::size_t n) {
    std::vector<double> t(n);
    if (n == 1) {
        t[0] = t0;
        return t;
    }
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return t;
}

Eigen::VectorXcd basis_state(std::size_t n, std::size_t i) {
    if (i >= n) throw DimensionError("basis_state: index out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
}

}  // namespace fockdyn::propagator
