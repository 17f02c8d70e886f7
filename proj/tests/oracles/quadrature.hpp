#pragma once

// Omega by direct trapezoid quadrature on a fine grid:
//   theta^2 V_i V_j [ int g_i' g_j' / (2 m_g) dx + V_o int g_i g_j dx ],
// the kinetic term after integrating by parts, with g' by central differences.

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline Eigen::MatrixXd omega_quadrature(const std::vector<double>& x0, double sigma, const std::vector<double>& vg,
                                        double theta, double m_g, double v_o, double h = 1e-3) {
    const double lo = x0.front() - 14.0 * sigma;
    const double hi = x0.back() + 14.0 * sigma;
    const auto npts = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1;
    const double step = (hi - lo) / static_cast<double>(npts - 1);
    const double norm = 1.0 / std::sqrt(std::sqrt(std::numbers::pi) * sigma);
    auto g = [&](std::size_t i, double x) {
        const double d = (x - x0[i]) / sigma;
        return norm * std::exp(-0.5 * d * d);
    };
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> val(n, std::vector<double>(npts)), der(n, std::vector<double>(npts));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < npts; ++k) {
            const double x = lo + step * static_cast<double>(k);
            val[i][k] = g(i, x);
            der[i][k] = (g(i, x + 0.5 * step) - g(i, x - 0.5 * step)) / step;
        }
    }
    Eigen::MatrixXd om(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double kin = 0.0, ov = 0.0;
            for (std::size_t k = 0; k < npts; ++k) {
                const double w = (k == 0 || k + 1 == npts) ? 0.5 : 1.0;
                kin += w * der[i][k] * der[j][k];
                ov += w * val[i][k] * val[j][k];
            }
            kin *= step / (2.0 * m_g);
            ov *= step;
            om(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = theta * theta * vg[i] * vg[j] * (kin + v_o * ov);
        }
    }
    return om;
}

}  // namespace oracle
