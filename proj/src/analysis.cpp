#include "fockdyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fockdyn/errors.hpp"

namespace fockdyn::analysis {

namespace {

void same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionError(std::string(what) + ": series lengths differ");
}

}  // namespace

Plateaus plateaus(std::span<const double> values) {
    if (values.empty()) throw DimensionError("plateaus: empty series");
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    Plateaus p{*mx, *mn};
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (p.high + p.low);
        double hs = 0.0, ls = 0.0;
        std::size_t hn = 0, ln = 0;
        for (double v : values) {
            if (v >= mid) {
                hs += v;
                ++hn;
            } else {
                ls += v;
                ++ln;
            }
        }
        const Plateaus next{hn ? hs / static_cast<double>(hn) : p.high, ln ? ls / static_cast<double>(ln) : p.low};
        const bool done = next.high == p.high && next.low == p.low;
        p = next;
        if (done) break;
    }
    return p;
}

double plateau_fraction(std::span<const double> values, const Plateaus& p, double tol) {
    if (values.empty()) return 0.0;
    std::size_t near = 0;
    for (double v : values) {
        if (std::abs(v - p.high) <= tol || std::abs(v - p.low) <= tol) ++near;
    }
    return static_cast<double>(near) / static_cast<double>(values.size());
}

std::size_t alternations(std::span<const double> a, std::span<const double> b, double margin) {
    same_length(a.size(), b.size(), "alternations");
    int side = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        const int s = d > margin ? 1 : (d < -margin ? -1 : 0);
        if (s == 0) continue;
        if (side != 0 && s != side) ++n;
        side = s;
    }
    return n;
}

TelegraphScore score_telegraph(std::span<const double> site1, std::span<const double> site2, double tol,
                               double margin) {
    TelegraphScore s;
    s.alternations = alternations(site1, site2, margin);
    const std::span<const double> ch[2] = {site1, site2};
    s.contrast = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2; ++i) {
        s.plateaus[i] = plateaus(ch[i]);
        s.fraction[i] = plateau_fraction(ch[i], s.plateaus[i], tol);
        s.contrast = std::min(s.contrast, s.plateaus[i].high - s.plateaus[i].low);
    }
    return s;
}

double log_linear_rate(std::span<const double> times, std::span<const double> values, double t0, double t1) {
    same_length(times.size(), values.size(), "log_linear_rate");
    double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t0 || times[i] > t1 || !(values[i] > 0.0)) continue;
        const double x = times[i];
        const double y = std::log(values[i]);
        n += 1.0;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = n * sxx - sx * sx;
    if (n < 2.0 || den <= 0.0) throw ContractViolation("log_linear_rate: fewer than two usable samples in window");
    return -(n * sxy - sx * sy) / den;
}

double window_mean(std::span<const double> times, std::span<const double> values, double t0, double t1) {
    same_length(times.size(), values.size(), "window_mean");
    double s = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t0 || times[i] > t1) continue;
        s += values[i];
        ++n;
    }
    if (n == 0) throw ContractViolation("window_mean: no samples in window");
    return s / static_cast<double>(n);
}

double max_abs_deviation(std::span<const double> times, std::span<const double> a, std::span<const double> b,
                         double t0) {
    same_length(times.size(), a.size(), "max_abs_deviation");
    same_length(times.size(), b.size(), "max_abs_deviation");
    double m = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] >= t0) m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace fockdyn::analysis
