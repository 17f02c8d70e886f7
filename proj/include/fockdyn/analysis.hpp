#pragma once

// Summary statistics of sampled channels.

#include <array>
#include <cstddef>
#include <span>

namespace fockdyn::analysis {

struct Plateaus {
    double high = 0.0;
    double low = 0.0;
};

/// Two-cluster split of the samples: iterate high/low means with the midpoint
/// as threshold until the means stop moving.
Plateaus plateaus(std::span<const double> values);

/// Fraction of samples within tol of either plateau.
double plateau_fraction(std::span<const double> values, const Plateaus& p, double tol);

/// Number of dominance changes of a over b. The difference must leave the band
/// |a - b| <= margin on the other side before a change counts, so jitter near
/// a crossing is not counted twice.
std::size_t alternations(std::span<const double> a, std::span<const double> b, double margin);

struct TelegraphScore {
    std::size_t alternations = 0;
    std::array<Plateaus, 2> plateaus;
    std::array<double, 2> fraction{};  // time share near a plateau
    double contrast = 0.0;             // min over channels of high - low
};

inline constexpr double kPlateauTol = 0.15;
inline constexpr double kCrossingMargin = 0.05;

TelegraphScore score_telegraph(std::span<const double> site1, std::span<const double> site2,
                               double tol = kPlateauTol, double margin = kCrossingMargin);

/// Minus the slope of a least-squares fit of log(values) against time over
/// t0 <= t <= t1. Samples with values <= 0 are skipped.
double log_linear_rate(std::span<const double> times, std::span<const double> values, double t0, double t1);

/// Mean over t0 <= t <= t1.
double window_mean(std::span<const double> times, std::span<const double> values, double t0, double t1);

/// max |a - b| over t >= t0.
double max_abs_deviation(std::span<const double> times, std::span<const double> a, std::span<const double> b,
                         double t0);

}  // namespace fockdyn::analysis
