#include "doctest.h"

#include <cmath>
#include <vector>

#include "fockdyn/analysis.hpp"
#include "fockdyn/csv.hpp"
#include "fockdyn/errors.hpp"

using namespace fockdyn;

TEST_CASE("plateaus of a two-level signal") {
    std::vector<double> v;
    for (int i = 0; i < 100; ++i) v.push_back((i / 10) % 2 ? 0.9 + 0.01 * (i % 3) : 0.1 - 0.01 * (i % 2));
    const auto p = analysis::plateaus(v);
    CHECK(p.high == doctest::Approx(0.91).epsilon(1e-2));
    CHECK(p.low == doctest::Approx(0.095).epsilon(1e-2));
    CHECK(analysis::plateau_fraction(v, p, 0.05) == 1.0);
    CHECK_THROWS_AS(analysis::plateaus(std::vector<double>{}), DimensionError);
}

TEST_CASE("alternations ignore jitter at a crossing") {
    const std::vector<double> a{1.0, 0.6, 0.52, 0.49, 0.51, 0.48, 0.2, 0.1, 0.8, 0.9};
    std::vector<double> b;
    for (double x : a) b.push_back(1.0 - x);
    CHECK(analysis::alternations(a, b, 0.05) == 2);
    CHECK(analysis::alternations(a, b, 0.0) == 4);
}

TEST_CASE("telegraph score separates switching from smooth oscillation") {
    std::vector<double> sw, sm;
    for (int i = 0; i < 400; ++i) {
        sw.push_back((i / 100) % 2 ? 0.95 : 0.05);
        sm.push_back(0.5 + 0.5 * std::cos(0.0314 * i));
    }
    std::vector<double> sw2, sm2;
    for (double x : sw) sw2.push_back(1.0 - x);
    for (double x : sm) sm2.push_back(1.0 - x);
    const auto a = analysis::score_telegraph(sw, sw2);
    CHECK(a.alternations == 3);
    CHECK(a.fraction[0] == 1.0);
    CHECK(a.contrast == doctest::Approx(0.9));
    const auto b = analysis::score_telegraph(sm, sm2);
    CHECK(b.fraction[0] < 0.8);
}

TEST_CASE("exponential rate fit and window statistics") {
    std::vector<double> t, v;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(0.1 * i);
        v.push_back(3.0 * std::exp(-0.7 * t.back()));
    }
    CHECK(analysis::log_linear_rate(t, v, 1.0, 5.0) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK_THROWS_AS(analysis::log_linear_rate(t, v, 20.0, 30.0), ContractViolation);
    CHECK(analysis::window_mean(t, t, 2.0, 4.0) == doctest::Approx(3.0));
    std::vector<double> w = v;
    w[10] += 0.5;
    w[90] += 0.25;
    CHECK(analysis::max_abs_deviation(t, v, w, 2.0) == doctest::Approx(0.25));
}

TEST_CASE("csv formatting") {
    CHECK(csv::format(1e-3) == "1.00000000000e-03");
    CHECK(csv::format(-2.5) == "-2.50000000000e+00");
    csv::Table t{{"n", "x"}, {{1.0, 0.5}, {2.0, 0.25}}, {0}};
    CHECK(t.str() == "n,x\n1,5.00000000000e-01\n2,2.50000000000e-01\n");
    csv::Table bad{{"a"}, {{1.0, 2.0}}, {}};
    CHECK_THROWS_AS(bad.str(), DimensionError);
    csv::Table empty{{"a", "b"}, {}, {}};
    CHECK(empty.str() == "a,b\n");
}
