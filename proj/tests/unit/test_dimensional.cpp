#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fockdyn/dimensional.hpp"
#include "fockdyn/errors.hpp"

using namespace fockdyn;
using namespace fockdyn::dimensional;

TEST_CASE("four-dimensional law") {
    CHECK(v_grav_4d(1e-40, 1e4, 6.0) == doctest::Approx(-1.6667e-37).epsilon(1e-4));
    CHECK(v_grav_4d(1e-40, 0.0, 6.0) == 0.0);
    CHECK(v_grav_4d(1e-40, 5.0, 8.0) == doctest::Approx(0.5 * v_grav_4d(1e-40, 5.0, 4.0)));
    CHECK_THROWS_AS(v_grav_4d(1e-40, 1.0, 0.0), ParameterError);
}

TEST_CASE("eleven-dimensional law") {
    const double g11 = 1e-18 * std::pow(std::numbers::pi, 7);
    const double v = v_grav_11d(g11, 1e4, 6.0);
    CHECK(v == doctest::Approx(-1e-14 / std::pow(6.0, 8)).epsilon(1e-12));
    CHECK(std::abs(v) > 1e-21);
    CHECK(std::abs(v) < 1e-19);
    CHECK(v_grav_11d(g11, 1e4, 12.0) == doctest::Approx(v / 256.0));
    CHECK(v_grav_11d(g11, 0.0, 6.0) == 0.0);
}

TEST_CASE("compactified coupling") {
    const double pi7 = std::pow(std::numbers::pi, 7);
    CHECK(g11_from_compactification(1e-40, 1e4) / pi7 == doctest::Approx(1.28e-10).epsilon(1e-12));
    CHECK(g11_from_compactification(1e-40, 10.0) / pi7 == doctest::Approx(1.28e-31).epsilon(1e-12));
    CHECK(g11_from_compactification(1e-40, 20.0) / g11_from_compactification(1e-40, 10.0) ==
          doctest::Approx(128.0).epsilon(1e-14));
    // Matching at r = 2a.
    const double a = 50.0;
    CHECK(v_grav_11d(g11_from_compactification(1e-40, a), 3.0, 2.0 * a) ==
          doctest::Approx(v_grav_4d(1e-40, 3.0, 2.0 * a)).epsilon(1e-13));
    CHECK(enhancement_factor(1e4) == doctest::Approx(std::pow(2e4, 7)));
    CHECK_THROWS_AS(g11_from_compactification(1e-40, 0.0), ParameterError);
}

TEST_CASE("mode density") {
    // Line density over a linear dispersion: 2L / (pi c) including both directions of k.
    CHECK(mode_density(3.0, 137.036, 1, 1e3, 1.0) == doctest::Approx(2e3 / (std::numbers::pi * 137.036)));
    // Ball volume pi^5/5! in ten dimensions, three long directions and seven compact ones.
    const double c = 137.036, e = 10.0 * c, pi = std::numbers::pi;
    const double direct = std::pow(e, 9) / std::pow(c, 10) * std::pow(pi, 5) / 120.0 * std::pow(1e7 / pi, 3) *
                          std::pow(1e4 / pi, 7);
    CHECK(mode_density(e, c, 10, 1e7, 1e4) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(std::log10(direct) == doctest::Approx(51.3).epsilon(1e-2));
    CHECK(mode_density(2.0, 1.0, 10, 5.0, 2.0) / mode_density(1.0, 1.0, 10, 5.0, 2.0) == doctest::Approx(512.0));
    CHECK_THROWS_AS(mode_density(1.0, 1.0, 0, 1.0, 1.0), DimensionError);
}

TEST_CASE("density ratio at the quoted parameters") {
    const double e = 10.0 * 137.036;
    const auto r = density_ratio(e, 137.036, 1e7, 1e4, 2000.0);
    CHECK(std::log10(r.full) > 33.0);
    CHECK(std::log10(r.full) < 35.0);
    const auto r2 = density_ratio(e, 137.036, 1e7, 1e4 * std::pow(2.0, 1.0 / 7.0), 2000.0);
    CHECK(r2.full / r.full == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rho_2d(1836.0, 1e7) == doctest::Approx(2.0 * 1836.0 * 1e14 / std::numbers::pi));
    CHECK(std::log10(rho_2d(1836.0, 1e7)) == doctest::Approx(17.07).epsilon(1e-3));
}

TEST_CASE("gravonon mass") {
    const auto g = gravonon_mass(10.0, 137.036);
    CHECK(g.m_g == doctest::Approx(0.0730).epsilon(1e-2));
    CHECK(g.v_o == doctest::Approx(-685.18).epsilon(1e-4));
    CHECK(gravonon_mass(137.036, 137.036).m_g == doctest::Approx(1.0));
    CHECK_THROWS_AS(gravonon_mass(0.0, 137.036), ParameterError);
}

TEST_CASE("site selection") {
    const double spread = 1e-3 / kHartreeEv;
    const auto s = site_selection_scales(spread, 0.1, 1e20, 1e-5);
    CHECK(s.energy_spacing * kHartreeEv == doctest::Approx(1e-23));
    CHECK(s.geometry_spacing == doctest::Approx(1e-21));
    CHECK(s.filtered_sites == doctest::Approx(1e16));
    CHECK(s.filtered_energy * kHartreeEv == doctest::Approx(1e-19));
    const auto one = site_selection_scales(spread, 0.1, 1.0, 1e-5);
    CHECK(one.energy_spacing == spread);
    CHECK(one.geometry_spacing == 0.1);
}

TEST_CASE("table rows keep the requested order") {
    const auto t = g11_table(1e-40, kTableRadii);
    REQUIRE(t.size() == 4);
    const double orders[] = {-10.0, -17.0, -24.0, -31.0};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(t[i].a == kTableRadii[i]);
        CHECK(std::abs(std::log10(t[i].g11_over_pi7) - orders[i]) < 1.0);
    }
}
