#include "fockdyn/dimensional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fockdyn/errors.hpp"

namespace fockdyn::dimensional {

using std::numbers::pi;

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw ParameterError(std::string(what) + " must be > 0, got " + std::to_string(v));
}

}  // namespace

void PhysicalConstants::validate() const {
    require_positive(G, "G");
    require_positive(c, "c");
}

double v_grav_4d(double G, double M, double r) {
    require_positive(r, "r");
    return -G * M / r;
}

double v_grav_11d(double G11, double M, double r) {
    require_positive(r, "r");
    return -G11 * M / (std::pow(pi, 7) * std::pow(r, 8));
}

double g11_from_compactification(double G, double a) {
    require_positive(a, "a");
    return std::pow(2.0 * a * pi, 7) * G;
}

double enhancement_factor(double a) {
    require_positive(a, "a");
    return std::pow(2.0 * a, 7);
}

double k_space_density(int d, double L, double a) {
    if (d < 1) throw DimensionError("k-space dimension must be >= 1, got " + std::to_string(d));
    require_positive(L, "L");
    require_positive(a, "a");
    const int macro = std::min(d, 3);
    return std::pow(L / pi, macro) * std::pow(a / pi, d - macro);
}

double mode_density(double E, double c, int d, double L, double a) {
    require_positive(E, "E");
    require_positive(c, "c");
    const double sphere = std::pow(pi, 0.5 * d) / std::tgamma(1.0 + 0.5 * d);
    return std::pow(E, d - 1) / std::pow(c, d) * sphere * k_space_density(d, L, a);
}

double rho_2d(double M, double L) {
    require_positive(M, "M");
    require_positive(L, "L");
    return 2.0 * M * L * L / pi;
}

DensityRatio density_ratio(double E, double c, double L, double a, double M) {
    DensityRatio r;
    r.full = mode_density(E, c, 10, L, a) / rho_2d(M, L);
    r.displayed = std::pow(E, 9) / std::pow(c, 10) * std::pow(pi, 5) / 120.0 * L * std::pow(a, 7) / std::pow(pi, 9);
    return r;
}

GravononMass gravonon_mass(double k, double c) {
    require_positive(k, "k");
    require_positive(c, "c");
    return {k / c, -0.5 * k * c};
}

SiteSelection site_selection_scales(double energy_spread, double geometry_spread, double n_sites,
                                    double geometry_resolution) {
    if (!(n_sites >= 1.0)) throw ParameterError("n_sites must be >= 1");
    require_positive(geometry_resolution, "geometry resolution");
    require_positive(geometry_spread, "geometry spread");
    SiteSelection s;
    s.energy_spacing = energy_spread / n_sites;
    s.geometry_spacing = geometry_spread / n_sites;
    // Sites whose geometries fall inside one resolution cell remain indistinguishable.
    s.filtered_sites = std::clamp(n_sites * geometry_resolution / geometry_spread, 1.0, n_sites);
    s.filtered_energy = energy_spread / s.filtered_sites;
    return s;
}

std::vector<G11Row> g11_table(double G, const std::vector<double>& radii) {
    std::vector<G11Row> rows;
    rows.reserve(radii.size());
    for (double a : radii) {
        const double g11 = g11_from_compactification(G, a);
        rows.push_back({a, g11, g11 / std::pow(pi, 7), enhancement_factor(a)});
    }
    return rows;
}

}  // namespace fockdyn::dimensional
