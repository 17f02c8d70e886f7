#pragma once

// Order-of-magnitude estimates in Hartree atomic units.

#include <cstddef>
#include <string>
#include <vector>

namespace fockdyn::dimensional {

inline constexpr double kHartreeEv = 27.2114;

struct PhysicalConstants {
    double G = 1e-40;
    double c = 137.036;

    void validate() const;
};

/// -G M / r.
double v_grav_4d(double G, double M, double r);

/// -G11 M / (pi^7 r^8).
double v_grav_11d(double G11, double M, double r);

/// G11 = (2 a pi)^7 G.
double g11_from_compactification(double G, double a);

/// Strength of the 11-dimensional law relative to the 4-dimensional one at
/// r = 1 once G11 is fixed by compactification: (2a)^7.
double enhancement_factor(double a);

/// rho_kappa^d = (L/pi)^min(d,3) (a/pi)^max(d-3,0): three macroscopic
/// directions of length L, the rest compactified with length a.
double k_space_density(int d, double L, double a);

/// Graviton mode density for d spatial dimensions with linear dispersion E = kappa c:
/// E^(d-1) / c^d * pi^(d/2) / Gamma(1 + d/2) * rho_kappa^d.
double mode_density(double E, double c, int d, double L, double a);

/// Density of states of two-dimensional adparticle motion, 2 M L^2 / pi.
double rho_2d(double M, double L);

struct DensityRatio {
    double full = 0.0;       // mode_density(E, c, 10, L, a) / rho_2d(M, L)
    double displayed = 0.0;  // E^9/c^10 pi^5/5! L a^7 / pi^9, the printed closed form
};

DensityRatio density_ratio(double E, double c, double L, double a, double M);

struct GravononMass {
    double m_g = 0.0;  // k / c
    double v_o = 0.0;  // -k c / 2
};

GravononMass gravonon_mass(double k, double c);

struct SiteSelection {
    double energy_spacing = 0.0;
    double geometry_spacing = 0.0;
    double filtered_sites = 0.0;
    double filtered_energy = 0.0;
};

/// Spacings obtained by spreading energy and geometry over n_sites. A chooser
/// resolving geometry to geometry_resolution still faces
/// n_sites * resolution / geometry_spread candidates (clamped to [1, n_sites]),
/// which must then be told apart on the energy scale filtered_energy.
SiteSelection site_selection_scales(double energy_spread, double geometry_spread, double n_sites,
                                    double geometry_resolution);

struct G11Row {
    double a = 0.0;
    double g11 = 0.0;
    double g11_over_pi7 = 0.0;
    double enhancement = 0.0;
};

/// One row per compactification radius, in the order given.
std::vector<G11Row> g11_table(double G, const std::vector<double>& radii);

inline const std::vector<double> kTableRadii{1e4, 1e3, 1e2, 10.0};

}  // namespace fockdyn::dimensional
