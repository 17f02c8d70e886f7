#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockdyn/fock.hpp"

namespace fockdyn::models {

using Complex = std::complex<double>;

/// Dense Hermitian matrix over a labelled basis.
struct HamiltonianMatrix {
    Eigen::MatrixXcd entries;
    std::vector<std::string> basis_labels;

    std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
    /// Exact entrywise check entries(i,j) == conj(entries(j,i)).
    bool is_hermitian() const;
    /// Largest absolute entry; used to scale residual tolerances.
    double max_abs() const;
};

// ---------------------------------------------------------------------------
// Chooser model: source |Q0>, screen |R0>, projected resonance |Kproj> and a
// flat gravonon band {|K_kappa>} with N levels over a width delta.

struct ChooserParams {
    double V = 0.0;      // <Q0|H|R0>
    double W = 0.0;      // <R0|H|Kproj>
    std::size_t N = 0;   // band levels
    double delta = 1.0;  // band width
    double U = 0.0;      // band coupling scale; each level couples with U/sqrt(N)
    double alpha = 0.0;  // diagonal energy of |Kproj>

    void validate() const;
    /// N evenly spaced energies spanning [-delta/2, +delta/2] (a single level sits at 0).
    std::vector<double> band_energies() const;
};

namespace chooser_index {
inline constexpr std::size_t q0 = 0;
inline constexpr std::size_t r0 = 1;
inline constexpr std::size_t kproj = 2;
inline constexpr std::size_t band_begin = 3;
}  // namespace chooser_index

HamiltonianMatrix build_chooser(const ChooserParams& p);

// ---------------------------------------------------------------------------
// Telegraph model: two adsorption sites, each with a core state g_i, a warp
// resonance w_i, a local gravonon mode and a discrete gravonon continuum.

struct TelegraphSite {
    double E_g = 0.0;
    double E_w = 0.0;
    double V_loc = 0.0;            // g_i <-> w_i
    double eps_grav = 0.0;         // local gravonon quantum
    std::vector<double> band;      // continuum gravonon energies, ascending
    double V_gw = 0.0;             // n_w (b+_grav b_k + h.c.)
};

struct TelegraphParams {
    std::array<TelegraphSite, 2> sites;
    /// g1 <-> g2 hopping. Zero reproduces the bare two-site Hamiltonian.
    double hop = 0.0;

    void validate() const;
};

/// Mode layout used by the telegraph model.
///   matter:   g1, g2, w1, w2
///   gravonon: grav1, grav2, k1[0..N1), k2[0..N2)
struct TelegraphLayout {
    std::size_t band1 = 0;
    std::size_t band2 = 0;

    static constexpr std::size_t n_matter = 4;
    static fock::ModeIndex g(std::size_t site) { return fock::matter(site); }
    static fock::ModeIndex w(std::size_t site) { return fock::matter(2 + site); }
    static fock::ModeIndex grav(std::size_t site) { return fock::gravonon(site); }
    fock::ModeIndex k(std::size_t site, std::size_t level) const {
        return fock::gravonon(2 + (site == 0 ? level : band1 + level));
    }
    std::size_t band_size(std::size_t site) const { return site == 0 ? band1 : band2; }
    std::size_t n_gravonon() const { return 2 + band1 + band2; }
};

TelegraphLayout telegraph_layout(const TelegraphParams& p);

/// One adparticle (matter sector 1), n_max = 1 and one gravonon quantum per
/// site shared between the local mode and that site's continuum.
fock::ModeSpace telegraph_space(const TelegraphParams& p);

/// Matrix of the two-site Hamiltonian over enumerate_configs(space). Each term
/// is evaluated by applying its ladder-operator string to every basis config.
/// Throws DimensionError if the space lacks the modes the parameters require.
HamiltonianMatrix build_telegraph(const TelegraphParams& p, const fock::ModeSpace& space);

// ---------------------------------------------------------------------------
// Generic configuration-interaction terms.

enum class TermKind {
    matter_hop,     // h a+_p a_q
    gravonon_hop,   // v b+_p b_q
    mixed,          // h a+_p a_q b+_r b_s
};

struct CiTerm {
    TermKind kind = TermKind::matter_hop;
    std::vector<std::size_t> indices;  // {p, q} or {p, q, r, s}
    Complex coefficient{0.0, 0.0};
};

/// Adds every term plus its Hermitian conjugate. Self-adjoint terms (p == q and
/// r == s) are added once and must carry a real coefficient.
HamiltonianMatrix build_generic_ci(const fock::ModeSpace& space, const std::vector<CiTerm>& terms);

/// Term list equivalent to build_telegraph for the same parameters.
std::vector<CiTerm> telegraph_terms(const TelegraphParams& p);

}  // namespace fockdyn::models
