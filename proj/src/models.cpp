#include "fockdyn/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fockdyn/errors.hpp"

namespace fockdyn::models {

using fock::Ladder;
using fock::LadderOp;
using fock::ModeIndex;
using fock::OccupationConfig;

bool HamiltonianMatrix::is_hermitian() const {
    const Eigen::Index n = entries.rows();
    if (entries.cols() != n) return false;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j; i < n; ++i) {
            if (entries(i, j) != std::conj(entries(j, i))) return false;
        }
    }
    return true;
}

double HamiltonianMatrix::max_abs() const {
    return entries.size() == 0 ? 0.0 : entries.cwiseAbs().maxCoeff();
}

namespace {

// Removes rounding-level asymmetry; exact for already Hermitian input.
void hermitize(Eigen::MatrixXcd& h) {
    Eigen::MatrixXcd adj = h.adjoint();
    h = 0.5 * (h + adj);
}

using ConfigIndex = std::map<OccupationConfig, Eigen::Index>;

ConfigIndex index_of(const std::vector<OccupationConfig>& basis) {
    ConfigIndex idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<Eigen::Index>(i));
    return idx;
}

std::vector<std::string> labels_of(const std::vector<OccupationConfig>& basis) {
    std::vector<std::string> out;
    out.reserve(basis.size());
    for (const auto& c : basis) out.push_back(c.label());
    return out;
}

// Adds coeff * <i|ops|col> for the config at column `col`.
void add_string(const fock::ModeSpace& space, const ConfigIndex& idx, const OccupationConfig& c, Eigen::Index col,
                const std::vector<LadderOp>& ops, Complex coeff, Eigen::MatrixXcd& h) {
    const fock::LadderResult r = fock::apply_string(space, c, ops);
    if (!r.ok()) return;  // zero, or truncated out of the space
    const auto it = idx.find(r.config);
    if (it == idx.end()) return;  // excluded by the sector constraints
    h(it->second, col) += coeff * r.amplitude;
}

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw ParameterError(std::string(what) + " must be finite");
}

}  // namespace

// ---------------------------------------------------------------------------

void ChooserParams::validate() const {
    check_finite(V, "chooser V");
    check_finite(W, "chooser W");
    check_finite(U, "chooser U");
    check_finite(alpha, "chooser alpha");
    check_finite(delta, "chooser delta");
    if (N > 0 && !(delta > 0.0)) {
        throw ParameterError("chooser: band width delta must be > 0 when N > 0");
    }
}

std::vector<double> ChooserParams::band_energies() const {
    std::vector<double> eps(N);
    if (N == 1) {
        eps[0] = 0.0;
    } else {
        for (std::size_t k = 0; k < N; ++k) {
            eps[k] = -0.5 * delta + delta * static_cast<double>(k) / static_cast<double>(N - 1);
        }
    }
    return eps;
}

HamiltonianMatrix build_chooser(const ChooserParams& p) {
    p.validate();
    using namespace chooser_index;
    const Eigen::Index n = static_cast<Eigen::Index>(band_begin + p.N);
    HamiltonianMatrix h;
    h.entries = Eigen::MatrixXcd::Zero(n, n);
    h.entries(q0, r0) = h.entries(r0, q0) = p.V;
    h.entries(r0, kproj) = h.entries(kproj, r0) = p.W;
    h.entries(kproj, kproj) = p.alpha;
    const auto eps = p.band_energies();
    const double wk = p.N > 0 ? p.U / std::sqrt(static_cast<double>(p.N)) : 0.0;
    for (std::size_t k = 0; k < p.N; ++k) {
        const auto b = static_cast<Eigen::Index>(band_begin + k);
        h.entries(b, b) = eps[k];
        h.entries(kproj, b) = h.entries(b, kproj) = wk;
    }
    h.basis_labels = {"Q0", "R0", "Kproj"};
    for (std::size_t k = 0; k < p.N; ++k) h.basis_labels.push_back("K" + std::to_string(k + 1));
    return h;
}

// ---------------------------------------------------------------------------

void TelegraphParams::validate() const {
    check_finite(hop, "telegraph hop");
    for (const auto& s : sites) {
        for (double v : {s.E_g, s.E_w, s.V_loc, s.eps_grav, s.V_gw}) check_finite(v, "telegraph site parameter");
        if (!std::is_sorted(s.band.begin(), s.band.end())) {
            throw ParameterError("telegraph: band energies must be sorted ascending");
        }
        for (double e : s.band) check_finite(e, "telegraph band energy");
    }
}

TelegraphLayout telegraph_layout(const TelegraphParams& p) {
    return TelegraphLayout{p.sites[0].band.size(), p.sites[1].band.size()};
}

fock::ModeSpace telegraph_space(const TelegraphParams& p) {
    const TelegraphLayout lay = telegraph_layout(p);
    fock::ModeSpace space;
    space.n_matter_modes = TelegraphLayout::n_matter;
    space.n_gravonon_modes = lay.n_gravonon();
    space.n_max = 1;
    space.sector = 1;
    for (std::size_t site = 0; site < 2; ++site) {
        fock::GroupConstraint g;
        g.field = fock::Field::gravonon;
        g.total = 1;
        g.modes.push_back(TelegraphLayout::grav(site).index);
        for (std::size_t k = 0; k < lay.band_size(site); ++k) g.modes.push_back(lay.k(site, k).index);
        space.constraints.push_back(std::move(g));
    }
    return space;
}

HamiltonianMatrix build_telegraph(const TelegraphParams& p, const fock::ModeSpace& space) {
    p.validate();
    const TelegraphLayout lay = telegraph_layout(p);
    if (space.n_matter_modes != TelegraphLayout::n_matter || space.n_gravonon_modes != lay.n_gravonon()) {
        throw DimensionError("build_telegraph: mode space has " + std::to_string(space.n_matter_modes) + "+" +
                             std::to_string(space.n_gravonon_modes) + " modes, parameters require 4+" +
                             std::to_string(lay.n_gravonon()));
    }
    const auto basis = fock::enumerate_configs(space);
    const auto idx = index_of(basis);
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());

    HamiltonianMatrix h;
    h.entries = Eigen::MatrixXcd::Zero(n, n);
    h.basis_labels = labels_of(basis);

    for (Eigen::Index col = 0; col < n; ++col) {
        const OccupationConfig& c = basis[static_cast<std::size_t>(col)];
        double diag = 0.0;
        for (std::size_t site = 0; site < 2; ++site) {
            const TelegraphSite& s = p.sites[site];
            diag += s.E_g * c.at(TelegraphLayout::g(site)) + s.E_w * c.at(TelegraphLayout::w(site)) +
                    s.eps_grav * c.at(TelegraphLayout::grav(site));
            for (std::size_t k = 0; k < s.band.size(); ++k) diag += s.band[k] * c.at(lay.k(site, k));
        }
        h.entries(col, col) += diag;

        for (std::size_t site = 0; site < 2; ++site) {
            const TelegraphSite& s = p.sites[site];
            const ModeIndex g = TelegraphLayout::g(site);
            const ModeIndex w = TelegraphLayout::w(site);
            if (s.V_loc != 0.0) {
                add_string(space, idx, c, col, {{g, Ladder::raise}, {w, Ladder::lower}}, s.V_loc, h.entries);
                add_string(space, idx, c, col, {{w, Ladder::raise}, {g, Ladder::lower}}, s.V_loc, h.entries);
            }
            // n_w multiplies the gravonon exchange, so it only acts inside the warp resonance.
            const int n_w = c.at(w);
            if (s.V_gw != 0.0 && n_w != 0) {
                const ModeIndex loc = TelegraphLayout::grav(site);
                for (std::size_t k = 0; k < s.band.size(); ++k) {
                    const ModeIndex bk = lay.k(site, k);
                    const double coeff = s.V_gw * n_w;
                    add_string(space, idx, c, col, {{loc, Ladder::raise}, {bk, Ladder::lower}}, coeff, h.entries);
                    add_string(space, idx, c, col, {{bk, Ladder::raise}, {loc, Ladder::lower}}, coeff, h.entries);
                }
            }
        }
        if (p.hop != 0.0) {
            const ModeIndex g1 = TelegraphLayout::g(0);
            const ModeIndex g2 = TelegraphLayout::g(1);
            add_string(space, idx, c, col, {{g1, Ladder::raise}, {g2, Ladder::lower}}, p.hop, h.entries);
            add_string(space, idx, c, col, {{g2, Ladder::raise}, {g1, Ladder::lower}}, p.hop, h.entries);
        }
    }
    hermitize(h.entries);
    return h;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<LadderOp> term_string(const CiTerm& t) {
    const auto& ix = t.indices;
    switch (t.kind) {
        case TermKind::matter_hop:
            return {{fock::matter(ix[0]), Ladder::raise}, {fock::matter(ix[1]), Ladder::lower}};
        case TermKind::gravonon_hop:
            return {{fock::gravonon(ix[0]), Ladder::raise}, {fock::gravonon(ix[1]), Ladder::lower}};
        case TermKind::mixed:
            return {{fock::matter(ix[0]), Ladder::raise},
                    {fock::matter(ix[1]), Ladder::lower},
                    {fock::gravonon(ix[2]), Ladder::raise},
                    {fock::gravonon(ix[3]), Ladder::lower}};
    }
    return {};
}

bool self_adjoint(const CiTerm& t) {
    const auto& ix = t.indices;
    return ix[0] == ix[1] && (t.kind != TermKind::mixed || ix[2] == ix[3]);
}

void validate_term(const fock::ModeSpace& space, const CiTerm& t) {
    const std::size_t want = t.kind == TermKind::mixed ? 4 : 2;
    if (t.indices.size() != want) {
        throw ParameterError("CI term needs " + std::to_string(want) + " indices, got " +
                             std::to_string(t.indices.size()));
    }
    auto check = [](std::size_t i, std::size_t limit, const char* field) {
        if (i >= limit) {
            throw ParameterError(std::string("CI term ") + field + " index " + std::to_string(i) +
                                 " out of range (" + std::to_string(limit) + " modes)");
        }
    };
    const bool matter_first = t.kind != TermKind::gravonon_hop;
    const std::size_t lim01 = matter_first ? space.n_matter_modes : space.n_gravonon_modes;
    const char* f01 = matter_first ? "matter" : "gravonon";
    check(t.indices[0], lim01, f01);
    check(t.indices[1], lim01, f01);
    if (t.kind == TermKind::mixed) {
        check(t.indices[2], space.n_gravonon_modes, "gravonon");
        check(t.indices[3], space.n_gravonon_modes, "gravonon");
    }
    if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag())) {
        throw ParameterError("CI term coefficient must be finite");
    }
    if (self_adjoint(t) && t.coefficient.imag() != 0.0) {
        throw ParameterError("self-adjoint CI term must have a real coefficient");
    }
}

}  // namespace

HamiltonianMatrix build_generic_ci(const fock::ModeSpace& space, const std::vector<CiTerm>& terms) {
    for (const auto& t : terms) validate_term(space, t);
    const auto basis = fock::enumerate_configs(space);
    const auto idx = index_of(basis);
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());

    Eigen::MatrixXcd offdiag = Eigen::MatrixXcd::Zero(n, n);  // terms whose conjugate is added separately
    Eigen::MatrixXcd selfadj = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& t : terms) {
        const auto ops = term_string(t);
        Eigen::MatrixXcd& target = self_adjoint(t) ? selfadj : offdiag;
        for (Eigen::Index col = 0; col < n; ++col) {
            add_string(space, idx, basis[static_cast<std::size_t>(col)], col, ops, t.coefficient, target);
        }
    }
    HamiltonianMatrix h;
    h.entries = offdiag + offdiag.adjoint() + selfadj;
    hermitize(h.entries);
    h.basis_labels = labels_of(basis);
    return h;
}

std::vector<CiTerm> telegraph_terms(const TelegraphParams& p) {
    const TelegraphLayout lay = telegraph_layout(p);
    std::vector<CiTerm> terms;
    for (std::size_t site = 0; site < 2; ++site) {
        const TelegraphSite& s = p.sites[site];
        const std::size_t g = TelegraphLayout::g(site).index;
        const std::size_t w = TelegraphLayout::w(site).index;
        const std::size_t loc = TelegraphLayout::grav(site).index;
        terms.push_back({TermKind::matter_hop, {g, g}, s.E_g});
        terms.push_back({TermKind::matter_hop, {w, w}, s.E_w});
        terms.push_back({TermKind::matter_hop, {g, w}, s.V_loc});
        terms.push_back({TermKind::gravonon_hop, {loc, loc}, s.eps_grav});
        for (std::size_t k = 0; k < s.band.size(); ++k) {
            const std::size_t bk = lay.k(site, k).index;
            terms.push_back({TermKind::gravonon_hop, {bk, bk}, s.band[k]});
            terms.push_back({TermKind::mixed, {w, w, loc, bk}, s.V_gw});
        }
    }
    terms.push_back({TermKind::matter_hop, {TelegraphLayout::g(0).index, TelegraphLayout::g(1).index}, p.hop});
    return terms;
}

}  // namespace fockdyn::models
