#include "fockdyn/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fockdyn/errors.hpp"

namespace fockdyn::fock {

void ModeSpace::validate() const {
    if (n_max < 1) {
        throw ParameterError("ModeSpace: n_max must be >= 1, got " + std::to_string(n_max));
    }
    if (sector && *sector < 0) {
        throw ParameterError("ModeSpace: matter sector must be non-negative");
    }
    for (const auto& g : constraints) {
        const std::size_t limit = g.field == Field::matter ? n_matter_modes : n_gravonon_modes;
        if (g.total < 0) {
            throw ParameterError("ModeSpace: group constraint total must be non-negative");
        }
        for (std::size_t m : g.modes) {
            if (m >= limit) {
                throw ParameterError("ModeSpace: group constraint mode " + std::to_string(m) +
                                     " out of range (" + std::to_string(limit) + " modes)");
            }
        }
    }
}

std::string OccupationConfig::label() const {
    std::ostringstream os;
    os << '|';
    for (int n : matter_occ) os << n;
    os << ';';
    for (int n : grav_occ) os << n;
    os << '>';
    return os.str();
}

namespace {

// One linear constraint "sum of occupations at member positions == total",
// with a suffix count of members for feasibility pruning.
struct Bound {
    std::vector<char> member;           // per flat position
    std::vector<int> members_after;     // members strictly after position p
    int total = 0;
};

class Enumerator {
public:
    Enumerator(const ModeSpace& space, std::size_t cap) : space_(space), cap_(cap) {
        const std::size_t n = space.n_modes();
        auto add = [&](Field field, const std::vector<std::size_t>& modes, int total) {
            Bound b;
            b.member.assign(n, 0);
            for (std::size_t m : std::set<std::size_t>(modes.begin(), modes.end())) {
                b.member[field == Field::matter ? m : space.n_matter_modes + m] = 1;
            }
            b.members_after.assign(n, 0);
            int running = 0;
            for (std::size_t p = n; p-- > 0;) {
                b.members_after[p] = running;
                running += b.member[p];
            }
            b.total = total;
            bounds_.push_back(std::move(b));
        };
        if (space.sector) {
            std::vector<std::size_t> all(space.n_matter_modes);
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            add(Field::matter, all, *space.sector);
        }
        for (const auto& g : space.constraints) add(g.field, g.modes, g.total);
        partial_.assign(bounds_.size(), 0);
        occ_.assign(n, 0);
    }

    std::vector<OccupationConfig> run() {
        if (feasible_at_start()) recurse(0);
        return std::move(out_);
    }

private:
    bool feasible_at_start() const {
        const std::size_t n = space_.n_modes();
        for (const auto& b : bounds_) {
            int members = n == 0 ? 0 : b.members_after[0] + b.member[0];
            if (b.total > members * space_.n_max) return false;
        }
        return true;
    }

    void recurse(std::size_t pos) {
        const std::size_t n = space_.n_modes();
        if (pos == n) {
            for (std::size_t k = 0; k < bounds_.size(); ++k) {
                if (partial_[k] != bounds_[k].total) return;
            }
            if (out_.size() >= cap_) {
                throw SizeLimitError("basis size exceeds the configured cap of " + std::to_string(cap_) +
                                     " configurations");
            }
            OccupationConfig c;
            c.matter_occ.assign(occ_.begin(), occ_.begin() + static_cast<std::ptrdiff_t>(space_.n_matter_modes));
            c.grav_occ.assign(occ_.begin() + static_cast<std::ptrdiff_t>(space_.n_matter_modes), occ_.end());
            out_.push_back(std::move(c));
            return;
        }
        for (int v = 0; v <= space_.n_max; ++v) {
            bool ok = true;
            for (std::size_t k = 0; k < bounds_.size(); ++k) {
                const auto& b = bounds_[k];
                const int p = partial_[k] + (b.member[pos] ? v : 0);
                if (p > b.total || p + b.members_after[pos] * space_.n_max < b.total) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (std::size_t k = 0; k < bounds_.size(); ++k) {
                if (bounds_[k].member[pos]) partial_[k] += v;
            }
            occ_[pos] = v;
            recurse(pos + 1);
            for (std::size_t k = 0; k < bounds_.size(); ++k) {
                if (bounds_[k].member[pos]) partial_[k] -= v;
            }
        }
        occ_[pos] = 0;
    }

    const ModeSpace& space_;
    std::size_t cap_;
    std::vector<Bound> bounds_;
    std::vector<int> partial_;
    std::vector<int> occ_;
    std::vector<OccupationConfig> out_;
};

void check_shape(const ModeSpace& space, const OccupationConfig& c) {
    if (c.matter_occ.size() != space.n_matter_modes || c.grav_occ.size() != space.n_gravonon_modes) {
        throw DimensionError("configuration " + c.label() + " does not match the mode space (" +
                             std::to_string(space.n_matter_modes) + " matter, " +
                             std::to_string(space.n_gravonon_modes) + " gravonon modes)");
    }
}

}  // namespace

std::vector<OccupationConfig> enumerate_configs(const ModeSpace& space, std::size_t cap) {
    space.validate();
    return Enumerator(space, cap).run();
}

int inner_product(const OccupationConfig& c1, const OccupationConfig& c2) {
    if (c1.matter_occ.size() != c2.matter_occ.size() || c1.grav_occ.size() != c2.grav_occ.size()) {
        throw DimensionError("inner_product: configurations have different mode counts");
    }
    return c1 == c2 ? 1 : 0;
}

LadderResult apply_ladder(const ModeSpace& space, const OccupationConfig& c, ModeIndex mode, Ladder kind) {
    check_shape(space, c);
    const std::size_t limit = mode.field == Field::matter ? space.n_matter_modes : space.n_gravonon_modes;
    if (mode.index >= limit) {
        throw DimensionError("apply_ladder: mode index " + std::to_string(mode.index) + " out of range");
    }
    LadderResult r;
    const int n = c.at(mode);
    if (kind == Ladder::lower) {
        if (n == 0) return r;
        r.status = LadderResult::Status::ok;
        r.config = c;
        r.config.at(mode) = n - 1;
        r.amplitude = std::sqrt(static_cast<double>(n));
        return r;
    }
    if (n + 1 > space.n_max) {
        r.status = LadderResult::Status::out_of_space;
        return r;
    }
    r.status = LadderResult::Status::ok;
    r.config = c;
    r.config.at(mode) = n + 1;
    r.amplitude = std::sqrt(static_cast<double>(n + 1));
    return r;
}

LadderResult apply_string(const ModeSpace& space, const OccupationConfig& c, const std::vector<LadderOp>& ops) {
    LadderResult acc;
    acc.status = LadderResult::Status::ok;
    acc.config = c;
    acc.amplitude = 1.0;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        LadderResult step = apply_ladder(space, acc.config, it->mode, it->kind);
        if (!step.ok()) return step;
        acc.config = std::move(step.config);
        acc.amplitude *= step.amplitude;
    }
    return acc;
}

}  // namespace fockdyn::fock
