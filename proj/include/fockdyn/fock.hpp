#pragma once

// Truncated bosonic occupation-number basis over two fields: matter modes
// (operators a, a+) and gravonon modes (operators b, b+).

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fockdyn::fock {

enum class Field { matter, gravonon };

struct ModeIndex {
    Field field = Field::matter;
    std::size_t index = 0;
};

inline ModeIndex matter(std::size_t i) { return {Field::matter, i}; }
inline ModeIndex gravonon(std::size_t i) { return {Field::gravonon, i}; }

/// Fixes the total occupation of a group of modes of one field.
struct GroupConstraint {
    Field field = Field::gravonon;
    std::vector<std::size_t> modes;
    int total = 0;
};

struct ModeSpace {
    std::size_t n_matter_modes = 0;
    std::size_t n_gravonon_modes = 0;
    int n_max = 1;
    /// Total number of matter quanta, if fixed.
    std::optional<int> sector;
    /// Additional occupation constraints (e.g. one gravonon quantum per adsorption site).
    std::vector<GroupConstraint> constraints;

    /// Throws ParameterError on n_max < 1, negative totals or out-of-range group modes.
    void validate() const;
    std::size_t n_modes() const { return n_matter_modes + n_gravonon_modes; }
};

struct OccupationConfig {
    std::vector<int> matter_occ;
    std::vector<int> grav_occ;

    auto operator<=>(const OccupationConfig&) const = default;
    bool operator==(const OccupationConfig&) const = default;

    int& at(ModeIndex m) { return m.field == Field::matter ? matter_occ.at(m.index) : grav_occ.at(m.index); }
    int at(ModeIndex m) const { return m.field == Field::matter ? matter_occ.at(m.index) : grav_occ.at(m.index); }

    /// "|0101;001>" style label: matter occupations, then gravonon occupations.
    std::string label() const;
};

inline constexpr std::size_t kDefaultBasisCap = 250'000;

/// All configurations allowed by the truncation and constraints, in lexicographic
/// order of the concatenated (matter, gravonon) occupation string.
/// Throws SizeLimitError once more than `cap` configurations would be produced.
std::vector<OccupationConfig> enumerate_configs(const ModeSpace& space,
                                                std::size_t cap = kDefaultBasisCap);

/// Kronecker-delta scalar product of two occupation states: 1 if identical, else 0.
int inner_product(const OccupationConfig& c1, const OccupationConfig& c2);

enum class Ladder { raise, lower };

struct LadderResult {
    enum class Status { ok, zero, out_of_space };

    Status status = Status::zero;
    OccupationConfig config;
    double amplitude = 0.0;

    bool ok() const { return status == Status::ok; }
    bool is_zero() const { return status == Status::zero; }
    bool out_of_space() const { return status == Status::out_of_space; }
};

/// Applies b+ (raise) or b (lower) to a single mode.
///
/// Raising occupation n gives n+1 with amplitude sqrt(n+1); lowering gives n-1
/// with amplitude sqrt(n). Lowering the vacuum yields the zero result. Raising
/// past space.n_max is reported as out_of_space rather than silently dropped;
/// the caller decides whether that truncation is acceptable.
LadderResult apply_ladder(const ModeSpace& space, const OccupationConfig& c, ModeIndex mode, Ladder kind);

/// Applies an operator string right-to-left (the last element acts first).
/// The result is zero or out_of_space as soon as any factor is.
struct LadderOp {
    ModeIndex mode;
    Ladder kind;
};
LadderResult apply_string(const ModeSpace& space, const OccupationConfig& c, const std::vector<LadderOp>& ops);

}  // namespace fockdyn::fock
