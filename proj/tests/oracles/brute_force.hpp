#pragma once

// Reference enumeration: count through every occupation tuple in base
// (n_max + 1), keep the ones that satisfy the constraints, sort.

#include <algorithm>
#include <vector>

#include "fockdyn/fock.hpp"

namespace oracle {

inline std::vector<fockdyn::fock::OccupationConfig> brute_force_configs(const fockdyn::fock::ModeSpace& s) {
    const std::size_t n = s.n_matter_modes + s.n_gravonon_modes;
    const int base = s.n_max + 1;
    std::vector<int> digits(n, 0);
    std::vector<fockdyn::fock::OccupationConfig> out;
    while (true) {
        fockdyn::fock::OccupationConfig c;
        c.matter_occ.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(s.n_matter_modes));
        c.grav_occ.assign(digits.begin() + static_cast<std::ptrdiff_t>(s.n_matter_modes), digits.end());
        bool ok = true;
        if (s.sector) {
            int total = 0;
            for (int v : c.matter_occ) total += v;
            ok = total == *s.sector;
        }
        for (const auto& g : s.constraints) {
            int total = 0;
            for (std::size_t m : g.modes) {
                total += g.field == fockdyn::fock::Field::matter ? c.matter_occ[m] : c.grav_occ[m];
            }
            ok = ok && total == g.total;
        }
        if (ok) out.push_back(c);
        std::size_t i = 0;
        while (i < n && ++digits[i] == base) digits[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
