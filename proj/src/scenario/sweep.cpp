#include "fockdyn/scenario/sweep.hpp"

#include <exception>
#include <limits>

#include "fockdyn/errors.hpp"
#include "fockdyn/scenario/runner.hpp"

namespace fockdyn::scenario {

std::size_t sweep_size(const SweepScenario& s) {
    if (s.vary.empty()) return 0;
    std::size_t n = 1;
    for (const auto& [key, values] : s.vary) {
        if (values.empty()) return 0;
        if (n > s.max_points / values.size() + 1) n = s.max_points + 1;  // saturate, avoids overflow
        else n *= values.size();
    }
    if (n > s.max_points) {
        throw SizeLimitError("sweep: grid has more than max_points = " + std::to_string(s.max_points) + " points");
    }
    return n;
}

csv::Table run_sweep(const SweepScenario& s) {
    const std::size_t n = sweep_size(s);
    csv::Table table;
    for (const auto& [key, values] : s.vary) table.header.push_back(key);
    const std::size_t n_keys = table.header.size();
    if (s.model == SweepModel::chooser) {
        for (const char* c : {"gamma", "plateau", "analytic_plateau", "max_deviation", "decay_rate", "max_norm_error"}) {
            table.header.emplace_back(c);
        }
    } else {
        for (const char* c : {"alternations", "min_plateau_fraction", "contrast", "max_norm_error"}) {
            table.header.emplace_back(c);
        }
        table.integer_columns.insert(n_keys);
    }
    table.rows.resize(n);
    std::vector<std::exception_ptr> errors(n);

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t gi = 0; gi < static_cast<std::ptrdiff_t>(n); ++gi) {
        try {
            // Mixed-radix decomposition of the grid index, last key fastest.
            std::vector<std::pair<std::string, double>> point(n_keys);
            auto rem = static_cast<std::size_t>(gi);
            for (std::size_t k = n_keys; k-- > 0;) {
                const auto& values = s.vary[k].second;
                point[k] = {s.vary[k].first, values[rem % values.size()]};
                rem /= values.size();
            }
            std::vector<double> row;
            for (const auto& [key, v] : point) row.push_back(v);
            if (s.model == SweepModel::chooser) {
                ChooserScenario c = s.chooser;
                apply_sweep_values(c, point);
                const auto r = simulate_chooser(c);
                row.insert(row.end(), {r.gamma, r.plateau, r.analytic_plateau, r.max_deviation, r.decay_rate,
                                       r.norm_error});
            } else {
                TelegraphScenario t = s.telegraph;
                apply_sweep_values(t, point);
                const auto r = simulate_telegraph(t);
                row.insert(row.end(), {static_cast<double>(r.score.alternations),
                                       std::min(r.score.fraction[0], r.score.fraction[1]), r.score.contrast,
                                       r.norm_error});
            }
            table.rows[static_cast<std::size_t>(gi)] = std::move(row);
        } catch (...) {
            errors[static_cast<std::size_t>(gi)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return table;
}

}  // namespace fockdyn::scenario
