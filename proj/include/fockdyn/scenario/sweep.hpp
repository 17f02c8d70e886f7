#pragma once

#include "fockdyn/csv.hpp"
#include "fockdyn/scenario/config.hpp"

namespace fockdyn::scenario {

/// Number of cartesian grid points; an empty vary map or any empty list gives 0.
/// Throws SizeLimitError above s.max_points.
std::size_t sweep_size(const SweepScenario& s);

/// One row per grid point, last vary key fastest. Points run in parallel and
/// rows are stored by grid index, so output order never depends on scheduling.
csv::Table run_sweep(const SweepScenario& s);

}  // namespace fockdyn::scenario
