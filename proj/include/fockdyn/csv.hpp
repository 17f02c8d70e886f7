#pragma once

#include <set>
#include <string>
#include <vector>

#include "fockdyn/propagator.hpp"

namespace fockdyn::csv {

/// Scientific notation with 12 significant digits, e.g. 1.00000000000e-03.
std::string format(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    /// Columns printed as integers instead of scientific notation.
    std::set<std::size_t> integer_columns;

    /// Throws DimensionError if any row length differs from the header.
    std::string str() const;
};

/// Columns t followed by every channel in insertion order.
Table from_time_series(const propagator::TimeSeries& ts, const std::string& time_column = "t");

}  // namespace fockdyn::csv
