#include "fockdyn/csv.hpp"

#include <cmath>
#include <cstdio>

#include "fockdyn/errors.hpp"

namespace fockdyn::csv {

std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string Table::str() const {
    std::string out;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) out += ',';
        out += header[j];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw DimensionError("csv: row has " + std::to_string(row.size()) + " values for " +
                                 std::to_string(header.size()) + " columns");
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            if (integer_columns.count(j)) {
                out += std::to_string(static_cast<long long>(std::llround(row[j])));
            } else {
                out += format(row[j]);
            }
        }
        out += '\n';
    }
    return out;
}

Table from_time_series(const propagator::TimeSeries& ts, const std::string& time_column) {
    ts.validate();
    Table t;
    t.header.push_back(time_column);
    for (const auto& [name, values] : ts.channels) t.header.push_back(name);
    t.rows.resize(ts.times.size());
    for (std::size_t i = 0; i < ts.times.size(); ++i) {
        auto& row = t.rows[i];
        row.reserve(t.header.size());
        row.push_back(ts.times[i]);
        for (const auto& [name, values] : ts.channels) row.push_back(values[i]);
    }
    return t;
}

}  // namespace fockdyn::csv
