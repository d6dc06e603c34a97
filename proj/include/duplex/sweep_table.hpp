#pragma once

#include <cstddef>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "duplex/error.hpp"

namespace duplex {

// Named-column numeric table; the output format for sweeps and reports.
struct SweepTable {
    struct Column {
        std::string name;
        std::vector<double> data;
    };

    std::vector<Column> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().data.size(); }

    void add_column(std::string name, std::vector<double> data) {
        if (name.empty()) fail("InvalidTable", "empty column name");
        for (const auto& c : columns) {
            if (c.name == name) fail("InvalidTable", "duplicate column name: " + name);
            if (c.data.size() != data.size())
                fail("InvalidTable", "column length mismatch for: " + name);
        }
        columns.push_back(Column{std::move(name), std::move(data)});
    }
};

// 12 significant digits: round-trips doubles well past the 1e-9 relative
// tolerance the table consumers rely on, deterministic for identical input.
inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Serializes as a whitespace-separated plot-data file: header of column
/// names, then one row per index. LF line endings.
inline std::string write_dat(const SweepTable& table) {
    if (table.columns.empty()) fail("InvalidTable", "table has no columns");
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ' ';
        out += table.columns[c].name;
    }
    out += '\n';
    const std::size_t n = table.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ' ';
            out += format_value(table.columns[c].data[r]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace duplex
