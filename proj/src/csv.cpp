// Copyright 2026 The qsig Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsig/csv.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace qsig {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

bool looks_integer(const std::string& cell) {
    std::size_t i = (!cell.empty() && (cell[0] == '-' || cell[0] == '+')) ? 1 : 0;
    if (i >= cell.size()) return false;
    for (; i < cell.size(); ++i) {
        if (cell[i] < '0' || cell[i] > '9') return false;
    }
    return true;
}

bool looks_rational(const std::string& cell) {
    const auto slash = cell.find('/');
    if (slash == std::string::npos) return false;
    const std::string den = cell.substr(slash + 1);
    return looks_integer(cell.substr(0, slash)) && !den.empty() && den[0] != '-' && den[0] != '+' &&
           looks_integer(den);
}

std::optional<double> as_double(const std::string& cell) {
    double v = 0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

bool is_numeric(const std::string& cell) { return looks_rational(cell) || as_double(cell).has_value(); }

template <Scalar S, typename ParseCell>
CsvTable<S> read_table(std::istream& in, ParseCell&& parse_cell) {
    CsvTable<S> table;
    std::string line;
    std::size_t row = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split_cells(line);
        if (first) {
            first = false;
            bool numeric = true;
            for (const auto& c : cells) numeric = numeric && is_numeric(c);
            table.columns = static_cast<int>(cells.size());
            if (!numeric) continue;  // header
        }
        if (static_cast<int>(cells.size()) != table.columns) {
            throw CsvError("ragged row: expected " + std::to_string(table.columns) + " cells, found " +
                               std::to_string(cells.size()),
                           row, 0);
        }
        Point<S> point;
        point.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) point.push_back(parse_cell(cells[c], row, c + 1));
        table.rows.push_back(std::move(point));
    }
    return table;
}

}  // namespace

CsvTable<Rational> read_csv_exact(std::istream& in) {
    return read_table<Rational>(in, [](const std::string& cell, std::size_t row, std::size_t col) {
        if (!looks_integer(cell) && !looks_rational(cell)) {
            if (as_double(cell)) throw CsvError("float cell \"" + cell + "\" under --exact; use p/q", row, col);
            throw CsvError("non-numeric cell \"" + cell + "\"", row, col);
        }
        try {
            return parse_rational(cell);
        } catch (const ParseError& e) {
            throw CsvError(e.what(), row, col);
        }
    });
}

CsvTable<double> read_csv_float(std::istream& in) {
    return read_table<double>(in, [](const std::string& cell, std::size_t row, std::size_t col) {
        if (looks_rational(cell)) throw CsvError("rational cell \"" + cell + "\" requires --exact", row, col);
        const auto v = as_double(cell);
        if (!v) throw CsvError("non-numeric cell \"" + cell + "\"", row, col);
        return *v;
    });
}

}  // namespace qsig
