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

#ifndef QSIG_CSV_HPP
#define QSIG_CSV_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsig/scalar.hpp"

namespace qsig {

/// Bad CSV content, located by 1-based row and column (column 0 when the whole
/// row is at fault).
class CsvError : public std::invalid_argument {
public:
    CsvError(const std::string& what, std::size_t row, std::size_t column)
        : std::invalid_argument("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
          row_(row),
          column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// Parsed time-series table. Each data row is one time point; the first data
/// row is the base point x_0. The column count is the dimension d.
template <Scalar S>
struct CsvTable {
    int columns = 0;  // 0 when the file has neither header nor data
    std::vector<Point<S>> rows;
};

/// Reads a CSV time series. A first row containing a non-numeric cell is
/// treated as a header and skipped. Exact mode accepts integers and "p/q"
/// cells only; float mode rejects "p/q" cells. Ragged rows are rejected.
CsvTable<Rational> read_csv_exact(std::istream& in);
CsvTable<double> read_csv_float(std::istream& in);

}  // namespace qsig

#endif  // QSIG_CSV_HPP
