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

#ifndef QSIG_LINALG_HPP
#define QSIG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qsig/polynomial.hpp"

namespace qsig {

/// Dense matrix over the rationals, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Brings m to reduced row echelon form in place, scanning columns left to
/// right and taking the first available nonzero row as pivot. Returns the pivot
/// column of each pivot row, in row order.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

/// Exact rank.
std::size_t rank(RationalMatrix m);

struct SpanResult {
    bool member = false;
    /// When member: coefficients c_i with p = sum c_i generators[i]; free
    /// directions are set to zero.
    std::vector<Rational> certificate;
};

/// Whether p lies in the linear span of the generators, by elimination over the
/// words that occur, ordered canonically.
SpanResult span_membership(const Polynomial& p, const std::vector<Polynomial>& generators);

/// A basis of span(generators): the nonzero rows of the reduced echelon form
/// with words in canonical order as columns. The result is canonical, so two
/// spanning sets span the same space exactly when their bases coincide.
std::vector<Polynomial> reduce_to_basis(const std::vector<Polynomial>& generators);

}  // namespace qsig

#endif  // QSIG_LINALG_HPP
