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

#ifndef QSIG_QSYM_HPP
#define QSIG_QSYM_HPP

#include <cstddef>
#include <vector>

#include "qsig/polynomial.hpp"
#include "qsig/scalar.hpp"

namespace qsig {

/// Y_j^{[u]}: product of the coordinates of y selected by the letters of b.
template <Scalar S>
S bracket_monomial(const Point<S>& y, const Bracket& b) {
    S out = scalar_from_int<S>(1);
    for (Letter a : b.letters()) {
        if (static_cast<std::size_t>(a) > y.size()) {
            throw RangeError("letter " + std::to_string(a) + " exceeds point dimension " + std::to_string(y.size()));
        }
        out *= y[a - 1];
    }
    return out;
}

namespace detail {

template <Scalar S>
S monomial_sum(const std::vector<Bracket>& bs, std::size_t k, const std::vector<Point<S>>& ys, std::size_t from) {
    if (k == bs.size()) return scalar_from_int<S>(1);
    S total = scalar_from_int<S>(0);
    const std::size_t remaining = bs.size() - k;
    for (std::size_t j = from; j + remaining <= ys.size(); ++j) {
        const S head = bracket_monomial(ys[j], bs[k]);
        if (ScalarTraits<S>::is_zero(head)) continue;
        total += head * monomial_sum(bs, k + 1, ys, j + 1);
    }
    return total;
}

}  // namespace detail

/// Level-d monomial quasisymmetric function of w evaluated at the finitely
/// supported substitution Y = (Y_1, ..., Y_M, 0, ...):
///   sum over j_1 < ... < j_n of Y_{j_1}^{[u_1]} ... Y_{j_n}^{[u_n]}.
/// Evaluated by direct enumeration of index tuples.
template <Scalar S>
S monomial_eval(const Word& w, const std::vector<Point<S>>& ys) {
    return detail::monomial_sum(w.brackets(), 0, ys, 0);
}

/// Linear extension of monomial_eval to polynomials.
template <Scalar S>
S monomial_eval(const Polynomial& p, const std::vector<Point<S>>& ys) {
    S total = scalar_from_int<S>(0);
    for (const auto& [w, c] : p.terms()) total += scalar_from<S>(c) * monomial_eval(w, ys);
    return total;
}

/// Whether monomial_eval(u) * monomial_eval(v) == monomial_eval(u * v) at Y,
/// with the right side expanded through the quasi-shuffle product.
bool product_as_quasi_shuffle_check(const Word& u, const Word& v, const std::vector<Point<Rational>>& ys);

/// dim of the weight-n part of T(A) over d letters:
///   sum over compositions (i_1..i_p) of n of prod binom(d - 1 + i_j, i_j).
mpz_class hilbert_dim(int d, int n);

/// Coefficients t^0..t^N of (1-t)^d / (2(1-t)^d - 1) by power-series division.
std::vector<mpz_class> hilbert_series_coeffs(int d, int max_n);

/// All words of weight exactly n over d letters, each once, in canonical order.
std::vector<Word> enumerate_words(int d, int n);

}  // namespace qsig

#endif  // QSIG_QSYM_HPP
