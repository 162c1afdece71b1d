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

#ifndef QSIG_SCALAR_HPP
#define QSIG_SCALAR_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "qsig/errors.hpp"

namespace qsig {

/// Exact rational scalar. GMP keeps every result reduced with a positive
/// denominator as long as the operands are canonical.
using Rational = mpq_class;

/// Compile-time description of the two scalar kinds the library supports.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& q) { return sgn(q) == 0; }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
    static double from_rational(const Rational& q) { return q.get_d(); }
    static bool is_zero(double v) { return v == 0.0; }
};

template <typename S>
concept Scalar = std::is_same_v<S, Rational> || std::is_same_v<S, double>;

/// A point of F^d.
template <Scalar S>
using Point = std::vector<S>;

template <Scalar S>
S scalar_from(const Rational& q) {
    return ScalarTraits<S>::from_rational(q);
}

template <Scalar S>
S scalar_from_int(long v) {
    if constexpr (std::is_same_v<S, Rational>) {
        return Rational(v);
    } else {
        return static_cast<double>(v);
    }
}

/// Parses "p", "-p", "p/q" or a finite decimal such as "-1.25" into an exact
/// rational. Throws ParseError with the byte offset of the first bad character.
Rational parse_rational(std::string_view text);

/// Canonical text for a rational: "3", "-1/2".
std::string to_string(const Rational& q);

/// Shortest round-trip decimal for a double.
std::string to_string(double v);

/// |a - b| <= rel_tol * max(|a|, |b|) with an absolute floor for values near zero.
inline bool nearly_equal(double a, double b, double rel_tol, double abs_floor = 1e-300) {
    const double diff = std::fabs(a - b);
    const double scale = std::fmax(std::fabs(a), std::fabs(b));
    return diff <= rel_tol * scale || diff <= abs_floor;
}

}  // namespace qsig

#endif  // QSIG_SCALAR_HPP
