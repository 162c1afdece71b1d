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

#ifndef QSIG_POLYNOMIAL_HPP
#define QSIG_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsig/scalar.hpp"
#include "qsig/word.hpp"

namespace qsig {

/// A finite linear combination of words with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal. The optional alphabet size d (0 when
/// unspecified) is only used to reject mixing polynomials over different
/// alphabets.
class Polynomial {
public:
    using Terms = std::unordered_map<Word, Rational>;

    Polynomial() = default;
    explicit Polynomial(int d) : d_(d) {}
    Polynomial(const Word& w, Rational c = 1, int d = 0);

    static Polynomial unit(int d = 0) { return Polynomial(Word(), 1, d); }

    int alphabet() const noexcept { return d_; }
    void set_alphabet(int d) noexcept { d_ = d; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }

    /// Coefficient of w; zero when absent.
    Rational coefficient(const Word& w) const;

    /// Adds c*w, dropping the entry when the sum cancels.
    void add_term(const Word& w, const Rational& c);

    /// Terms in canonical word order.
    std::vector<std::pair<Word, Rational>> sorted_terms() const;

    /// Largest weight among the terms (-1 for the zero polynomial).
    int max_weight() const noexcept;

    /// True when every term has the same weight.
    bool is_homogeneous() const noexcept;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void check_alphabet(const Polynomial& other);

    Terms terms_;
    int d_ = 0;
};

/// Concatenation product, extended bilinearly.
Polynomial concat(const Polynomial& p, const Polynomial& q);

/// Appends the bracket b to every term: p -> p b.
Polynomial append_bracket(const Polynomial& p, const Bracket& b);

/// Returns the common alphabet of two operands, throwing DomainError when both
/// are specified and differ.
int common_alphabet(int d1, int d2);

/// Human-readable form: "[1][2] + 1/2 [1,2]", "-[1]", "0".
std::string print_polynomial(const Polynomial& p);

/// An element of T(A) (x) T(A): aggregated (u, v, coefficient) triples.
class TensorPair {
public:
    using Key = std::pair<Word, Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.first.code() != b.first.code()) return a.first.code() < b.first.code();
            return a.second.code() < b.second.code();
        }
    };

    void add_term(const Word& u, const Word& v, const Rational& c);
    Rational coefficient(const Word& u, const Word& v) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Triples sorted by left word then right word in canonical order.
    std::vector<std::tuple<Word, Word, Rational>> sorted_terms() const;

    TensorPair& operator+=(const TensorPair& other);
    TensorPair& operator-=(const TensorPair& other);
    friend bool operator==(const TensorPair& a, const TensorPair& b) { return a.terms_ == b.terms_; }

    const std::map<Key, Rational, KeyLess>& terms() const noexcept { return terms_; }

private:
    std::map<Key, Rational, KeyLess> terms_;
};

/// "[1] ⊗ [2] + e ⊗ [1][2]", "0" when empty.
std::string print_tensor(const TensorPair& t);

}  // namespace qsig

#endif  // QSIG_POLYNOMIAL_HPP
