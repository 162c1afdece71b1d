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

#ifndef QSIG_DUAL_HPP
#define QSIG_DUAL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qsig/hopf.hpp"
#include "qsig/polynomial.hpp"
#include "qsig/scalar.hpp"
#include "qsig/word_basis.hpp"

namespace qsig {

/// A truncated linear functional on T(A): one coefficient <w, c> for every word
/// of weight <= W, stored densely in the canonical order of the word basis.
///
/// Reading a word beyond the truncation is an error rather than a silent zero.
template <Scalar S>
class DualFunctional {
public:
    using scalar_type = S;

    explicit DualFunctional(BasisPtr basis)
        : basis_(std::move(basis)), coeffs_(basis_->size(), scalar_from_int<S>(0)) {}

    DualFunctional(int d, int max_weight) : DualFunctional(WordBasis::get(d, max_weight)) {}

    /// The counit: 1 on e, 0 elsewhere.
    static DualFunctional counit(BasisPtr basis) {
        DualFunctional c(std::move(basis));
        c.coeffs_[0] = scalar_from_int<S>(1);
        return c;
    }

    const BasisPtr& basis() const noexcept { return basis_; }
    int alphabet() const noexcept { return basis_->alphabet(); }
    int max_weight() const noexcept { return basis_->max_weight(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const S& operator[](std::size_t i) const { return coeffs_[i]; }
    S& operator[](std::size_t i) { return coeffs_[i]; }

    /// <w, c>; throws RangeError beyond the truncation weight.
    const S& at(const Word& w) const { return coeffs_[basis_->index(w)]; }
    void set(const Word& w, S value) { coeffs_[basis_->index(w)] = std::move(value); }

    const std::vector<S>& coefficients() const noexcept { return coeffs_; }

    DualFunctional& operator+=(const DualFunctional& other) {
        require_compatible(*this, other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }
    DualFunctional& operator-=(const DualFunctional& other) {
        require_compatible(*this, other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        return *this;
    }
    DualFunctional& operator*=(const S& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend DualFunctional operator+(DualFunctional a, const DualFunctional& b) { return a += b; }
    friend DualFunctional operator-(DualFunctional a, const DualFunctional& b) { return a -= b; }
    friend DualFunctional operator*(const S& s, DualFunctional a) { return a *= s; }

    friend bool operator==(const DualFunctional& a, const DualFunctional& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }

    static void require_compatible(const DualFunctional& a, const DualFunctional& b) {
        if (a.basis_ != b.basis_) {
            throw DomainError("functionals differ in alphabet or truncation: (d=" + std::to_string(a.alphabet()) +
                              ", W=" + std::to_string(a.max_weight()) + ") vs (d=" + std::to_string(b.alphabet()) +
                              ", W=" + std::to_string(b.max_weight()) + ")");
        }
    }

private:
    BasisPtr basis_;
    std::vector<S> coeffs_;
};

/// <p, c> for a polynomial whose terms lie within the truncation of c.
template <Scalar S>
S pairing(const Polynomial& p, const DualFunctional<S>& c) {
    S total = scalar_from_int<S>(0);
    for (const auto& [w, coeff] : p.terms()) total += scalar_from<S>(coeff) * c.at(w);
    return total;
}

/// Concatenation-dual product: <w, a.b> = sum over w = uv of <u, a><v, b>.
template <Scalar S>
DualFunctional<S> convolve(const DualFunctional<S>& a, const DualFunctional<S>& b) {
    DualFunctional<S>::require_compatible(a, b);
    const WordBasis& basis = *a.basis();
    DualFunctional<S> out(a.basis());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        S acc = scalar_from_int<S>(0);
        for (const auto& [u, v] : basis.splits(i)) acc += a[u] * b[v];
        out[i] = std::move(acc);
    }
    return out;
}

/// exp(f) = counit + sum_j f^j / j!; requires <e, f> = 0.
template <Scalar S>
DualFunctional<S> exp_conv(const DualFunctional<S>& f) {
    if (!ScalarTraits<S>::is_zero(f[0])) throw DomainError("exp_conv needs <e, f> = 0");
    auto result = DualFunctional<S>::counit(f.basis());
    auto power = DualFunctional<S>::counit(f.basis());
    // f has no e-component, so f^j vanishes on words of weight < j.
    for (int j = 1; j <= f.max_weight(); ++j) {
        power = convolve(power, f);
        power *= scalar_from<S>(Rational(1, j));
        result += power;
    }
    return result;
}

/// log(c) = sum_i (-1)^(i-1) (c - counit)^i / i; requires <e, c> = 1.
template <Scalar S>
DualFunctional<S> log_conv(const DualFunctional<S>& c) {
    if (c[0] != scalar_from_int<S>(1)) throw DomainError("log_conv needs <e, c> = 1");
    auto reduced = c;
    reduced[0] = scalar_from_int<S>(0);
    DualFunctional<S> result(c.basis());
    auto power = DualFunctional<S>::counit(c.basis());
    for (int i = 1; i <= c.max_weight(); ++i) {
        power = convolve(power, reduced);
        auto term = power;
        term *= scalar_from<S>(Rational(i % 2 == 1 ? 1 : -1, i));
        result += term;
    }
    return result;
}

/// Functional w -> <map(w), c> for a linear map on words that does not raise
/// weight (the antipode, Hoffman's maps). Composition c o alpha is the
/// convolution inverse of a character c.
template <Scalar S, typename WordMap>
DualFunctional<S> pullback(const DualFunctional<S>& c, WordMap&& map) {
    DualFunctional<S> out(c.basis());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pairing(map(c.basis()->word(i)), c);
    return out;
}

/// c o alpha.
template <Scalar S>
DualFunctional<S> compose_antipode(const DualFunctional<S>& c) {
    return pullback(c, [](const Word& w) { return antipode(w); });
}

/// Quasi-shuffle products of all pairs of nonempty basis words with
/// |u| + |v| <= W, expanded over basis indices. Built once per (d, W) and reused
/// to test many functionals for the character property.
class QuasiShuffleTable {
public:
    struct Entry {
        std::size_t u;
        std::size_t v;
        std::vector<std::pair<std::size_t, Rational>> product;
    };

    explicit QuasiShuffleTable(BasisPtr basis);

    const BasisPtr& basis() const noexcept { return basis_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    BasisPtr basis_;
    std::vector<Entry> entries_;
};

/// First pair (u, v) with <u * v, c> != <u, c><v, c>, or nullopt when c is a
/// quasi-shuffle character at its truncation. Floats compare with rel_tol.
template <Scalar S>
std::optional<std::pair<Word, Word>> find_character_violation(const DualFunctional<S>& c,
                                                              const QuasiShuffleTable& table,
                                                              double rel_tol = 1e-9) {
    if (table.basis() != c.basis()) throw DomainError("character table built for a different basis");
    const auto& basis = *c.basis();
    auto differs = [rel_tol](const S& x, const S& y) {
        if constexpr (ScalarTraits<S>::exact) {
            return x != y;
        } else {
            return !nearly_equal(x, y, rel_tol, rel_tol);
        }
    };
    if (differs(c[0], scalar_from_int<S>(1))) return std::make_pair(Word(), Word());
    for (const auto& entry : table.entries()) {
        S lhs = scalar_from_int<S>(0);
        for (const auto& [k, coeff] : entry.product) lhs += scalar_from<S>(coeff) * c[k];
        const S rhs = c[entry.u] * c[entry.v];
        if (differs(lhs, rhs)) return std::make_pair(basis.word(entry.u), basis.word(entry.v));
    }
    return std::nullopt;
}

template <Scalar S>
std::optional<std::pair<Word, Word>> find_character_violation(const DualFunctional<S>& c, double rel_tol = 1e-9) {
    return find_character_violation(c, QuasiShuffleTable(c.basis()), rel_tol);
}

template <Scalar S>
bool is_character(const DualFunctional<S>& c) {
    return !find_character_violation(c).has_value();
}

/// Re-truncates c at a lower weight.
template <Scalar S>
DualFunctional<S> truncate(const DualFunctional<S>& c, int max_weight) {
    if (max_weight > c.max_weight()) throw RangeError("cannot raise truncation weight");
    DualFunctional<S> out(WordBasis::get(c.alphabet(), max_weight));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[i];  // bases share their prefix order
    return out;
}

/// Eulerian idempotent image e(u) = sum_k (-1)^(k-1)/k J^{*k}(u), where J^{*k}(u)
/// quasi-shuffles the k factors of every split of u into k nonempty pieces.
Polynomial eulerian_idempotent(const Word& u);

template <Scalar S>
struct EulerianValue {
    S value;
    /// False when c failed the character test up to weight |u|; value is then
    /// not guaranteed to equal <u, log_conv(c)>.
    bool character;
};

/// <e(u), c>. Equals <u, log_conv(c)> whenever c is a character.
template <Scalar S>
EulerianValue<S> eulerian_projection(const Word& u, const DualFunctional<S>& c) {
    const S value = pairing(eulerian_idempotent(u), c);
    bool character = c[0] == scalar_from_int<S>(1);
    if (character && u.weight() >= 2) {
        // Multiplicativity is only checked up to weight |u|.
        character = !find_character_violation(truncate(c, u.weight())).has_value();
    }
    return {value, character};
}

/// Converts every coefficient to another scalar kind (rational -> float only).
inline DualFunctional<double> to_float(const DualFunctional<Rational>& c) {
    DualFunctional<double> out(c.basis());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_d();
    return out;
}

}  // namespace qsig

#endif  // QSIG_DUAL_HPP
