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

#ifndef QSIG_HOPF_HPP
#define QSIG_HOPF_HPP

#include "qsig/polynomial.hpp"
#include "qsig/word.hpp"

namespace qsig {

// Products on T(A), the tensor algebra over the bracket semigroup. All
// functions are pure; the Polynomial overloads are the bilinear extensions.

/// Quasi-shuffle: ua * vb = (u * vb)a + (ua * v)b + (u * v)[ab], e * u = u * e = u.
Polynomial quasi_shuffle(const Word& u, const Word& v);
Polynomial quasi_shuffle(const Polynomial& p, const Polynomial& q);

/// Shuffle with brackets treated as opaque letters (no merging).
Polynomial shuffle(const Word& u, const Word& v);
Polynomial shuffle(const Polynomial& p, const Polynomial& q);

/// Pieces of the quasi-shuffle, named by which operand supplies the last bracket.
enum class QuasiHalf {
    right,    ///< ua >. vb = (ua * v) b
    left,     ///< ua <. vb = (u * vb) a
    diamond,  ///< ua <> vb = (u * v)[ab]
};

/// Pieces of the shuffle.
enum class ShuffleHalf {
    right,  ///< ua > vb = (ua sh v) b
    left,   ///< ua < vb = (u sh vb) a
};

/// Throws DomainError("half-shuffles undefined on e") for an empty operand.
Polynomial half_shuffle_qsh(QuasiHalf kind, const Word& u, const Word& v);
Polynomial half_shuffle_qsh(QuasiHalf kind, const Polynomial& p, const Polynomial& q);

Polynomial half_shuffle_sh(ShuffleHalf kind, const Word& u, const Word& v);
Polynomial half_shuffle_sh(ShuffleHalf kind, const Polynomial& p, const Polynomial& q);

/// Deconcatenation: every ordered prefix/suffix split, including w(x)e and e(x)w.
TensorPair coproduct(const Word& w);
TensorPair coproduct(const Polynomial& p);

/// Applies a pair of linear maps factorwise to a tensor and aggregates.
template <typename Left, typename Right>
TensorPair tensor_map(const TensorPair& t, Left&& left, Right&& right) {
    TensorPair out;
    for (const auto& [key, c] : t.terms()) {
        const Polynomial l = left(key.first);
        const Polynomial r = right(key.second);
        for (const auto& [u, a] : l.terms()) {
            for (const auto& [v, b] : r.terms()) out.add_term(u, v, c * a * b);
        }
    }
    return out;
}

/// Multiplies the two tensor factors together with the given product.
template <typename Product>
Polynomial tensor_multiply(const TensorPair& t, Product&& product) {
    Polynomial out;
    for (const auto& [key, c] : t.terms()) out += c * product(key.first, key.second);
    return out;
}

/// alpha(w_1...w_n) = (-1)^n sum over compositions I of n of I[w_n...w_1].
Polynomial antipode(const Word& w);
Polynomial antipode(const Polynomial& p);

/// Coefficient of the empty word.
Rational counit(const Polynomial& p);

}  // namespace qsig

#endif  // QSIG_HOPF_HPP
