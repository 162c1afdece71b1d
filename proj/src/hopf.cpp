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

#include "qsig/hopf.hpp"

#include <vector>

#include "qsig/composition.hpp"

namespace qsig {

namespace {

// table[i][j] holds u_{1..i} (product) v_{1..j}, filled bottom-up so every
// sub-product of the recursion is computed once.
class ProductTable {
public:
    ProductTable(const Word& u, const Word& v, bool merge)
        : m_(u.length()), n_(v.length()), table_((m_ + 1) * (n_ + 1)) {
        const auto ub = u.brackets();
        const auto vb = v.brackets();
        for (std::size_t i = 0; i <= m_; ++i) at(i, 0) = Polynomial(u.prefix(i));
        for (std::size_t j = 1; j <= n_; ++j) at(0, j) = Polynomial(v.prefix(j));
        for (std::size_t i = 1; i <= m_; ++i) {
            for (std::size_t j = 1; j <= n_; ++j) {
                Polynomial cell = append_bracket(at(i - 1, j), ub[i - 1]);
                cell += append_bracket(at(i, j - 1), vb[j - 1]);
                if (merge) cell += append_bracket(at(i - 1, j - 1), ub[i - 1] * vb[j - 1]);
                at(i, j) = std::move(cell);
            }
        }
    }

    Polynomial& at(std::size_t i, std::size_t j) { return table_[i * (n_ + 1) + j]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

private:
    std::size_t m_, n_;
    std::vector<Polynomial> table_;
};

template <typename WordOp>
Polynomial bilinear(const Polynomial& p, const Polynomial& q, WordOp&& op) {
    Polynomial out(common_alphabet(p.alphabet(), q.alphabet()));
    for (const auto& [u, a] : p.terms()) {
        for (const auto& [v, b] : q.terms()) {
            Polynomial t = op(u, v);
            t *= a * b;
            out += t;
        }
    }
    return out;
}

void require_nonempty(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw DomainError("half-shuffles undefined on e");
}

}  // namespace

Polynomial quasi_shuffle(const Word& u, const Word& v) {
    if (u.empty()) return Polynomial(v);
    if (v.empty()) return Polynomial(u);
    ProductTable t(u, v, true);
    return std::move(t.at(t.rows(), t.cols()));
}

Polynomial quasi_shuffle(const Polynomial& p, const Polynomial& q) {
    return bilinear(p, q, [](const Word& u, const Word& v) { return quasi_shuffle(u, v); });
}

Polynomial shuffle(const Word& u, const Word& v) {
    if (u.empty()) return Polynomial(v);
    if (v.empty()) return Polynomial(u);
    ProductTable t(u, v, false);
    return std::move(t.at(t.rows(), t.cols()));
}

Polynomial shuffle(const Polynomial& p, const Polynomial& q) {
    return bilinear(p, q, [](const Word& u, const Word& v) { return shuffle(u, v); });
}

Polynomial half_shuffle_qsh(QuasiHalf kind, const Word& u, const Word& v) {
    require_nonempty(u, v);
    const std::size_t m = u.length();
    const std::size_t n = v.length();
    switch (kind) {
        case QuasiHalf::right:
            return append_bracket(quasi_shuffle(u, v.prefix(n - 1)), v.last());
        case QuasiHalf::left:
            return append_bracket(quasi_shuffle(u.prefix(m - 1), v), u.last());
        case QuasiHalf::diamond:
            return append_bracket(quasi_shuffle(u.prefix(m - 1), v.prefix(n - 1)), u.last() * v.last());
    }
    throw DomainError("unknown half-shuffle kind");
}

Polynomial half_shuffle_qsh(QuasiHalf kind, const Polynomial& p, const Polynomial& q) {
    return bilinear(p, q, [kind](const Word& u, const Word& v) { return half_shuffle_qsh(kind, u, v); });
}

Polynomial half_shuffle_sh(ShuffleHalf kind, const Word& u, const Word& v) {
    require_nonempty(u, v);
    switch (kind) {
        case ShuffleHalf::right:
            return append_bracket(shuffle(u, v.prefix(v.length() - 1)), v.last());
        case ShuffleHalf::left:
            return append_bracket(shuffle(u.prefix(u.length() - 1), v), u.last());
    }
    throw DomainError("unknown half-shuffle kind");
}

Polynomial half_shuffle_sh(ShuffleHalf kind, const Polynomial& p, const Polynomial& q) {
    return bilinear(p, q, [kind](const Word& u, const Word& v) { return half_shuffle_sh(kind, u, v); });
}

TensorPair coproduct(const Word& w) {
    TensorPair t;
    for (std::size_t i = 0; i <= w.length(); ++i) t.add_term(w.prefix(i), w.suffix(i), Rational(1));
    return t;
}

TensorPair coproduct(const Polynomial& p) {
    TensorPair t;
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i <= w.length(); ++i) t.add_term(w.prefix(i), w.suffix(i), c);
    }
    return t;
}

Polynomial antipode(const Word& w) {
    if (w.empty()) return Polynomial(w);
    const Word reversed = w.reversed();
    const Rational sign = (w.length() % 2 == 0) ? 1 : -1;
    Polynomial out;
    for_each_composition(static_cast<int>(w.length()),
                         [&](const Composition& parts) { out.add_term(composition_apply(parts, reversed), sign); });
    return out;
}

Polynomial antipode(const Polynomial& p) {
    Polynomial out(p.alphabet());
    for (const auto& [w, c] : p.terms()) out += c * antipode(w);
    return out;
}

Rational counit(const Polynomial& p) { return p.coefficient(Word()); }

}  // namespace qsig
