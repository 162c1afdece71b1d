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

#include "qsig/dual.hpp"

namespace qsig {

QuasiShuffleTable::QuasiShuffleTable(BasisPtr basis) : basis_(std::move(basis)) {
    const WordBasis& b = *basis_;
    const int max_weight = b.max_weight();
    for (std::size_t u = 1; u < b.size(); ++u) {
        for (std::size_t v = 1; v < b.size(); ++v) {
            if (b.word(u).weight() + b.word(v).weight() > max_weight) continue;
            Entry entry{u, v, {}};
            const Polynomial p = quasi_shuffle(b.word(u), b.word(v));
            entry.product.reserve(p.size());
            for (const auto& [w, c] : p.terms()) entry.product.emplace_back(b.index(w), c);
            entries_.push_back(std::move(entry));
        }
    }
}

namespace {

// Adds sign/k times the quasi-shuffle of every split of w[from..] into `parts`
// nonempty consecutive pieces, multiplied onto `acc`.
void split_products(const Word& w, std::size_t from, int parts, const Polynomial& acc, const Rational& scale,
                    Polynomial& out) {
    const std::size_t n = w.length();
    if (parts == 1) {
        out += scale * quasi_shuffle(acc, Polynomial(w.suffix(from)));
        return;
    }
    // Leave at least parts-1 brackets for the remaining pieces.
    for (std::size_t end = from + 1; end + (parts - 1) <= n; ++end) {
        const Word piece = w.suffix(from).prefix(end - from);
        split_products(w, end, parts - 1, quasi_shuffle(acc, Polynomial(piece)), scale, out);
    }
}

}  // namespace

Polynomial eulerian_idempotent(const Word& u) {
    Polynomial out;
    if (u.empty()) return out;
    for (std::size_t k = 1; k <= u.length(); ++k) {
        const Rational scale(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        split_products(u, 0, static_cast<int>(k), Polynomial::unit(), Rational(scale), out);
    }
    return out;
}

}  // namespace qsig
