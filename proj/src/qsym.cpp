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

#include "qsig/qsym.hpp"

#include <algorithm>

#include "qsig/composition.hpp"
#include "qsig/hopf.hpp"

namespace qsig {

bool product_as_quasi_shuffle_check(const Word& u, const Word& v, const std::vector<Point<Rational>>& ys) {
    const Rational lhs = monomial_eval(u, ys) * monomial_eval(v, ys);
    const Rational rhs = monomial_eval(quasi_shuffle(u, v), ys);
    return lhs == rhs;
}

mpz_class hilbert_dim(int d, int n) {
    if (d < 1 || n < 0) throw DomainError("hilbert_dim needs d >= 1 and n >= 0");
    // Number of brackets of weight i: multisets of size i from d letters.
    std::vector<mpz_class> brackets(n + 1);
    for (int i = 1; i <= n; ++i) {
        mpz_bin_uiui(brackets[i].get_mpz_t(), static_cast<unsigned long>(d - 1 + i), static_cast<unsigned long>(i));
    }
    mpz_class total = 0;
    for_each_composition(n, [&](const Composition& parts) {
        mpz_class term = 1;
        for (int i : parts) term *= brackets[i];
        total += term;
    });
    return total;
}

std::vector<mpz_class> hilbert_series_coeffs(int d, int max_n) {
    if (d < 1 || max_n < 0) throw DomainError("hilbert_series_coeffs needs d >= 1 and N >= 0");
    const std::size_t len = static_cast<std::size_t>(max_n) + 1;
    // (1 - t)^d truncated.
    std::vector<mpz_class> numer(len, 0);
    for (int k = 0; k <= d && static_cast<std::size_t>(k) < len; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        numer[k] = (k % 2 == 0) ? b : mpz_class(-b);
    }
    std::vector<mpz_class> denom(len);
    for (std::size_t k = 0; k < len; ++k) denom[k] = 2 * numer[k];
    denom[0] -= 1;  // 2(1-t)^d - 1, constant term 1
    std::vector<mpz_class> out(len, 0);
    for (std::size_t n = 0; n < len; ++n) {
        mpz_class acc = numer[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= denom[k] * out[n - k];
        out[n] = acc;  // denom[0] == 1
    }
    return out;
}

namespace {

// Multisets of size k from 1..d as sorted letter lists, in lexicographic order.
void multisets(int d, int k, int lowest, std::vector<Letter>& current, std::vector<Bracket>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(Bracket::canonical(current, d));
        return;
    }
    for (int a = lowest; a <= d; ++a) {
        current.push_back(a);
        multisets(d, k, a, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_words(int d, int n) {
    if (d < 1 || n < 0) throw DomainError("enumerate_words needs d >= 1 and n >= 0");
    std::vector<std::vector<Bracket>> by_weight(n + 1);
    for (int i = 1; i <= n; ++i) {
        std::vector<Letter> scratch;
        multisets(d, i, 1, scratch, by_weight[i]);
    }
    std::vector<Word> out;
    for_each_composition(n, [&](const Composition& parts) {
        // Cartesian product of bracket choices, one block per part.
        std::vector<std::size_t> pick(parts.size(), 0);
        while (true) {
            Word w;
            for (std::size_t b = 0; b < parts.size(); ++b) w.append(by_weight[parts[b]][pick[b]]);
            out.push_back(std::move(w));
            std::size_t pos = parts.size();
            while (pos > 0) {
                --pos;
                if (++pick[pos] < by_weight[parts[pos]].size()) break;
                pick[pos] = 0;
                if (pos == 0) {
                    pos = parts.size() + 1;
                    break;
                }
            }
            if (pos == parts.size() + 1 || parts.empty()) break;
        }
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace qsig
