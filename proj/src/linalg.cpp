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

#include "qsig/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace qsig {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

namespace {

// Canonically ordered list of every word occurring in the polynomials.
std::vector<Word> support(const std::vector<const Polynomial*>& polys) {
    std::unordered_map<Word, bool> seen;
    std::vector<Word> words;
    for (const Polynomial* p : polys) {
        for (const auto& [w, c] : p->terms()) {
            if (seen.emplace(w, true).second) words.push_back(w);
        }
    }
    std::sort(words.begin(), words.end(), canonical_less);
    return words;
}

}  // namespace

SpanResult span_membership(const Polynomial& p, const std::vector<Polynomial>& generators) {
    SpanResult result;
    result.certificate.assign(generators.size(), Rational(0));
    if (p.is_zero()) {
        result.member = true;
        return result;
    }
    std::vector<const Polynomial*> all;
    for (const auto& g : generators) all.push_back(&g);
    all.push_back(&p);
    const auto words = support(all);

    // Augmented system: one row per word, one column per generator, rhs last.
    RationalMatrix m(words.size(), std::vector<Rational>(generators.size() + 1));
    for (std::size_t r = 0; r < words.size(); ++r) {
        for (std::size_t c = 0; c < generators.size(); ++c) m[r][c] = generators[c].coefficient(words[r]);
        m[r][generators.size()] = p.coefficient(words[r]);
    }
    const auto pivots = row_reduce(m);
    if (!pivots.empty() && pivots.back() == generators.size()) return result;  // inconsistent
    for (std::size_t r = 0; r < pivots.size(); ++r) result.certificate[pivots[r]] = m[r][generators.size()];
    result.member = true;
    return result;
}

std::vector<Polynomial> reduce_to_basis(const std::vector<Polynomial>& generators) {
    std::vector<const Polynomial*> all;
    for (const auto& g : generators) all.push_back(&g);
    const auto words = support(all);
    RationalMatrix m(generators.size(), std::vector<Rational>(words.size()));
    for (std::size_t r = 0; r < generators.size(); ++r) {
        for (std::size_t c = 0; c < words.size(); ++c) m[r][c] = generators[r].coefficient(words[c]);
    }
    const auto pivots = row_reduce(m);
    std::vector<Polynomial> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Polynomial row;
        for (std::size_t c = 0; c < words.size(); ++c) row.add_term(words[c], m[r][c]);
        basis.push_back(std::move(row));
    }
    return basis;
}

}  // namespace qsig
