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

#include "qsig/area.hpp"

#include <map>

#include "qsig/hopf.hpp"
#include "qsig/linalg.hpp"
#include "qsig/qsym.hpp"

namespace qsig {

Polynomial area(const Word& u, const Word& v) {
    return half_shuffle_sh(ShuffleHalf::right, u, v) - half_shuffle_sh(ShuffleHalf::right, v, u);
}

Polynomial area(const Polynomial& p, const Polynomial& q) {
    return half_shuffle_sh(ShuffleHalf::right, p, q) - half_shuffle_sh(ShuffleHalf::right, q, p);
}

Polynomial darea(const Word& u, const Word& v) {
    return half_shuffle_qsh(QuasiHalf::right, u, v) - half_shuffle_qsh(QuasiHalf::right, v, u);
}

Polynomial darea(const Polynomial& p, const Polynomial& q) {
    return half_shuffle_qsh(QuasiHalf::right, p, q) - half_shuffle_qsh(QuasiHalf::right, q, p);
}

namespace {

std::vector<Polynomial> brackets_up_to(int d, int max_weight) {
    std::vector<Polynomial> out;
    for (int n = 1; n <= max_weight; ++n) {
        for (const Word& w : enumerate_words(d, n)) {
            if (w.length() == 1) out.emplace_back(w, 1, d);
        }
    }
    return out;
}

// Reduces each weight class separately so the basis stays homogeneous.
std::vector<Polynomial> reduce_by_weight(const std::vector<Polynomial>& gens) {
    std::map<int, std::vector<Polynomial>> by_weight;
    for (const auto& g : gens) {
        if (!g.is_zero()) by_weight[g.max_weight()].push_back(g);
    }
    std::vector<Polynomial> out;
    for (auto& [weight, group] : by_weight) {
        for (auto& b : reduce_to_basis(group)) out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

std::vector<Polynomial> area_space_basis(AreaKind kind, int n, int d, int max_weight) {
    if (n < 1) throw DomainError("area space depth must be >= 1");
    std::vector<std::vector<Polynomial>> levels(n + 1);
    levels[1] = brackets_up_to(d, max_weight);
    for (int k = 2; k <= n; ++k) {
        std::vector<Polynomial> gens;
        for (int m = 1; m < k; ++m) {
            for (const auto& phi : levels[k - m]) {
                for (const auto& psi : levels[m]) {
                    if (phi.max_weight() + psi.max_weight() > max_weight) continue;
                    gens.push_back(kind == AreaKind::continuous ? area(phi, psi) : darea(phi, psi));
                }
            }
        }
        levels[k] = reduce_by_weight(gens);
    }
    return levels[n];
}

std::vector<Polynomial> area_space_total_basis(AreaKind kind, int d, int max_weight) {
    std::vector<Polynomial> all;
    for (int n = 1; n <= max_weight; ++n) {
        for (auto& p : area_space_basis(kind, n, d, max_weight)) all.push_back(std::move(p));
    }
    return reduce_by_weight(all);
}

std::vector<Polynomial> area_span_generators(int d, int max_weight) {
    std::vector<Polynomial> out = brackets_up_to(d, max_weight);
    const auto brackets = brackets_up_to(d, max_weight);
    for (int prefix_weight = 0; prefix_weight + 2 <= max_weight; ++prefix_weight) {
        for (const Word& u : enumerate_words(d, prefix_weight)) {
            for (const auto& pa : brackets) {
                for (const auto& pb : brackets) {
                    const Word a = pa.terms().begin()->first;
                    const Word b = pb.terms().begin()->first;
                    if (u.weight() + a.weight() + b.weight() > max_weight) continue;
                    if (!canonical_less(a, b)) continue;  // a < b; a = b gives 0, b < a is the negative
                    Polynomial g(concat(concat(u, a), b), 1, d);
                    g.add_term(concat(concat(u, b), a), -1);
                    out.push_back(std::move(g));
                }
            }
        }
    }
    return out;
}

}  // namespace qsig
