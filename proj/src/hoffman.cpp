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

#include "qsig/hoffman.hpp"

namespace qsig {

namespace {

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

template <typename Weight>
Polynomial sum_over_compositions(const Word& w, Weight&& weight) {
    if (w.empty()) return Polynomial(w);
    Polynomial out;
    for_each_composition(static_cast<int>(w.length()), [&](const Composition& parts) {
        out.add_term(composition_apply(parts, w), weight(parts));
    });
    return out;
}

template <typename WordMap>
Polynomial linear_extension(const Polynomial& p, WordMap&& map) {
    Polynomial out(p.alphabet());
    for (const auto& [w, c] : p.terms()) out += c * map(w);
    return out;
}

Rational exp_weight(const Composition& parts) {
    Rational denom = 1;
    for (int i : parts) denom *= factorial(i);
    return 1 / denom;
}

}  // namespace

Polynomial hoffman_exp(const Word& w) { return sum_over_compositions(w, exp_weight); }

Polynomial hoffman_exp(const Polynomial& p) {
    return linear_extension(p, [](const Word& w) { return hoffman_exp(w); });
}

Polynomial hoffman_log(const Word& w) {
    const long n = static_cast<long>(w.length());
    return sum_over_compositions(w, [n](const Composition& parts) -> Rational {
        Rational denom = 1;
        for (int i : parts) denom *= i;
        const long sign = ((n - static_cast<long>(parts.size())) % 2 == 0) ? 1 : -1;
        return Rational(sign) / denom;
    });
}

Polynomial hoffman_log(const Polynomial& p) {
    return linear_extension(p, [](const Word& w) { return hoffman_log(w); });
}

Polynomial hoffman_remainder(const Word& w) {
    if (w.empty()) throw DomainError("hoffman remainder undefined on e");
    Polynomial out;
    for_each_composition(static_cast<int>(w.length()), [&](const Composition& parts) {
        if (parts.back() > 1) out.add_term(composition_apply(parts, w), exp_weight(parts));
    });
    return out;
}

DualFunctional<Rational> hoffman_adjoint(const DualFunctional<Rational>& c) {
    return pullback(c, [](const Word& w) { return hoffman_exp(w); });
}

}  // namespace qsig
