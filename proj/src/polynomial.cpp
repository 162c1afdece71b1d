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

#include "qsig/polynomial.hpp"

#include <algorithm>

namespace qsig {

int common_alphabet(int d1, int d2) {
    if (d1 != 0 && d2 != 0 && d1 != d2) {
        throw DomainError("mismatched alphabets: d=" + std::to_string(d1) + " vs d=" + std::to_string(d2));
    }
    return d1 != 0 ? d1 : d2;
}

Polynomial::Polynomial(const Word& w, Rational c, int d) : d_(d) { add_term(w, c); }

Rational Polynomial::coefficient(const Word& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

std::vector<std::pair<Word, Rational>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Word, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

int Polynomial::max_weight() const noexcept {
    int m = -1;
    for (const auto& [w, c] : terms_) m = std::max(m, w.weight());
    return m;
}

bool Polynomial::is_homogeneous() const noexcept {
    int weight = -1;
    for (const auto& [w, c] : terms_) {
        if (weight >= 0 && w.weight() != weight) return false;
        weight = w.weight();
    }
    return true;
}

void Polynomial::check_alphabet(const Polynomial& other) { d_ = common_alphabet(d_, other.d_); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_alphabet(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_alphabet(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial concat(const Polynomial& p, const Polynomial& q) {
    Polynomial r(common_alphabet(p.alphabet(), q.alphabet()));
    for (const auto& [u, a] : p.terms()) {
        for (const auto& [v, b] : q.terms()) r.add_term(concat(u, v), a * b);
    }
    return r;
}

Polynomial append_bracket(const Polynomial& p, const Bracket& b) {
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        Word x = w;
        x.append(b);
        r.add_term(x, c);
    }
    return r;
}

namespace {

// Appends " + c " / " - c " style separators; `first` controls the leading form.
void append_coefficient(std::string& out, const Rational& c, bool first) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    if (mag != 1) {
        out += to_string(mag);
        out += ' ';
    }
}

}  // namespace

std::string print_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.sorted_terms()) {
        append_coefficient(out, c, first);
        out += print_word(w);
        first = false;
    }
    return out;
}

void TensorPair::add_term(const Word& u, const Word& v, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key(u, v), c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Rational TensorPair::coefficient(const Word& u, const Word& v) const {
    const auto it = terms_.find(Key(u, v));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::tuple<Word, Word, Rational>> TensorPair::sorted_terms() const {
    std::vector<std::tuple<Word, Word, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(key.first, key.second, c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const auto& [au, av, ac] = a;
        const auto& [bu, bv, bc] = b;
        if (au != bu) return canonical_less(au, bu);
        return canonical_less(av, bv);
    });
    return out;
}

TensorPair& TensorPair::operator+=(const TensorPair& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

TensorPair& TensorPair::operator-=(const TensorPair& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
}

std::string print_tensor(const TensorPair& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [u, v, c] : t.sorted_terms()) {
        append_coefficient(out, c, first);
        out += print_word(u);
        out += " ⊗ ";
        out += print_word(v);
        first = false;
    }
    return out;
}

}  // namespace qsig
