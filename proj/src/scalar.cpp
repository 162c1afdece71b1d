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

#include "qsig/scalar.hpp"

#include <charconv>
#include <cstdio>

namespace qsig {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Consumes [0-9]+ starting at pos; returns the end position.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected digit in number \"" + std::string(text) + "\"", pos);
    return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t int_begin = pos;
    pos = scan_digits(text, pos);
    mpz_class numerator(std::string(text.substr(int_begin, pos - int_begin)), 10);
    mpz_class denominator = 1;

    if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_begin = ++pos;
        pos = scan_digits(text, pos);
        denominator = mpz_class(std::string(text.substr(den_begin, pos - den_begin)), 10);
        if (denominator == 0) throw ParseError("zero denominator", den_begin);
    } else if (pos < text.size() && text[pos] == '.') {
        const std::size_t frac_begin = ++pos;
        pos = scan_digits(text, pos);
        const std::size_t frac_len = pos - frac_begin;
        mpz_class frac(std::string(text.substr(frac_begin, frac_len)), 10);
        mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac_len);
        numerator = numerator * denominator + frac;
    }
    if (pos != text.size()) throw ParseError("unexpected character in number", pos);

    Rational q(numerator, denominator);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return std::to_string(v);
    return std::string(buf, end);
}

}  // namespace qsig
