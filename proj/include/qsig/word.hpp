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

#ifndef QSIG_WORD_HPP
#define QSIG_WORD_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qsig/errors.hpp"

namespace qsig {

/// Letters are 1..d with d <= kMaxAlphabet.
using Letter = int;
inline constexpr int kMaxAlphabet = 255;

/// An element of the free commutative semigroup over the alphabet: a nonempty
/// multiset of letters, kept as a sorted letter list.
class Bracket {
public:
    /// Sorts the letters; throws DomainError("empty bracket") on an empty list and
    /// RangeError("letter out of alphabet") when a letter is outside 1..d.
    /// d = 0 means "any alphabet up to kMaxAlphabet".
    static Bracket canonical(std::vector<Letter> letters, int d = 0);

    /// Single-letter bracket [a].
    static Bracket letter(Letter a, int d = 0);

    int weight() const noexcept { return static_cast<int>(code_.size()); }
    std::vector<Letter> letters() const;
    Letter max_letter() const noexcept { return static_cast<unsigned char>(code_.back()); }

    /// Number of occurrences of a letter.
    int multiplicity(Letter a) const noexcept;

    /// Semigroup product: the sorted union of both letter multisets.
    friend Bracket operator*(const Bracket& a, const Bracket& b);

    friend bool operator==(const Bracket&, const Bracket&) = default;
    /// Lexicographic on the sorted letter lists.
    friend bool operator<(const Bracket& a, const Bracket& b) { return a.code_ < b.code_; }

    const std::string& code() const noexcept { return code_; }

private:
    friend class Word;
    explicit Bracket(std::string code) : code_(std::move(code)) {}
    std::string code_;  // sorted letters as bytes 1..255
};

/// An ordered list of brackets; the empty word is the unit e.
///
/// Stored flat: each bracket's letters followed by a zero byte. Short words fit
/// in the small-string buffer, which keeps the hot algebra loops allocation-free.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Bracket> brackets);
    explicit Word(const std::vector<Bracket>& brackets);

    /// Length-one word holding a single bracket.
    static Word of(const Bracket& b) { return Word{b}; }

    std::size_t length() const noexcept { return length_; }
    int weight() const noexcept { return static_cast<int>(code_.size() - length_); }
    bool empty() const noexcept { return length_ == 0; }

    Bracket bracket(std::size_t i) const;
    std::vector<Bracket> brackets() const;
    Bracket last() const;
    Word without_last() const;
    Letter max_letter() const noexcept;

    /// Prefix of the first k brackets / suffix starting at bracket k.
    Word prefix(std::size_t k) const;
    Word suffix(std::size_t k) const;

    Word& append(const Bracket& b);
    Word& append(const Word& w);
    friend Word concat(const Word& u, const Word& v) {
        Word r = u;
        r.append(v);
        return r;
    }
    Word reversed() const;

    friend bool operator==(const Word& a, const Word& b) noexcept { return a.code_ == b.code_; }
    friend bool operator!=(const Word& a, const Word& b) noexcept { return !(a == b); }

    /// Raw byte encoding; a cheap total order and hash key, unrelated to the
    /// canonical display order.
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
    std::size_t length_ = 0;
};

/// Canonical total order: weight ascending, then length descending, then
/// lexicographic on the bracket lists. Used for printing and matrix assembly.
bool canonical_less(const Word& a, const Word& b);

struct CanonicalOrder {
    bool operator()(const Word& a, const Word& b) const { return canonical_less(a, b); }
};

/// Orders by raw code; suitable for std::map keys when display order is irrelevant.
struct CodeOrder {
    bool operator()(const Word& a, const Word& b) const { return a.code() < b.code(); }
};

int word_weight(const Word& w);

/// Grammar: word := "e" | bracket+ ; bracket := "[" letter ("," letter)* "]" ;
/// letter := decimal integer >= 1. Whitespace between tokens is ignored.
/// d = 0 accepts any letter up to kMaxAlphabet.
Word parse_word(std::string_view text, int d = 0);

/// "e" for the empty word, otherwise "[1,2][3]" with sorted letters.
std::string print_word(const Word& w);
std::string print_bracket(const Bracket& b);

/// Parses a whitespace- or semicolon-separated list of words.
std::vector<Word> parse_word_list(std::string_view text, int d = 0);

}  // namespace qsig

template <>
struct std::hash<qsig::Word> {
    std::size_t operator()(const qsig::Word& w) const noexcept { return std::hash<std::string>{}(w.code()); }
};

template <>
struct std::hash<qsig::Bracket> {
    std::size_t operator()(const qsig::Bracket& b) const noexcept {
        return std::hash<std::string>{}(b.code());
    }
};

#endif  // QSIG_WORD_HPP
