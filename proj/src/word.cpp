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

#include "qsig/word.hpp"

#include <algorithm>

namespace qsig {

namespace {

void check_letter(long a, int d) {
    const int bound = d > 0 ? d : kMaxAlphabet;
    if (a < 1 || a > bound) {
        throw RangeError("letter out of alphabet: " + std::to_string(a) + " not in 1.." + std::to_string(bound));
    }
}

}  // namespace

Bracket Bracket::canonical(std::vector<Letter> letters, int d) {
    if (letters.empty()) throw DomainError("empty bracket");
    std::string code;
    code.reserve(letters.size());
    for (Letter a : letters) {
        check_letter(a, d);
        code.push_back(static_cast<char>(static_cast<unsigned char>(a)));
    }
    std::sort(code.begin(), code.end(),
              [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
    return Bracket(std::move(code));
}

Bracket Bracket::letter(Letter a, int d) { return canonical({a}, d); }

std::vector<Letter> Bracket::letters() const {
    std::vector<Letter> out;
    out.reserve(code_.size());
    for (char c : code_) out.push_back(static_cast<unsigned char>(c));
    return out;
}

int Bracket::multiplicity(Letter a) const noexcept {
    return static_cast<int>(std::count(code_.begin(), code_.end(), static_cast<char>(static_cast<unsigned char>(a))));
}

Bracket operator*(const Bracket& a, const Bracket& b) {
    std::string code;
    code.reserve(a.code_.size() + b.code_.size());
    std::merge(a.code_.begin(), a.code_.end(), b.code_.begin(), b.code_.end(), std::back_inserter(code),
               [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
    return Bracket(std::move(code));
}

Word::Word(std::initializer_list<Bracket> brackets) {
    for (const auto& b : brackets) append(b);
}

Word::Word(const std::vector<Bracket>& brackets) {
    for (const auto& b : brackets) append(b);
}

Bracket Word::bracket(std::size_t i) const {
    std::size_t start = 0;
    for (std::size_t k = 0; k < i; ++k) start = code_.find('\0', start) + 1;
    const std::size_t end = code_.find('\0', start);
    return Bracket(code_.substr(start, end - start));
}

std::vector<Bracket> Word::brackets() const {
    std::vector<Bracket> out;
    out.reserve(length_);
    std::size_t start = 0;
    while (start < code_.size()) {
        const std::size_t end = code_.find('\0', start);
        out.push_back(Bracket(code_.substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

Bracket Word::last() const {
    if (empty()) throw DomainError("empty word has no last bracket");
    const std::size_t end = code_.size() - 1;
    const std::size_t prev = code_.rfind('\0', end - 1);
    const std::size_t start = prev == std::string::npos ? 0 : prev + 1;
    return Bracket(code_.substr(start, end - start));
}

Word Word::without_last() const {
    if (empty()) throw DomainError("empty word has no last bracket");
    Word r;
    const std::size_t end = code_.size() - 1;
    const std::size_t prev = code_.rfind('\0', end - 1);
    r.code_ = prev == std::string::npos ? std::string() : code_.substr(0, prev + 1);
    r.length_ = length_ - 1;
    return r;
}

Letter Word::max_letter() const noexcept {
    unsigned char m = 0;
    for (char c : code_) m = std::max(m, static_cast<unsigned char>(c));
    return m;
}

Word Word::prefix(std::size_t k) const {
    Word r;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < k; ++i) pos = code_.find('\0', pos) + 1;
    r.code_ = code_.substr(0, pos);
    r.length_ = k;
    return r;
}

Word Word::suffix(std::size_t k) const {
    Word r;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < k; ++i) pos = code_.find('\0', pos) + 1;
    r.code_ = code_.substr(pos);
    r.length_ = length_ - k;
    return r;
}

Word& Word::append(const Bracket& b) {
    code_ += b.code_;
    code_.push_back('\0');
    ++length_;
    return *this;
}

Word& Word::append(const Word& w) {
    code_ += w.code_;
    length_ += w.length_;
    return *this;
}

Word Word::reversed() const {
    auto bs = brackets();
    std::reverse(bs.begin(), bs.end());
    return Word(bs);
}

bool canonical_less(const Word& a, const Word& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    if (a.length() != b.length()) return a.length() > b.length();
    // Lexicographic on bracket lists, each bracket compared by its letter list.
    const auto& ca = a.code();
    const auto& cb = b.code();
    std::size_t i = 0, j = 0;
    while (i < ca.size() && j < cb.size()) {
        const std::size_t ea = ca.find('\0', i);
        const std::size_t eb = cb.find('\0', j);
        const int c = std::string_view(ca).substr(i, ea - i).compare(std::string_view(cb).substr(j, eb - j));
        if (c != 0) return c < 0;
        i = ea + 1;
        j = eb + 1;
    }
    return false;
}

int word_weight(const Word& w) { return w.weight(); }

namespace {

class WordParser {
public:
    WordParser(std::string_view text, int d) : text_(text), d_(d) {}

    Word parse() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'e') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) throw ParseError("trailing input after \"e\"", pos_);
            return Word();
        }
        Word w;
        if (pos_ >= text_.size()) throw ParseError("expected \"e\" or \"[\"", pos_);
        while (pos_ < text_.size()) {
            w.append(bracket());
            skip_ws();
        }
        return w;
    }

private:
    Bracket bracket() {
        expect('[');
        std::vector<Letter> letters;
        letters.push_back(letter());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            letters.push_back(letter());
            skip_ws();
        }
        expect(']');
        return Bracket::canonical(std::move(letters), d_);
    }

    Letter letter() {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) throw RangeError("letter out of alphabet: " + std::string(text_.substr(start, pos_ - start + 1)));
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected letter", pos_);
        if (value < 1) throw ParseError("letters start at 1", start);
        check_letter(value, d_);
        return static_cast<Letter>(value);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    std::string_view text_;
    int d_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int d) { return WordParser(text, d).parse(); }

std::string print_bracket(const Bracket& b) {
    std::string out = "[";
    bool first = true;
    for (Letter a : b.letters()) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
    }
    out += ']';
    return out;
}

std::string print_word(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (const auto& b : w.brackets()) out += print_bracket(b);
    return out;
}

std::vector<Word> parse_word_list(std::string_view text, int d) {
    std::vector<Word> out;
    std::size_t pos = 0;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto piece = text.substr(start, end - start);
        const auto first = piece.find_first_not_of(" \t");
        if (first != std::string_view::npos) {
            try {
                out.push_back(parse_word(piece, d));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad word \"") + std::string(piece) + "\"", start + e.offset());
            }
        }
        start = end + 1;
    };
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == ' ' || c == ';' || c == ',')) flush(pos);
    }
    flush(text.size());
    return out;
}

}  // namespace qsig
