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

#ifndef QSIG_WORD_BASIS_HPP
#define QSIG_WORD_BASIS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsig/word.hpp"

namespace qsig {

/// All words of weight <= W over d letters, in canonical order (index 0 is e),
/// together with the index tables the dense functional kernels need.
///
/// Instances are immutable and shared; use WordBasis::get to obtain one.
class WordBasis {
public:
    static std::shared_ptr<const WordBasis> get(int d, int max_weight);

    int alphabet() const noexcept { return d_; }
    int max_weight() const noexcept { return max_weight_; }
    std::size_t size() const noexcept { return words_.size(); }

    const Word& word(std::size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const noexcept { return words_; }

    /// Index of w, or nullopt when w is outside the basis.
    std::optional<std::size_t> find(const Word& w) const;

    /// Index of w; throws RangeError when w is beyond the truncation weight or
    /// uses a letter outside 1..d.
    std::size_t index(const Word& w) const;

    /// Indices of the length-one words, i.e. the brackets of weight <= W.
    const std::vector<std::size_t>& bracket_words() const noexcept { return bracket_words_; }

    /// For nonempty word i: index of the word without its last bracket, and the
    /// position of that last bracket within bracket_words().
    std::size_t prefix_of(std::size_t i) const { return prefix_[i]; }
    std::size_t last_bracket_of(std::size_t i) const { return last_bracket_[i]; }

    /// Every deconcatenation (prefix index, suffix index) of word i, e first.
    const std::vector<std::pair<std::size_t, std::size_t>>& splits(std::size_t i) const { return splits_[i]; }

    /// Nonempty word indices ordered by decreasing length.
    const std::vector<std::size_t>& by_length_desc() const noexcept { return by_length_desc_; }

    WordBasis(int d, int max_weight);

private:
    int d_;
    int max_weight_;
    std::vector<Word> words_;
    std::unordered_map<Word, std::size_t> index_;
    std::vector<std::size_t> bracket_words_;
    std::vector<std::size_t> prefix_;
    std::vector<std::size_t> last_bracket_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits_;
    std::vector<std::size_t> by_length_desc_;
};

using BasisPtr = std::shared_ptr<const WordBasis>;

}  // namespace qsig

#endif  // QSIG_WORD_BASIS_HPP
