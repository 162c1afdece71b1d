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

#include "qsig/word_basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qsig/qsym.hpp"

namespace qsig {

std::shared_ptr<const WordBasis> WordBasis::get(int d, int max_weight) {
    if (d < 1 || d > kMaxAlphabet) throw DomainError("alphabet size must be in 1.." + std::to_string(kMaxAlphabet));
    if (max_weight < 0) throw DomainError("truncation weight must be >= 0");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const WordBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{d, max_weight}];
    if (!slot) slot = std::make_shared<const WordBasis>(d, max_weight);
    return slot;
}

WordBasis::WordBasis(int d, int max_weight) : d_(d), max_weight_(max_weight) {
    for (int n = 0; n <= max_weight; ++n) {
        auto layer = enumerate_words(d, n);
        words_.insert(words_.end(), layer.begin(), layer.end());
    }
    index_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);

    std::unordered_map<std::size_t, std::size_t> bracket_position;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i].length() == 1) {
            bracket_position.emplace(i, bracket_words_.size());
            bracket_words_.push_back(i);
        }
    }

    prefix_.assign(words_.size(), 0);
    last_bracket_.assign(words_.size(), 0);
    splits_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word& w = words_[i];
        for (std::size_t k = 0; k <= w.length(); ++k) {
            splits_[i].emplace_back(index_.at(w.prefix(k)), index_.at(w.suffix(k)));
        }
        if (w.empty()) continue;
        prefix_[i] = index_.at(w.without_last());
        last_bracket_[i] = bracket_position.at(index_.at(Word::of(w.last())));
        by_length_desc_.push_back(i);
    }
    std::stable_sort(by_length_desc_.begin(), by_length_desc_.end(),
                     [this](std::size_t a, std::size_t b) { return words_[a].length() > words_[b].length(); });
}

std::optional<std::size_t> WordBasis::find(const Word& w) const {
    const auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WordBasis::index(const Word& w) const {
    if (auto i = find(w)) return *i;
    if (w.weight() > max_weight_) {
        throw RangeError("word " + print_word(w) + " has weight " + std::to_string(w.weight()) +
                         " beyond truncation " + std::to_string(max_weight_));
    }
    throw RangeError("word " + print_word(w) + " uses a letter outside 1.." + std::to_string(d_));
}

}  // namespace qsig
