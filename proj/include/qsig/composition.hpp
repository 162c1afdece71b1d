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

#ifndef QSIG_COMPOSITION_HPP
#define QSIG_COMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "qsig/word.hpp"

namespace qsig {

/// An ordered tuple of positive integers.
using Composition = std::vector<int>;

/// Visits every composition of n. Compositions are indexed by bitmasks over
/// the n-1 gaps (bit set = block boundary) in increasing binary order, so
/// (n) comes first and (1,...,1) last. n = 0 visits the empty composition.
template <typename F>
void for_each_composition(int n, F&& visit) {
    if (n <= 0) {
        visit(Composition{});
        return;
    }
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    Composition parts;
    parts.reserve(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        parts.clear();
        int block = 1;
        for (int gap = 0; gap < n - 1; ++gap) {
            if (mask & (std::uint64_t{1} << gap)) {
                parts.push_back(block);
                block = 1;
            } else {
                ++block;
            }
        }
        parts.push_back(block);
        visit(static_cast<const Composition&>(parts));
    }
}

std::vector<Composition> compositions(int n);

/// I[w]: merges consecutive blocks of brackets of sizes i_1, ..., i_p with the
/// semigroup product. Throws DomainError when the parts do not sum to the length
/// of w or w is empty.
Word composition_apply(const Composition& parts, const Word& w);

}  // namespace qsig

#endif  // QSIG_COMPOSITION_HPP
