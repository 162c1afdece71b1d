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

#include "qsig/composition.hpp"

#include <numeric>

namespace qsig {

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
    return out;
}

Word composition_apply(const Composition& parts, const Word& w) {
    if (w.empty()) throw DomainError("composition applied to the empty word");
    const long total = std::accumulate(parts.begin(), parts.end(), 0L);
    if (total != static_cast<long>(w.length())) {
        throw DomainError("composition sums to " + std::to_string(total) + " but word has length " +
                          std::to_string(w.length()));
    }
    const auto bs = w.brackets();
    Word out;
    std::size_t pos = 0;
    for (int part : parts) {
        if (part <= 0) throw DomainError("composition parts must be positive");
        Bracket merged = bs[pos];
        for (int k = 1; k < part; ++k) merged = merged * bs[pos + k];
        out.append(merged);
        pos += part;
    }
    return out;
}

}  // namespace qsig
