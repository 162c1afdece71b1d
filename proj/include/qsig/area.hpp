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

#ifndef QSIG_AREA_HPP
#define QSIG_AREA_HPP

#include <vector>

#include "qsig/polynomial.hpp"

namespace qsig {

/// area(u, v) = u > v - v > u with the shuffle right half-shuffle.
/// Throws DomainError on an empty basis word.
Polynomial area(const Word& u, const Word& v);
Polynomial area(const Polynomial& p, const Polynomial& q);

/// darea(u, v) = u >. v - v >. u with the quasi-shuffle right half-shuffle.
Polynomial darea(const Word& u, const Word& v);
Polynomial darea(const Polynomial& p, const Polynomial& q);

enum class AreaKind { continuous, discrete };

/// Basis of the iterated area space of depth n (D_n for continuous, its
/// quasi-shuffle analogue for discrete), cut to weight <= max_weight. D_1 is
/// spanned by the brackets; D_{n} by area(D_{n-m}, D_m), m = 1..n-1.
///
/// Every returned element is weight-homogeneous; the list is ordered by weight
/// and reduced per weight to canonical echelon form.
std::vector<Polynomial> area_space_basis(AreaKind kind, int n, int d, int max_weight);

/// Basis of the direct sum of area spaces D_1 + ... cut to weight <= max_weight.
/// Depth is bounded by the weight, so the sum is finite.
std::vector<Polynomial> area_space_total_basis(AreaKind kind, int d, int max_weight);

/// The brackets together with every u([a][b] - [b][a]) of weight <= max_weight.
std::vector<Polynomial> area_span_generators(int d, int max_weight);

}  // namespace qsig

#endif  // QSIG_AREA_HPP
