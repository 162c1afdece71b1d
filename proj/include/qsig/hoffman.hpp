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

#ifndef QSIG_HOFFMAN_HPP
#define QSIG_HOFFMAN_HPP

#include "qsig/composition.hpp"
#include "qsig/dual.hpp"
#include "qsig/polynomial.hpp"

namespace qsig {

// Hoffman's exponential maps the shuffle Hopf algebra isomorphically onto the
// quasi-shuffle Hopf algebra on the same words. Coefficients are always exact.

/// sum over compositions I of l(w) of I[w] / (i_1! ... i_p!).
Polynomial hoffman_exp(const Word& w);
Polynomial hoffman_exp(const Polynomial& p);

/// sum over compositions I of l(w) of (-1)^(l(w)-p) I[w] / (i_1 ... i_p).
Polynomial hoffman_log(const Word& w);
Polynomial hoffman_log(const Polynomial& p);

/// The part of hoffman_exp(w) coming from compositions whose last block has
/// size > 1, so that hoffman_exp(w) = hoffman_exp(w_1...w_{n-1}) w_n + remainder.
/// Throws DomainError on the empty word.
Polynomial hoffman_remainder(const Word& w);

/// Adjoint on functionals: <w, result> = <hoffman_exp(w), c>. Sends quasi-shuffle
/// characters to shuffle characters and is multiplicative for convolution.
/// Only exact functionals are accepted.
DualFunctional<Rational> hoffman_adjoint(const DualFunctional<Rational>& c);

}  // namespace qsig

#endif  // QSIG_HOFFMAN_HPP
