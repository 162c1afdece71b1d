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

#ifndef QSIG_SIGNATURE_HPP
#define QSIG_SIGNATURE_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "qsig/dual.hpp"
#include "qsig/qsym.hpp"

namespace qsig {

/// A discrete time series x_0, x_1, ..., x_N in F^d, extended constantly after
/// x_N. Increments are dx_n = x_n - x_{n-1} for 1 <= n <= N and zero afterwards.
template <Scalar S>
class TimeSeries {
public:
    TimeSeries(Point<S> base, std::vector<Point<S>> points) : base_(std::move(base)), points_(std::move(points)) {
        if (base_.empty()) throw DomainError("time series needs dimension >= 1");
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (points_[j].size() != base_.size()) {
                throw DomainError("point " + std::to_string(j + 1) + " has dimension " +
                                  std::to_string(points_[j].size()) + ", expected " + std::to_string(base_.size()));
            }
        }
    }

    /// Series given as x_0, x_1, ..., x_N in one list.
    static TimeSeries from_values(std::vector<Point<S>> values) {
        if (values.empty()) throw DomainError("time series needs a base point");
        Point<S> base = std::move(values.front());
        values.erase(values.begin());
        return TimeSeries(std::move(base), std::move(values));
    }

    int dimension() const noexcept { return static_cast<int>(base_.size()); }
    std::size_t steps() const noexcept { return points_.size(); }

    /// x_j, with x_j = x_N for j > N.
    const Point<S>& point(std::size_t j) const {
        if (j == 0 || points_.empty()) return base_;
        return points_[std::min(j, points_.size()) - 1];
    }

    /// dx_j for j >= 1; zero beyond N.
    Point<S> increment(std::size_t j) const {
        Point<S> out(base_.size(), scalar_from_int<S>(0));
        if (j == 0 || j > points_.size()) return out;
        const Point<S>& cur = point(j);
        const Point<S>& prev = point(j - 1);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = cur[k] - prev[k];
        return out;
    }

    std::vector<Point<S>> increments() const {
        std::vector<Point<S>> out;
        out.reserve(points_.size());
        for (std::size_t j = 1; j <= points_.size(); ++j) out.push_back(increment(j));
        return out;
    }

    const Point<S>& base() const noexcept { return base_; }
    const std::vector<Point<S>>& points() const noexcept { return points_; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    Point<S> base_;
    std::vector<Point<S>> points_;
};

/// An iterated-sums signature over the window (from, to]: a quasi-shuffle
/// character truncated at weight W.
template <Scalar S>
struct Signature {
    DualFunctional<S> functional;
    std::size_t from = 0;
    std::size_t to = 0;

    const S& at(const Word& w) const { return functional.at(w); }
    int max_weight() const noexcept { return functional.max_weight(); }
    int alphabet() const noexcept { return functional.alphabet(); }
};

/// dx_j^{[b]}: product of the increment coordinates named by the letters of b.
template <Scalar S>
S bracket_increment(const TimeSeries<S>& x, std::size_t j, const Bracket& b) {
    if (j == 0) throw DomainError("increments start at index 1");
    return bracket_monomial(x.increment(j), b);
}

namespace detail {

template <Scalar S>
void check_alphabet(const TimeSeries<S>& x, int max_weight) {
    if (max_weight < 0) throw DomainError("truncation weight must be >= 0");
    if (x.dimension() > kMaxAlphabet) throw DomainError("series dimension exceeds the alphabet limit");
}

/// Streams increments steps (from, to] into coefficients, longest words first
/// so each update reads the prefix value from before the current step.
template <Scalar S>
void accumulate_steps(const TimeSeries<S>& x, std::size_t from, std::size_t to, DualFunctional<S>& sig) {
    const WordBasis& basis = *sig.basis();
    const auto& brackets = basis.bracket_words();
    const std::size_t last = std::min(to, x.steps());
    std::vector<S> inc(brackets.size(), scalar_from_int<S>(0));
    std::vector<double> compensation;
    if constexpr (!ScalarTraits<S>::exact) compensation.assign(sig.size(), 0.0);

    for (std::size_t j = from + 1; j <= last; ++j) {
        const Point<S> dx = x.increment(j);
        bool any = false;
        for (std::size_t b = 0; b < brackets.size(); ++b) {
            inc[b] = bracket_monomial(dx, basis.word(brackets[b]).last());
            any = any || !ScalarTraits<S>::is_zero(inc[b]);
        }
        if (!any) continue;
        for (std::size_t i : basis.by_length_desc()) {
            const S& step = inc[basis.last_bracket_of(i)];
            if (ScalarTraits<S>::is_zero(step)) continue;
            if constexpr (ScalarTraits<S>::exact) {
                sig[i] += sig[basis.prefix_of(i)] * step;
            } else {
                // Kahan-compensated update.
                const double y = sig[basis.prefix_of(i)] * step - compensation[i];
                const double t = sig[i] + y;
                compensation[i] = (t - sig[i]) - y;
                sig[i] = t;
            }
        }
    }
}

}  // namespace detail

/// DS(x)_{n,m} truncated at weight W:
///   <[u_1]...[u_k], DS> = sum over n < i_1 < ... < i_k <= m of dx_{i_1}^{[u_1]} ... dx_{i_k}^{[u_k]}.
/// m may exceed N (those increments are zero). Throws DomainError when n > m.
template <Scalar S>
Signature<S> iterated_sums_signature(const TimeSeries<S>& x, std::size_t n, std::size_t m, int max_weight) {
    detail::check_alphabet(x, max_weight);
    if (n > m) {
        throw DomainError("signature window needs n <= m (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    auto sig = DualFunctional<S>::counit(WordBasis::get(x.dimension(), max_weight));
    detail::accumulate_steps(x, n, m, sig);
    return {std::move(sig), n, m};
}

/// DS(x)_{0,N}.
template <Scalar S>
Signature<S> iterated_sums_signature(const TimeSeries<S>& x, int max_weight) {
    return iterated_sums_signature(x, 0, x.steps(), max_weight);
}

/// Signature of the series (0, v, v, ...): <[1^k1 ... d^kd]> = prod (v^(a))^ka on
/// length-one words, zero on longer words, one on e.
template <Scalar S>
Signature<S> single_step_signature(const Point<S>& v, int max_weight) {
    if (v.empty()) throw DomainError("increment needs dimension >= 1");
    auto sig = DualFunctional<S>::counit(WordBasis::get(static_cast<int>(v.size()), max_weight));
    for (std::size_t i : sig.basis()->bracket_words()) sig[i] = bracket_monomial(v, sig.basis()->word(i).last());
    return {std::move(sig), 0, 1};
}

/// DS_{n,n'} . DS_{n',n''} = DS_{n,n''}.
template <Scalar S>
Signature<S> chen_merge(const Signature<S>& first, const Signature<S>& second) {
    if (first.to != second.from) {
        throw DomainError("windows do not abut: (" + std::to_string(first.from) + "," + std::to_string(first.to) +
                          "] then (" + std::to_string(second.from) + "," + std::to_string(second.to) + "]");
    }
    return {convolve(first.functional, second.functional), first.from, second.to};
}

/// Splits steps 1..N into contiguous chunks, computes each chunk's signature on
/// its own thread and folds the results left to right with chen_merge.
template <Scalar S>
Signature<S> parallel_signature(const TimeSeries<S>& x, int max_weight, std::size_t chunks) {
    detail::check_alphabet(x, max_weight);
    if (chunks < 1) throw DomainError("chunks must be >= 1");
    const std::size_t n = x.steps();
    const std::size_t k = std::max<std::size_t>(1, std::min(chunks, n));
    if (k == 1) return iterated_sums_signature(x, 0, n, max_weight);

    std::vector<std::future<Signature<S>>> parts;
    parts.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t lo = c * n / k;
        const std::size_t hi = (c + 1) * n / k;
        parts.push_back(std::async(std::launch::async,
                                   [&x, lo, hi, max_weight] { return iterated_sums_signature(x, lo, hi, max_weight); }));
    }
    Signature<S> acc = parts.front().get();
    for (std::size_t c = 1; c < k; ++c) acc = chen_merge(acc, parts[c].get());
    return acc;
}

/// Repeats the value at time n once: tau_n(x)_j = x_j for j <= n, x_{j-1} for j > n.
template <Scalar S>
TimeSeries<S> time_warp(const TimeSeries<S>& x, std::size_t n) {
    if (n < 1) throw DomainError("time warp index must be >= 1");
    std::vector<Point<S>> points;
    points.reserve(x.steps() + 1);
    for (std::size_t j = 1; j <= x.steps() + 1; ++j) points.push_back(j <= n ? x.point(j) : x.point(j - 1));
    return TimeSeries<S>(x.base(), std::move(points));
}

/// (x_N, x_{N-1}, ..., x_0), based at x_N.
template <Scalar S>
TimeSeries<S> reverse_series(const TimeSeries<S>& x) {
    std::vector<Point<S>> points;
    points.reserve(x.steps());
    for (std::size_t j = x.steps(); j-- > 0;) points.push_back(x.point(j));
    return TimeSeries<S>(x.point(x.steps()), std::move(points));
}

/// One component of the lifted path per bracket a of weight <= W.
template <Scalar S>
struct LiftedPath {
    std::vector<Bracket> brackets;
    /// increments[k][j-1] = dx_j^{[a_k]}, j = 1..N.
    std::vector<std::vector<S>> increments;
    /// values[k][n] = sum over j <= n of dx_j^{[a_k]}, n = 0..N.
    std::vector<std::vector<S>> values;
};

template <Scalar S>
LiftedPath<S> lift_increments(const TimeSeries<S>& x, int max_weight) {
    detail::check_alphabet(x, max_weight);
    const auto basis = WordBasis::get(x.dimension(), max_weight);
    LiftedPath<S> out;
    const auto dxs = x.increments();
    for (std::size_t i : basis->bracket_words()) {
        const Bracket b = basis->word(i).last();
        std::vector<S> inc;
        std::vector<S> val{scalar_from_int<S>(0)};
        for (const auto& dx : dxs) {
            inc.push_back(bracket_monomial(dx, b));
            val.push_back(val.back() + inc.back());
        }
        out.brackets.push_back(b);
        out.increments.push_back(std::move(inc));
        out.values.push_back(std::move(val));
    }
    return out;
}

/// Iterated-integrals signature S(X)_{0,N} of the piecewise-linear lifted path,
/// assembled as exp(X_1 - X_0) . exp(X_2 - X_1) . ... over the steps.
template <Scalar S>
DualFunctional<S> iterated_integrals_signature_pl(const TimeSeries<S>& x, int max_weight) {
    const LiftedPath<S> lift = lift_increments(x, max_weight);
    const auto basis = WordBasis::get(x.dimension(), max_weight);
    auto result = DualFunctional<S>::counit(basis);
    for (std::size_t j = 0; j < x.steps(); ++j) {
        DualFunctional<S> step(basis);
        const auto& bracket_words = basis->bracket_words();
        for (std::size_t k = 0; k < bracket_words.size(); ++k) step[bracket_words[k]] = lift.increments[k][j];
        result = convolve(result, exp_conv(step));
    }
    return result;
}

}  // namespace qsig

#endif  // QSIG_SIGNATURE_HPP
