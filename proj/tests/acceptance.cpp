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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

#include "qsig/area.hpp"
#include "qsig/hoffman.hpp"
#include "qsig/hopf.hpp"
#include "qsig/linalg.hpp"
#include "qsig/qsym.hpp"
#include "test_support.hpp"

using namespace qsig;
using qsig::testing::P;
using qsig::testing::W;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

Result fail(const std::string& why) { return {false, why}; }

std::string str(const Rational& q) { return to_string(q); }

// 1. Quasi-shuffle identity on 200 random series.
Result quasi_shuffle_identity() {
    std::mt19937_64 rng(101);
    std::vector<QuasiShuffleTable> tables;
    for (int d = 1; d <= 3; ++d) tables.emplace_back(WordBasis::get(d, 5));
    std::size_t pairs = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 3;
        const std::size_t steps = 1 + rng() % 8;
        const auto x = testing::random_rational_series(rng, d, steps, 5);
        const auto ds = iterated_sums_signature(x, 5).functional;
        if (auto w = find_character_violation(ds, tables[d - 1])) {
            return fail("series " + std::to_string(trial) + ": u=" + print_word(w->first) + " v=" + print_word(w->second));
        }
        pairs += tables[d - 1].entries().size();
    }
    return {true, "200 series, " + std::to_string(pairs) + " pair checks, |u|+|v|<=5"};
}

// 2. Chen's property at every split point.
Result chen_property() {
    std::mt19937_64 rng(101);
    std::size_t splits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 3;
        const auto x = testing::random_rational_series(rng, d, 1 + rng() % 8, 5);
        const auto full = iterated_sums_signature(x, 4).functional;
        for (std::size_t k = 0; k <= x.steps(); ++k) {
            const auto merged =
                chen_merge(iterated_sums_signature(x, 0, k, 4), iterated_sums_signature(x, k, x.steps(), 4));
            if (!(merged.functional == full)) return fail("series " + std::to_string(trial) + " split " + std::to_string(k));
            ++splits;
        }
        // An interior window split as well.
        if (x.steps() >= 2) {
            const std::size_t n = 1, m = x.steps();
            const std::size_t k = 1 + rng() % (m - n + 1);
            const auto merged = chen_merge(iterated_sums_signature(x, n, k, 4), iterated_sums_signature(x, k, m, 4));
            if (!(merged.functional == iterated_sums_signature(x, n, m, 4).functional)) {
                return fail("series " + std::to_string(trial) + " window split " + std::to_string(k));
            }
            ++splits;
        }
    }
    return {true, std::to_string(splits) + " splits, W=4"};
}

// 3. Time-warping invariance.
Result time_warping() {
    std::mt19937_64 rng(103);
    std::size_t warps = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + trial % 3;
        const auto x = testing::random_rational_series(rng, d, 1 + rng() % 8, 5);
        const auto ds = iterated_sums_signature(x, 5).functional;
        for (std::size_t n = 1; n <= x.steps(); ++n) {
            if (!(iterated_sums_signature(time_warp(x, n), 5).functional == ds)) {
                return fail("series " + std::to_string(trial) + " tau_" + std::to_string(n));
            }
            ++warps;
        }
    }
    return {true, "100 series, " + std::to_string(warps) + " warps, W=5"};
}

// 4. Hoffman isomorphism.
Result hoffman_isomorphism() {
    std::size_t products = 0, coproducts = 0;
    for (int d = 1; d <= 3; ++d) {
        const auto words = testing::words_up_to(d, 6);
        std::unordered_map<Word, Polynomial> exp_of;
        for (const auto& w : words) exp_of.emplace(w, hoffman_exp(w));
        auto phi = [&](const Word& w) -> const Polynomial& { return exp_of.at(w); };
        auto phi_poly = [&](const Polynomial& p) {
            Polynomial out;
            for (const auto& [w, c] : p.terms()) out += c * phi(w);
            return out;
        };
        for (const auto& w : words) {
            if (hoffman_log(phi(w)) != Polynomial(w)) return fail("log(exp(" + print_word(w) + ")) != id");
            const TensorPair lhs = tensor_map(coproduct(w), phi, phi);
            if (!(lhs == coproduct(phi(w)))) return fail("coproduct fails at " + print_word(w));
            ++coproducts;
        }
        for (const auto& u : words) {
            for (const auto& v : words) {
                if (u.weight() + v.weight() > 6) continue;
                if (phi_poly(shuffle(u, v)) != quasi_shuffle(phi(u), phi(v))) {
                    return fail("product fails at d=" + std::to_string(d) + " u=" + print_word(u) + " v=" + print_word(v));
                }
                ++products;
            }
        }
    }
    return {true, std::to_string(products) + " ordered pairs, " + std::to_string(coproducts) + " words, d<=3, weight<=6"};
}

// 5. Golden examples. Each is printed byte-exactly in canonical term order and
// must equal, as a polynomial, the displayed form.
Result golden_examples() {
    struct Golden {
        std::string name;
        Polynomial value;
        std::string canonical;
        std::string display;
    };
    const Word u = W("[3]"), v = W("[4][1,2]");
    const std::vector<Golden> goldens{
        {"[2]*[3]", quasi_shuffle(W("[2]"), W("[3]")), "[2][3] + [3][2] + [2,3]", "[2][3] + [3][2] + [2,3]"},
        {"[3]*[4][1,2]", quasi_shuffle(u, v), "[3][4][1,2] + [4][1,2][3] + [4][3][1,2] + [3,4][1,2] + [4][1,2,3]",
         "[3][4][1,2] + [4][3][1,2] + [4][1,2][3] + [3,4][1,2] + [4][1,2,3]"},
        {"[3] >. [4][1,2]", half_shuffle_qsh(QuasiHalf::right, u, v), "[3][4][1,2] + [4][3][1,2] + [3,4][1,2]",
         "[3][4][1,2] + [4][3][1,2] + [3,4][1,2]"},
        {"[3] <. [4][1,2]", half_shuffle_qsh(QuasiHalf::left, u, v), "[4][1,2][3]", "[4][1,2][3]"},
        {"[3] <> [4][1,2]", half_shuffle_qsh(QuasiHalf::diamond, u, v), "[4][1,2,3]", "[4][1,2,3]"},
        {"Phi_H([1][2])", hoffman_exp(W("[1][2]")), "[1][2] + 1/2 [1,2]", "[1][2] + 1/2 [1,2]"},
        {"Phi_H([1][2,3][4])", hoffman_exp(W("[1][2,3][4]")),
         "[1][2,3][4] + 1/2 [1][2,3,4] + 1/2 [1,2,3][4] + 1/6 [1,2,3,4]",
         "[1][2,3][4] + 1/2 [1,2,3][4] + 1/2 [1][2,3,4] + 1/6 [1,2,3,4]"},
        {"area([3],[4][1,2])", area(u, v), "[3][4][1,2] - [4][1,2][3] + [4][3][1,2]",
         "[3][4][1,2] + [4][3][1,2] - [4][1,2][3]"},
        {"darea([3],[4][1,2])", darea(u, v), "[3][4][1,2] - [4][1,2][3] + [4][3][1,2] + [3,4][1,2]",
         "[3][4][1,2] + [4][3][1,2] + [3,4][1,2] - [4][1,2][3]"},
    };
    for (const auto& g : goldens) {
        const std::string printed = print_polynomial(g.value);
        if (printed != g.canonical) return fail(g.name + " printed \"" + printed + "\"");
        if (g.value != P(g.display)) return fail(g.name + " differs from its displayed form");
    }
    return {true, std::to_string(goldens.size()) + " goldens byte-exact"};
}

// 6. Lifted-path transfer.
Result lifted_path_transfer() {
    const auto small = TimeSeries<Rational>::from_values({{0}, {1}, {3}});
    const Rational witness = iterated_integrals_signature_pl(small, 2).at(W("[1][1]"));
    if (witness != Rational(9, 2)) return fail("<[1][1],S> = " + str(witness));
    if (pairing(hoffman_exp(W("[1][1]")), iterated_sums_signature(small, 2).functional) != Rational(9, 2)) {
        return fail("<Phi_H([1][1]),DS> != 9/2");
    }
    std::mt19937_64 rng(107);
    std::size_t checks = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + trial % 2;
        const auto x = testing::random_rational_series(rng, d, 1 + rng() % 6, 5);
        const auto ds = iterated_sums_signature(x, 4).functional;
        const auto s = iterated_integrals_signature_pl(x, 4);
        for (const auto& w : ds.basis()->words()) {
            if (pairing(hoffman_exp(w), ds) != s.at(w)) {
                return fail("series " + std::to_string(trial) + " word " + print_word(w));
            }
            ++checks;
        }
    }
    return {true, "witness 9/2, " + std::to_string(checks) + " word checks over 50 series"};
}

// Polynomials in t with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_integral(const Poly& a) {
    Poly out(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i] / Rational(static_cast<long>(i + 1));
    return out;
}

Rational poly_at_one(const Poly& a) {
    Rational s = 0;
    for (const auto& c : a) s += c;
    return s;
}

// <w, S(X)> for X_t = (t, t^2) on [0,1]. Brackets of weight >= 2 have zero
// variation along a finite-variation path.
Rational smooth_signature(const Word& w) {
    const Poly dx[2] = {Poly{1}, Poly{0, 2}};
    Poly f{1};
    for (const auto& b : w.brackets()) {
        if (b.weight() > 1) return 0;
        f = poly_integral(poly_mul(f, dx[b.max_letter() - 1]));
    }
    return poly_at_one(f);
}

// 7. Consistency under refinement.
Result consistency() {
    const auto basis = WordBasis::get(2, 3);
    std::vector<std::vector<double>> errors(basis->size());
    for (int k = 2; k <= 10; ++k) {
        const std::size_t n = std::size_t{1} << k;
        std::vector<Point<double>> values;
        for (std::size_t j = 0; j <= n; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(n);
            values.push_back({t, t * t});
        }
        const auto ds = iterated_sums_signature(TimeSeries<double>::from_values(values), 3).functional;
        for (std::size_t i = 0; i < basis->size(); ++i) {
            errors[i].push_back(std::fabs(ds[i] - smooth_signature(basis->word(i)).get_d()));
        }
    }
    // Rounding-level differences count as zero, so a word that is exact at every
    // refinement is trivially non-increasing.
    constexpr double kRoundoff = 1e-14;
    double worst_letters = 0, worst_brackets = 0;
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const Word& w = basis->word(i);
        bool letters_only = true;
        for (const auto& b : w.brackets()) letters_only = letters_only && b.weight() == 1;
        const auto& e = errors[i];
        for (std::size_t k = 1; k < e.size(); ++k) {
            if (e[k] > e[k - 1] + kRoundoff) {
                return fail(print_word(w) + " error rises at N=" + std::to_string(std::size_t{1} << (k + 2)));
            }
        }
        const double last = e.back();
        if (letters_only) {
            if (last >= 1e-3) return fail(print_word(w) + " error " + std::to_string(last) + " at N=1024");
            worst_letters = std::max(worst_letters, last);
        } else {
            if (last >= 1e-2) return fail(print_word(w) + " magnitude " + std::to_string(last) + " at N=1024");
            worst_brackets = std::max(worst_brackets, last);
        }
    }
    std::ostringstream os;
    os << "N=4..1024, worst letter-word error " << worst_letters << ", worst bracket-word magnitude "
       << worst_brackets;
    return {true, os.str()};
}

// 8. Antipode gives the inverse character.
Result antipode_inverse() {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + trial % 3;
        const auto x = testing::random_rational_series(rng, d, 1 + rng() % 6, 5);
        const auto ds = iterated_sums_signature(x, 4).functional;
        if (!(convolve(compose_antipode(ds), ds) == DualFunctional<Rational>::counit(ds.basis()))) {
            return fail("series " + std::to_string(trial));
        }
    }
    return {true, "100 series, W=4"};
}

// 9. Nonnegativity of the [1,1] log coefficient, and a character that is not attained.
Result nonnegativity() {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = testing::random_rational_series(rng, 1, 1 + rng() % 10, 5);
        const Rational value = log_conv(iterated_sums_signature(x, 2).functional).at(W("[1,1]"));
        Rational squares = 0;
        for (std::size_t j = 1; j <= x.steps(); ++j) squares += x.increment(j)[0] * x.increment(j)[0];
        if (value != squares || sgn(value) < 0) return fail("series " + std::to_string(trial) + ": " + str(value));
    }
    // Witness: g = -log DS(x) for x = (0, 1) is an infinitesimal character with
    // <[1,1], g> = -1; exp g is a character whose log has a negative [1,1]
    // coefficient, so it is no DS(x).
    const auto ds = iterated_sums_signature(TimeSeries<Rational>::from_values({{0}, {1}}), 3).functional;
    auto g = log_conv(ds);
    g *= Rational(-1);
    const QuasiShuffleTable table(g.basis());
    for (const auto& entry : table.entries()) {
        if (entry.u == 0 || entry.v == 0) continue;
        Rational s = 0;
        for (const auto& [k, c] : entry.product) s += c * g[k];
        if (s != 0) return fail("witness is not infinitesimal");
    }
    const auto c = exp_conv(g);
    if (g.at(W("[1,1]")) != -1) return fail("witness [1,1] coefficient " + str(g.at(W("[1,1]"))));
    if (!is_character(c)) return fail("exp of witness is not a character");
    if (!(c == compose_antipode(ds))) return fail("exp of witness differs from DS o antipode");
    return {true, "1000 series; witness <[1,1], log c> = -1 < 0 for c = DS(0,1) o antipode"};
}

// 10. Hoffman maps area to discrete area on D.
Result area_morphism() {
    const auto basis = area_space_total_basis(AreaKind::continuous, 2, 4);
    std::size_t pairs = 0;
    for (const auto& phi : basis) {
        for (const auto& psi : basis) {
            if (hoffman_exp(area(phi, psi)) != darea(hoffman_exp(phi), hoffman_exp(psi))) {
                return fail("phi=" + print_polynomial(phi) + " psi=" + print_polynomial(psi));
            }
            ++pairs;
        }
    }
    return {true, std::to_string(basis.size()) + " basis elements, " + std::to_string(pairs) + " pairs"};
}

// 11. D equals the span of the brackets and u([a][b] - [b][a]).
Result span_theorem() {
    const auto d = area_space_total_basis(AreaKind::continuous, 2, 4);
    const auto gens = area_span_generators(2, 4);
    for (const auto& p : d) {
        if (!span_membership(p, gens).member) return fail("D element outside span: " + print_polynomial(p));
    }
    for (const auto& p : gens) {
        if (!span_membership(p, d).member) return fail("generator outside D: " + print_polynomial(p));
    }
    if (reduce_to_basis(d) != reduce_to_basis(gens)) return fail("canonical bases differ");
    return {true, "dim " + std::to_string(d.size()) + " both ways, " + std::to_string(gens.size()) + " generators"};
}

// 12. Dimension tables.
Result dimension_tables() {
    std::string row;
    for (int d = 1; d <= 3; ++d) {
        const auto series = hilbert_series_coeffs(d, 7);
        for (int n = 0; n <= 7; ++n) {
            const mpz_class dim = hilbert_dim(d, n);
            if (dim != series[n]) return fail("series mismatch d=" + std::to_string(d) + " n=" + std::to_string(n));
            if (mpz_class(enumerate_words(d, n).size()) != dim) {
                return fail("enumeration mismatch d=" + std::to_string(d) + " n=" + std::to_string(n));
            }
            if (d == 1) row += (row.empty() ? "" : ",") + dim.get_str();
        }
    }
    if (row != "1,1,2,4,8,16,32,64") return fail("d=1 row " + row);
    return {true, "d<=3, n<=7; d=1 row " + row};
}

// 13. Signatures span the dual at d=2, W=3.
Result spanning_lemma() {
    const auto basis = WordBasis::get(2, 3);
    std::size_t target = 0;
    for (int n = 0; n <= 3; ++n) target += hilbert_dim(2, n).get_ui();
    if (target != basis->size()) return fail("basis size " + std::to_string(basis->size()));
    std::mt19937_64 rng(127);
    RationalMatrix rows;
    std::size_t r = 0;
    while (r < target && rows.size() < 3 * target) {
        const auto x = testing::random_rational_series(rng, 2, 1 + rng() % 6, 5);
        const auto ds = iterated_sums_signature(x, 3).functional;
        std::vector<Rational> row(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) row[i] = ds[i];
        rows.push_back(std::move(row));
        r = rank(rows);
    }
    if (r != target) return fail("rank " + std::to_string(r) + " after " + std::to_string(rows.size()) + " series");
    return {true, "rank " + std::to_string(r) + " reached with " + std::to_string(rows.size()) + " series"};
}

// 14. Parallel evaluation is deterministic.
Result parallel_determinism() {
    std::mt19937_64 rng(131);
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + trial % 3;
        const std::size_t steps = 8 + rng() % 57;
        const auto x = testing::random_rational_series(rng, d, steps, 5);
        const auto direct = iterated_sums_signature(x, 4).functional;
        for (std::size_t chunks : {std::size_t{1}, std::size_t{2}, std::size_t{4}, std::size_t{8}, steps}) {
            if (!(parallel_signature(x, 4, chunks).functional == direct)) {
                return fail("exact series " + std::to_string(trial) + " chunks " + std::to_string(chunks));
            }
        }
        const auto xf = testing::random_float_series(rng, d, steps);
        const auto direct_f = iterated_sums_signature(xf, 4).functional;
        for (std::size_t chunks : {std::size_t{2}, std::size_t{4}, std::size_t{8}, steps}) {
            const auto par = parallel_signature(xf, 4, chunks).functional;
            for (std::size_t i = 0; i < par.size(); ++i) {
                const double scale = std::max(std::fabs(par[i]), std::fabs(direct_f[i]));
                const double rel = scale == 0 ? 0 : std::fabs(par[i] - direct_f[i]) / scale;
                worst = std::max(worst, rel);
                if (rel > 1e-12) {
                    return fail("float series " + std::to_string(trial) + " chunks " + std::to_string(chunks) + " word " +
                                print_word(par.basis()->word(i)) + " rel " + std::to_string(rel));
                }
            }
        }
    }
    std::ostringstream os;
    os << "exact identical for chunks {1,2,4,8,N}; worst float rel diff " << worst;
    return {true, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"quasi-shuffle character identity", quasi_shuffle_identity},
        {"Chen's property", chen_property},
        {"time-warping invariance", time_warping},
        {"Hoffman isomorphism", hoffman_isomorphism},
        {"golden examples", golden_examples},
        {"lifted-path transfer", lifted_path_transfer},
        {"consistency under refinement", consistency},
        {"antipode inverse", antipode_inverse},
        {"nonnegativity and non-attained character", nonnegativity},
        {"area morphism", area_morphism},
        {"span theorem", span_theorem},
        {"dimension tables", dimension_tables},
        {"spanning lemma", spanning_lemma},
        {"parallel determinism", parallel_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!r.pass) ++failures;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (r.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": "
             << r.detail << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
