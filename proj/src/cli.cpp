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

#include "qsig/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qsig/area.hpp"
#include "qsig/csv.hpp"
#include "qsig/hoffman.hpp"
#include "qsig/hopf.hpp"
#include "qsig/qsym.hpp"

namespace qsig::cli {

int default_max_weight() {
    if (const char* env = std::getenv("QSIG_MAX_WEIGHT")) {
        try {
            const int w = std::stoi(env);
            if (w >= 0) return w;
        } catch (const std::exception&) {
        }
        throw DomainError(std::string("QSIG_MAX_WEIGHT must be a nonnegative integer, got \"") + env + "\"");
    }
    return 3;
}

namespace {

template <Scalar S>
nlohmann::ordered_json scalar_json(const S& v) {
    if constexpr (ScalarTraits<S>::exact) {
        return to_string(v);
    } else {
        return v;
    }
}

template <Scalar S>
std::string scalar_text(const S& v) {
    return to_string(v);
}

template <Scalar S>
bool same_value(const S& a, const S& b) {
    if constexpr (ScalarTraits<S>::exact) {
        return a == b;
    } else {
        return nearly_equal(a, b, 1e-9, 1e-12);
    }
}

// First word where two functionals over the same basis disagree.
template <Scalar S>
std::optional<std::size_t> first_difference(const DualFunctional<S>& a, const DualFunctional<S>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!same_value(a[i], b[i])) return i;
    }
    return std::nullopt;
}

struct SeriesOptions {
    std::string path;
    int max_weight = -1;
    bool exact = false;
    std::optional<std::size_t> from;
    std::optional<std::size_t> to;
    std::string words;
    std::size_t chunks = 1;
    std::string signature_path;
};

template <Scalar S>
CsvTable<S> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    if constexpr (ScalarTraits<S>::exact) {
        return read_csv_exact(in);
    } else {
        return read_csv_float(in);
    }
}

nlohmann::ordered_json empty_signature_json(int d, std::size_t n, std::size_t m, int max_weight, bool exact) {
    nlohmann::ordered_json doc;
    doc["d"] = d;
    doc["n"] = n;
    doc["m"] = m;
    doc["max_weight"] = max_weight;
    doc["coefficients"] = nlohmann::ordered_json::object();
    if (exact) {
        doc["coefficients"]["e"] = "1";
    } else {
        doc["coefficients"]["e"] = 1.0;
    }
    return doc;
}

template <Scalar S>
int run_sig(const SeriesOptions& opt, std::ostream& out) {
    const CsvTable<S> table = load_table<S>(opt.path);
    const int w = opt.max_weight;
    if (table.rows.empty()) {
        const std::size_t n = opt.from.value_or(0);
        const std::size_t m = opt.to.value_or(0);
        if (n > m) throw DomainError("signature window needs n <= m");
        out << empty_signature_json(table.columns, n, m, w, ScalarTraits<S>::exact).dump(2) << "\n";
        return kPass;
    }
    const auto x = TimeSeries<S>::from_values(table.rows);
    const std::size_t n = opt.from.value_or(0);
    const std::size_t m = opt.to.value_or(x.steps());
    const auto words = parse_word_list(opt.words, x.dimension());
    for (const auto& word : words) {
        if (word.weight() > w) {
            throw RangeError("word " + print_word(word) + " has weight " + std::to_string(word.weight()) +
                             " beyond truncation " + std::to_string(w));
        }
    }
    Signature<S> sig = [&] {
        if (n == 0 && m == x.steps() && opt.chunks > 1) return parallel_signature(x, w, opt.chunks);
        if (opt.chunks > 1) {
            // Restrict to the window, then chunk it.
            std::vector<Point<S>> values;
            for (std::size_t j = n; j <= m; ++j) values.push_back(x.point(j));
            auto windowed = parallel_signature(TimeSeries<S>::from_values(values), w, opt.chunks);
            windowed.from = n;
            windowed.to = m;
            return windowed;
        }
        return iterated_sums_signature(x, n, m, w);
    }();
    out << signature_json(sig, words).dump(2) << "\n";
    return kPass;
}

template <Scalar S>
int run_check(const std::string& property, const SeriesOptions& opt, std::ostream& out) {
    const CsvTable<S> table = load_table<S>(opt.path);
    if (table.rows.empty()) {
        out << "PASS " << property << " (empty series)\n";
        return kPass;
    }
    const auto x = TimeSeries<S>::from_values(table.rows);
    const int w = opt.max_weight;
    const auto full = iterated_sums_signature(x, w);
    const auto& basis = *full.functional.basis();
    std::ostringstream summary;
    summary << "(d=" << x.dimension() << ", N=" << x.steps() << ", W=" << w << ")";

    if (property == "invariance") {
        for (std::size_t n = 1; n <= x.steps(); ++n) {
            const auto warped = iterated_sums_signature(time_warp(x, n), w);
            if (auto i = first_difference(full.functional, warped.functional)) {
                out << "FAIL invariance " << summary.str() << ": tau_" << n << " changes <" << print_word(basis.word(*i))
                    << ">: " << scalar_text(full.functional[*i]) << " vs " << scalar_text(warped.functional[*i]) << "\n";
                return kViolation;
            }
        }
    } else if (property == "character") {
        if (auto witness = find_character_violation(full.functional)) {
            out << "FAIL character " << summary.str() << ": u=" << print_word(witness->first)
                << " v=" << print_word(witness->second) << "\n";
            return kViolation;
        }
    } else if (property == "chen") {
        for (std::size_t k = 0; k <= x.steps(); ++k) {
            const auto merged = chen_merge(iterated_sums_signature(x, 0, k, w), iterated_sums_signature(x, k, x.steps(), w));
            if (auto i = first_difference(full.functional, merged.functional)) {
                out << "FAIL chen " << summary.str() << ": split at " << k << " differs at <"
                    << print_word(basis.word(*i)) << ">\n";
                return kViolation;
            }
        }
    } else if (property == "hoffman-transfer") {
        const auto integrals = iterated_integrals_signature_pl(x, w);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const S lhs = pairing(hoffman_exp(basis.word(i)), full.functional);
            if (!same_value(lhs, integrals[i])) {
                out << "FAIL hoffman-transfer " << summary.str() << ": <Phi_H(" << print_word(basis.word(i))
                    << "), DS> = " << scalar_text(lhs) << " but <w, S> = " << scalar_text(integrals[i]) << "\n";
                return kViolation;
            }
        }
    } else {
        throw DomainError("unknown property " + property);
    }
    out << "PASS " << property << " " << summary.str() << "\n";
    return kPass;
}

template <Scalar S>
int check_signature_file(const DualFunctional<S>& c, std::ostream& out) {
    if (auto witness = find_character_violation(c)) {
        const Polynomial prod = quasi_shuffle(witness->first, witness->second);
        out << "FAIL character (signature file, d=" << c.alphabet() << ", W=" << c.max_weight()
            << "): u=" << print_word(witness->first) << " v=" << print_word(witness->second)
            << ": <u*v,c> = " << scalar_text(pairing(prod, c))
            << ", <u,c><v,c> = " << scalar_text(S(c.at(witness->first) * c.at(witness->second))) << "\n";
        return kViolation;
    }
    out << "PASS character (signature file, d=" << c.alphabet() << ", W=" << c.max_weight() << ")\n";
    return kPass;
}

int run_dims(int d, int max_n, std::ostream& out) {
    if (d < 1 || max_n < 0) throw DomainError("dims needs --d >= 1 and --max-n >= 0");
    const auto series = hilbert_series_coeffs(d, max_n);
    std::vector<mpz_class> dims;
    for (int n = 0; n <= max_n; ++n) dims.push_back(hilbert_dim(d, n));

    std::vector<std::string> row_n, row_dim;
    std::size_t width = 1;
    for (int n = 0; n <= max_n; ++n) {
        row_n.push_back(std::to_string(n));
        row_dim.push_back(dims[n].get_str());
        width = std::max({width, row_n.back().size(), row_dim.back().size()});
    }
    auto print_row = [&](const char* label, const std::vector<std::string>& cells) {
        out << label;
        for (const auto& c : cells) out << ' ' << std::string(width - c.size(), ' ') << c;
        out << "\n";
    };
    print_row("n:  ", row_n);
    print_row("dim:", row_dim);

    bool series_ok = true;
    bool enum_ok = true;
    int enumerated_to = -1;
    constexpr long kEnumerationLimit = 200000;
    for (int n = 0; n <= max_n; ++n) {
        series_ok = series_ok && series[n] == dims[n];
        if (dims[n] > kEnumerationLimit) break;
        enum_ok = enum_ok && mpz_class(enumerate_words(d, n).size()) == dims[n];
        enumerated_to = n;
    }
    out << "cross-check: series=" << (series_ok ? "ok" : "MISMATCH") << " enumeration="
        << (enum_ok ? "ok" : "MISMATCH");
    if (enumerated_to < max_n) out << " (enumerated n<=" << enumerated_to << ")";
    out << "\n";
    return series_ok && enum_ok ? kPass : kViolation;
}

int parse_alphabet(const std::vector<std::string>& texts, int d) {
    if (d > 0) return d;
    int m = 1;
    for (const auto& t : texts) m = std::max(m, parse_word(t).max_letter());
    return m;
}

}  // namespace

template <Scalar S>
nlohmann::ordered_json signature_json(const Signature<S>& sig, const std::vector<Word>& words) {
    nlohmann::ordered_json doc;
    doc["d"] = sig.alphabet();
    doc["n"] = sig.from;
    doc["m"] = sig.to;
    doc["max_weight"] = sig.max_weight();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    const auto& basis = *sig.functional.basis();
    if (words.empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[print_word(basis.word(i))] = scalar_json(sig.functional[i]);
    } else {
        std::vector<std::size_t> picked{0};
        for (const auto& w : words) picked.push_back(basis.index(w));
        std::sort(picked.begin(), picked.end());
        picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
        for (std::size_t i : picked) coeffs[print_word(basis.word(i))] = scalar_json(sig.functional[i]);
    }
    doc["coefficients"] = std::move(coeffs);
    return doc;
}

template nlohmann::ordered_json signature_json(const Signature<Rational>&, const std::vector<Word>&);
template nlohmann::ordered_json signature_json(const Signature<double>&, const std::vector<Word>&);

namespace {

template <Scalar S>
DualFunctional<S> functional_from_json(const nlohmann::json& doc) {
    const int d = doc.at("d").get<int>();
    const int w = doc.at("max_weight").get<int>();
    DualFunctional<S> c(WordBasis::get(d, w));
    const auto& coeffs = doc.at("coefficients");
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string key = print_word(c.basis()->word(i));
        if (!coeffs.contains(key)) throw DomainError("signature file lacks word " + key);
        const auto& v = coeffs.at(key);
        if constexpr (ScalarTraits<S>::exact) {
            if (!v.is_string()) throw DomainError("exact signature value for " + key + " must be a string");
            c[i] = parse_rational(v.get<std::string>());
        } else {
            c[i] = v.is_string() ? parse_rational(v.get<std::string>()).get_d() : v.get<double>();
        }
    }
    for (const auto& [key, value] : coeffs.items()) c.basis()->index(parse_word(key, d));
    return c;
}

}  // namespace

DualFunctional<Rational> exact_functional_from_json(const nlohmann::json& doc) {
    return functional_from_json<Rational>(doc);
}

DualFunctional<double> float_functional_from_json(const nlohmann::json& doc) {
    return functional_from_json<double>(doc);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quasi-shuffle algebra and iterated-sums signatures", "qsig"};
    app.require_subcommand(1);

    SeriesOptions sig_opt;
    auto* sig = app.add_subcommand("sig", "iterated-sums signature of a CSV time series, as JSON");
    sig->add_option("input", sig_opt.path, "CSV file; first data row is x_0")->required();
    sig->add_option("--max-weight", sig_opt.max_weight, "truncation weight (default 3 or $QSIG_MAX_WEIGHT)");
    sig->add_option("--from", sig_opt.from, "window start n");
    sig->add_option("--to", sig_opt.to, "window end m");
    sig->add_flag("--exact", sig_opt.exact, "read integer and p/q cells as exact rationals");
    sig->add_option("--words", sig_opt.words, "restrict output to these words");
    sig->add_option("--chunks", sig_opt.chunks, "number of parallel chunks merged by Chen's property")
        ->check(CLI::PositiveNumber);

    std::string qsh_op;
    std::vector<std::string> qsh_words;
    int qsh_d = 0;
    auto* qsh = app.add_subcommand("qsh", "quasi-shuffle Hopf algebra calculator");
    qsh->add_option("op", qsh_op, "prod | shuffle | antipode | coproduct")
        ->required()
        ->check(CLI::IsMember({"prod", "shuffle", "antipode", "coproduct"}));
    // Words go through remaining() so CLI11 does not split "[a,b]" as a list.
    qsh->allow_extras();
    qsh->footer("Words follow the operation, e.g. qsig qsh prod \"[1][2,3]\" \"[2]\"; e is the empty word.");
    qsh->add_option("--d", qsh_d, "alphabet size (default: largest letter used)");

    std::string hoff_op, hoff_word;
    auto* hoff = app.add_subcommand("hoffman", "Hoffman exponential and logarithm");
    hoff->add_option("op", hoff_op, "exp | log")->required()->check(CLI::IsMember({"exp", "log"}));
    hoff->add_option("word", hoff_word)->required();

    int dims_d = 1, dims_n = 0;
    auto* dims = app.add_subcommand("dims", "graded dimensions of the quasi-shuffle algebra");
    dims->add_option("--d", dims_d, "alphabet size")->required()->check(CLI::PositiveNumber);
    dims->add_option("--max-n", dims_n, "largest weight")->required()->check(CLI::NonNegativeNumber);

    std::string check_prop;
    SeriesOptions check_opt;
    auto* check = app.add_subcommand("check", "verify a signature identity on data");
    check->add_option("property", check_prop, "invariance | character | chen | hoffman-transfer")
        ->required()
        ->check(CLI::IsMember({"invariance", "character", "chen", "hoffman-transfer"}));
    check->add_option("input", check_opt.path, "CSV file");
    check->add_option("--signature", check_opt.signature_path, "signature JSON file (character only)");
    check->add_option("--max-weight", check_opt.max_weight, "truncation weight");
    check->add_flag("--exact", check_opt.exact, "exact rational arithmetic");

    std::string area_u, area_v;
    bool area_discrete = false;
    auto* area_cmd = app.add_subcommand("area", "area or discrete area of two words");
    area_cmd->add_option("u", area_u)->required();
    area_cmd->add_option("v", area_v)->required();
    area_cmd->add_flag("--discrete", area_discrete, "use the quasi-shuffle half-shuffle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (sig->parsed()) {
            if (sig_opt.max_weight < 0) sig_opt.max_weight = default_max_weight();
            return sig_opt.exact ? run_sig<Rational>(sig_opt, out) : run_sig<double>(sig_opt, out);
        }
        if (qsh->parsed()) {
            qsh_words = qsh->remaining();
            for (const auto& t : qsh_words) {
                if (t.size() > 1 && t[0] == '-' && t[1] == '-') {
                    err << "usage error: unknown option " << t << "\n" << qsh->help();
                    return kUsage;
                }
            }
            if (qsh_words.empty()) {
                err << "usage error: qsh " << qsh_op << " needs at least one word\n" << qsh->help();
                return kUsage;
            }
            const int d = parse_alphabet(qsh_words, qsh_d);
            std::vector<Word> ws;
            for (const auto& t : qsh_words) ws.push_back(parse_word(t, d));
            if (qsh_op == "antipode" || qsh_op == "coproduct") {
                if (ws.size() != 1) throw DomainError(qsh_op + " takes exactly one word");
                if (qsh_op == "antipode") {
                    out << print_polynomial(antipode(ws[0])) << "\n";
                } else {
                    out << print_tensor(coproduct(ws[0])) << "\n";
                }
                return kPass;
            }
            if (ws.size() < 2) throw DomainError(qsh_op + " takes at least two words");
            Polynomial acc(ws[0]);
            for (std::size_t i = 1; i < ws.size(); ++i) {
                acc = qsh_op == "prod" ? quasi_shuffle(acc, Polynomial(ws[i])) : shuffle(acc, Polynomial(ws[i]));
            }
            out << print_polynomial(acc) << "\n";
            return kPass;
        }
        if (hoff->parsed()) {
            const Word w = parse_word(hoff_word);
            out << print_polynomial(hoff_op == "exp" ? hoffman_exp(w) : hoffman_log(w)) << "\n";
            return kPass;
        }
        if (dims->parsed()) return run_dims(dims_d, dims_n, out);
        if (check->parsed()) {
            if (check_opt.max_weight < 0) check_opt.max_weight = default_max_weight();
            if (!check_opt.signature_path.empty()) {
                if (check_prop != "character") throw DomainError("--signature only applies to the character check");
                std::ifstream in(check_opt.signature_path);
                if (!in) throw DomainError("cannot read " + check_opt.signature_path);
                const auto doc = nlohmann::json::parse(in);
                bool exact = true;
                for (const auto& [k, v] : doc.at("coefficients").items()) exact = exact && v.is_string();
                return exact ? check_signature_file(exact_functional_from_json(doc), out)
                             : check_signature_file(float_functional_from_json(doc), out);
            }
            if (check_opt.path.empty()) throw DomainError("check needs a CSV input or --signature");
            return check_opt.exact ? run_check<Rational>(check_prop, check_opt, out)
                                   : run_check<double>(check_prop, check_opt, out);
        }
        if (area_cmd->parsed()) {
            const Word u = parse_word(area_u);
            const Word v = parse_word(area_v);
            out << print_polynomial(area_discrete ? darea(u, v) : area(u, v)) << "\n";
            return kPass;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qsig::cli
