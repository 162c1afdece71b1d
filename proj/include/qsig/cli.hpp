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

#ifndef QSIG_CLI_HPP
#define QSIG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsig/signature.hpp"

namespace qsig::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

/// Default truncation weight, overridden by QSIG_MAX_WEIGHT when set.
int default_max_weight();

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON document for a signature:
/// {"d", "n", "m", "max_weight", "coefficients": {word: value}}. Exact values are
/// emitted as strings. When `words` is nonempty only those words (plus e) appear.
template <Scalar S>
nlohmann::ordered_json signature_json(const Signature<S>& sig, const std::vector<Word>& words = {});

/// Loads a functional written by signature_json. All words up to max_weight must
/// be present.
DualFunctional<Rational> exact_functional_from_json(const nlohmann::json& doc);
DualFunctional<double> float_functional_from_json(const nlohmann::json& doc);

}  // namespace qsig::cli

#endif  // QSIG_CLI_HPP
