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

#ifndef QSIG_ERRORS_HPP
#define QSIG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsig {

/// Malformed text input. offset is the byte position where parsing stopped.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A letter outside 1..d, or a word beyond a functional's truncation weight.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An operation was called outside its domain (empty word for a half-shuffle,
/// mismatched alphabets, non-abutting windows, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace qsig

#endif  // QSIG_ERRORS_HPP
