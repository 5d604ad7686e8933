/*
 * Copyright 2026 The bentkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bentkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NotBentError : Error {
    using Error::Error;
};

struct NotAPermutationError : Error {
    using Error::Error;
};

/// A constructive precondition of one of the secondary constructions failed.
/// The message names the hypothesis; the witness (when meaningful) is kept as
/// a basis list so callers can report it.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what,
                               std::vector<std::uint32_t> witness_basis = {})
        : Error(what), witness(std::move(witness_basis)) {}
    std::vector<std::uint32_t> witness;
};

struct InvalidSpectrumError : Error {
    using Error::Error;
};

struct DependentDirectionsError : Error {
    using Error::Error;
};

struct SubspaceNotVanishingError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t at_line, std::size_t at_column)
        : Error(what + " (line " + std::to_string(at_line) + ", column " +
                std::to_string(at_column) + ")"),
          line(at_line),
          column(at_column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace bentkit
