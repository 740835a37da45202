/*
 * Copyright 2026 The instanton-quiver Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

#include "iq/monad.hpp"
#include "iq/quiver.hpp"

namespace iq {

/// Malformed QREP/MONAD text. line() is 1-based; for truncated input it is
/// one past the last line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class FileKind { Qrep, Monad, Unknown };

/// Kind named by the first line that is neither blank nor a comment.
FileKind detect_kind(std::string_view text);

/// QREP v1:
///   QREP <a> <b> <c>
///   F0 .. F3   each followed by b rows of a rationals
///   G0 .. G3   each followed by c rows of b rationals
/// Rationals are `p` or `p/q`. Lines whose first non-blank character is `#`
/// are comments. Rows of width zero are omitted.
std::string write_qrep(const QuiverRep& r);
QuiverRep read_qrep(std::string_view text);

/// MONAD v1:
///   MONAD <n>
///   A0 .. A3   each followed by 2n+2 rows of n rationals
///   B0 .. B3   each followed by n rows of 2n+2 rationals
std::string write_monad(const Monad& m);
Monad read_monad(std::string_view text);

}  // namespace iq
