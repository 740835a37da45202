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

#include <cstdint>
#include <random>

#include "iq/matrix.hpp"
#include "iq/rational.hpp"

namespace iq {

/// Seeded PRNG whose draws are identical on every platform: only the raw
/// mt19937_64 stream (fully specified by the standard) is consumed, never the
/// implementation-defined std::*_distribution adaptors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Numerator in [-9, 9], denominator in {1, 2, 3}.
  Rational small_rational();
  /// Integer in [-bound, bound].
  Rational small_integer(std::int64_t bound = 9);

  RationalVector random_vector(std::size_t n, std::int64_t bound = 9);
  RationalMatrix random_matrix(std::size_t rows, std::size_t cols);
  /// Random invertible matrix with small rational entries.
  RationalMatrix random_invertible(std::size_t n);

  /// Derives an independent child seed (splitmix64 of the next draw).
  std::uint64_t fork();

 private:
  std::mt19937_64 engine_;
};

}  // namespace iq
