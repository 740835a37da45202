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

#include "iq/rng.hpp"

#include <limits>
#include <stdexcept>

namespace iq {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::small_rational() {
  const auto num = uniform(-9, 9);
  const auto den = uniform(1, 3);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

Rational Rng::small_integer(std::int64_t bound) {
  return Rational(static_cast<long>(uniform(-bound, bound)));
}

RationalVector Rng::random_vector(std::size_t n, std::int64_t bound) {
  RationalVector v(n);
  for (auto& x : v) x = small_integer(bound);
  return v;
}

RationalMatrix Rng::random_matrix(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rational();
  return m;
}

RationalMatrix Rng::random_invertible(std::size_t n) {
  for (;;) {
    auto m = random_matrix(n, n);
    if (rank(m) == n) return m;
  }
}

std::uint64_t Rng::fork() {
  std::uint64_t z = next() + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace iq
