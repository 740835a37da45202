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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "iq/matrix.hpp"
#include "iq/polynomial.hpp"

namespace iq {

/// Matrix of linear forms x0*C0 + x1*C1 + x2*C2 + x3*C3 on P^3.
class LinearPencil {
 public:
  LinearPencil() = default;
  explicit LinearPencil(std::array<RationalMatrix, 4> coeff);
  static LinearPencil zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RationalMatrix& coeff(std::size_t i) const { return coeff_.at(i); }
  const std::array<RationalMatrix, 4>& coeffs() const { return coeff_; }

  /// sum_i lambda_i * coeff[i]; lambda must have 4 entries.
  RationalMatrix evaluate(std::span<const Rational> lambda) const;
  LinearPencil transpose() const;

  friend bool operator==(const LinearPencil&, const LinearPencil&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::array<RationalMatrix, 4> coeff_;
};

enum class Answer { Yes, No, ProbablyYes };

/// Evidence for a No verdict.
///  - RankDropPoint: lambda at which the evaluated matrix loses rank.
///  - LineMinorGcd: along lambda(s) = base + s*direction every maximal minor
///    is divisible by `locus` (a nonconstant polynomial with no rational root
///    found), so the fail locus meets that line at a complex point.
///  - KernelLineMinorGcd: same, but the line lives in the kernel space P^{cols-1}
///    and the minors are those of B(mu) = [C0 mu | C1 mu | C2 mu | C3 mu].
struct PencilCertificate {
  enum class Kind { RankDropPoint, LineMinorGcd, KernelLineMinorGcd };
  Kind kind = Kind::RankDropPoint;
  RationalVector point;
  RationalVector line_base;
  RationalVector line_direction;
  Polynomial locus;
};

struct PencilVerdict {
  Answer answer = Answer::Yes;
  unsigned rounds = 0;  // probes used; meaningful for ProbablyYes
  std::optional<PencilCertificate> certificate;
};

enum class PencilMode { Injective, Surjective };

std::string to_string(Answer a);
std::string to_string(const PencilVerdict& v);

inline constexpr unsigned kDefaultRankSamples = 16;
inline constexpr unsigned kDefaultProbeLines = 8;

/// Max rank over `samples` seeded random lambda: a certified lower bound of
/// the generic rank.
std::size_t generic_rank(const LinearPencil& p, std::uint64_t seed, unsigned samples = kDefaultRankSamples);

/// Does p(lambda) have full column rank for every lambda != 0?
/// Exact for cols <= 2. For cols >= 3 a No is exact (certificate) and
/// otherwise the answer is ProbablyYes(rounds). Throws ShapeError if rows < cols.
PencilVerdict is_injective_everywhere(const LinearPencil& p, std::uint64_t seed = 0,
                                      unsigned rounds = kDefaultProbeLines);

/// Surjectivity of p(lambda) for every lambda != 0, via the transposed pencil.
PencilVerdict is_surjective_everywhere(const LinearPencil& p, std::uint64_t seed = 0,
                                       unsigned rounds = kDefaultProbeLines);

/// Does the locus where p(lambda) fails to be injective (resp. surjective)
/// have codimension >= 2 in P^3?
///
/// For one-column (one-row in surjective mode) pencils the answer comes from
/// the rank of the stacked coefficient matrix. Otherwise the pencil is
/// restricted to seeded random lines; the fail locus meets a line iff the
/// gcd of the restricted maximal minors is nonconstant (or the point at
/// infinity drops rank). Any surface in P^3 meets every line, so a single
/// miss proves codimension >= 2 (Yes). If every probe line is hit the
/// verdict is No with the first hit as certificate.
PencilVerdict fail_locus_codim_at_least_2(const LinearPencil& p, PencilMode mode, std::uint64_t seed = 0,
                                          unsigned lines = kDefaultProbeLines);

/// Re-checks a No certificate against the pencil in injective form (pass
/// p.transpose() for surjectivity questions).
bool verify_certificate(const LinearPencil& injective_form, const PencilCertificate& cert);

/// gcd of all k x k minors of (m0 + s*m1), k = m0.cols(); zero polynomial
/// when every minor vanishes identically.
Polynomial maximal_minor_gcd(const RationalMatrix& m0, const RationalMatrix& m1);

}  // namespace iq
