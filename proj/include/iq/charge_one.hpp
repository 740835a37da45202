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
#include <stdexcept>
#include <string>

#include "iq/quiver.hpp"
#include "iq/rng.hpp"
#include "iq/stability.hpp"

namespace iq {

class AllZero : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotGloballySurjective : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RelationsViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point [a:b:c:d:e:f] of P^5, i.e. the skew matrix
///   [ 0 -a -b -c ]
///   [ a  0 -d -e ]
///   [ b  d  0 -f ]
///   [ c  e  f  0 ]
/// up to a nonzero scalar. Equality is projective.
class SkewForm {
 public:
  /// Throws AllZero.
  explicit SkewForm(std::array<Rational, 6> coords);
  /// Reads (a..f) from below the diagonal. Throws NotSkewSymmetric, ShapeError, AllZero.
  static SkewForm from_matrix(const RationalMatrix& m);

  const std::array<Rational, 6>& coords() const { return c_; }
  RationalMatrix matrix() const;
  /// be - af - dc
  Rational pfaffian() const;
  std::size_t rank() const;
  /// Scaled so the first nonzero coordinate is 1.
  SkewForm normalized() const;
  std::string to_string() const;

  friend bool operator==(const SkewForm& x, const SkewForm& y);

 private:
  std::array<Rational, 6> c_;
};

enum class Quadric { OnQuadric, OffQuadric };
std::string to_string(Quadric q);

/// OnQuadric iff the Pfaffian vanishes (iff rank 2).
Quadric quadric_membership(const SkewForm& s);

/// Gauges the g-rows to the canonical basis and reads the skew form from the
/// f-columns. Throws WrongDim, RelationsViolated, NotGloballySurjective.
SkewForm normal_form(const QuiverRep& r);

/// Representation with g_i = e_i^T and f_j = column j of the skew matrix.
QuiverRep from_p5_point(const SkewForm& s);
QuiverRep from_p5_point(const std::array<Rational, 6>& coords);

enum class Charge1Kind {
  LocallyFreeInstanton,
  NonLocallyFreeInstanton,
  PerverseDual,
  NotStableHere,
  EmptyRegion,
  StrictlySemistable,
};

enum class Charge1Region { Q4belowWall, Q4aboveWall, Wall, OutsideQ4 };

std::string to_string(Charge1Kind k);
std::string to_string(Charge1Region r);

/// Region of (alpha, gamma): open fourth quadrant split by gamma == -alpha.
Charge1Region region_of(const Rational& alpha, const Rational& gamma);

struct Charge1Class {
  Charge1Kind kind = Charge1Kind::EmptyRegion;
  Charge1Region region = Charge1Region::OutsideQ4;
  StabilityVerdict verdict;
  std::size_t rank_m = 0;  // rank of the f-columns
  std::size_t rank_n = 0;  // rank of the g-rows
};

/// Kind follows the exact verdict: stable reps are named by which of M, N
/// has full rank, semistable-only reps are StrictlySemistable, unstable ones
/// NotStableHere, and every theta off the open fourth quadrant gives
/// EmptyRegion. Throws WrongDim.
Charge1Class classify(const QuiverRep& r, const StabilityParam& theta);

/// 4 x 4 matrix whose columns are the f-maps (u_0..u_3).
RationalMatrix m_matrix(const QuiverRep& r);
/// 4 x 4 matrix whose rows are the g-maps (v_0..v_3).
RationalMatrix n_matrix(const QuiverRep& r);

// ---------------------------------------------------------------------------
// Seeded samples of the four degeneracy classes

enum class Charge1Sample {
  LocallyFree,              // Pfaffian != 0
  GloballySurjectiveRank2,  // rank N = 4, rank M = 2
  GloballyInjectiveRank2,   // rank M = 4, rank N = 2
  DoublyDegenerate,         // rank M = rank N = 2
};

std::string to_string(Charge1Sample c);

/// Random representation of the class, in normal form.
QuiverRep sample_charge1(Charge1Sample c, Rng& rng);

/// Random gauge (s, A, t) with s, t nonzero scalars and A invertible.
QuiverRep random_gauge(const QuiverRep& r, Rng& rng);

/// Random skew form with nonzero Pfaffian.
SkewForm random_skew_form_off_quadric(Rng& rng);
/// Random decomposable form x ^ y with x, y independent.
SkewForm random_skew_form_on_quadric(Rng& rng);

}  // namespace iq
