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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iq/quiver.hpp"
#include "iq/rational.hpp"

namespace iq {

/// theta = (alpha, -(alpha + gamma) n / (2n + 2), gamma) for dimension vector
/// (n, 2n+2, n).
struct StabilityParam {
  Rational alpha;
  Rational gamma;
  std::size_t charge = 1;

  Rational middle() const;
  DimVector full_dim() const { return {charge, 2 * charge + 2, charge}; }
};

Rational theta_dot(const StabilityParam& theta, const DimVector& s);

struct StabilityVerdict {
  enum class Kind { Stable, SemistableOnly, Unstable };
  Kind kind = Kind::Stable;
  /// Unstable: a subrep dimension vector with theta . s > 0 (the maximizer).
  std::optional<DimVector> certificate;
  /// max theta . s over the subrep dimension vectors considered.
  Rational max_value;
};

std::string to_string(StabilityVerdict::Kind k);

/// Verdict from a set of proper nonzero subrep dimension vectors.
StabilityVerdict verdict_from_dimvectors(const std::set<DimVector>& subreps, const StabilityParam& theta);

/// Exact King (semi)stability of a (1,4,1) representation. Throws WrongDim if
/// the representation or theta is not of charge 1.
StabilityVerdict is_stable_charge1(const QuiverRep& r, const StabilityParam& theta);

// ---------------------------------------------------------------------------
// Rays and sectors of the (alpha, gamma)-plane

/// Ray from the origin with primitive integer direction.
struct Ray {
  Rational alpha;
  Rational gamma;

  /// Primitive integer direction of (alpha, gamma) != 0.
  static Ray through(const Rational& alpha, const Rational& gamma);
  std::string to_string() const;
  /// Strictly inside the open fourth quadrant (alpha > 0, gamma < 0).
  bool in_open_q4() const { return alpha.sign() > 0 && gamma.sign() < 0; }

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Counterclockwise angle order on [0, 2 pi), measured from the +alpha axis.
bool angle_less(const Ray& a, const Ray& b);

struct Sector {
  Ray from;  // counterclockwise from `from` to `to`
  Ray to;
};

struct BoundaryRay {
  enum class Status { StrictlyUnstable, SemistableOnly };
  Ray ray;
  Status status = Status::StrictlyUnstable;
};

/// Open set of (alpha, gamma) where a representation is stable: a union of
/// open sectors plus any rays strictly between merged sectors.
struct StabilityRegion {
  bool whole_plane = false;
  std::vector<Sector> sectors;
  std::vector<BoundaryRay> boundary;

  bool empty() const { return !whole_plane && sectors.empty(); }
  bool contains(const Rational& alpha, const Rational& gamma) const;
};

/// Region where theta . s < 0 for every s in `subreps`, at charge n.
StabilityRegion stability_region(const std::set<DimVector>& subreps, std::size_t n);

StabilityRegion stability_region_charge1(const QuiverRep& r);

// ---------------------------------------------------------------------------
// Necessary conditions for charge n

/// Dimension vectors in [0,n] x [0,2n+2] x [0,n], proper and nonzero, with
///   s_-1 + 1 <= s_0       when s_-1 >= 1
///   s_0 - s_1 <= n - 1    when s_1 < n
///   s_0 <= 4 s_1
///   s_1 >= 1
std::vector<DimVector> candidate_dimvectors(std::size_t n);

struct ThetaEpsReport {
  bool ok = true;
  std::optional<DimVector> counterexample;  // first s with theta_eps . s >= 0
  Rational counterexample_value;
  Rational max_value;  // max theta_eps . s over the candidates
};

/// theta_eps = (eps, (1 - eps) n / (2n + 2), -1): checks theta_eps . s < 0 on
/// every candidate dimension vector. Requires 0 < eps < 1.
ThetaEpsReport verify_theta_eps(std::size_t n, const Rational& eps);
ThetaEpsReport verify_theta_eps_charge2(const Rational& eps);

/// Necessary-condition analysis for any charge. A sampled subrep with
/// theta . s > 0 certifies instability. Otherwise the result only reports that
/// no destabilizer was found and whether theta is negative on every candidate
/// dimension vector.
struct HeuristicStability {
  enum class Kind { CertifiedUnstable, NoDestabilizerFound };
  Kind kind = Kind::NoDestabilizerFound;
  std::optional<SubrepWitness> certificate;
  Rational max_value;  // over the sampled subreps
  std::size_t subreps_examined = 0;
  bool negative_on_candidates = false;
  std::optional<DimVector> candidate_violation;
};

HeuristicStability heuristic_stability(const QuiverRep& r, const StabilityParam& theta,
                                       const SubrepSearch& search = {});

// ---------------------------------------------------------------------------
// Walls and chambers

struct Wall {
  Ray direction;  // normalized: alpha > 0, or alpha == 0 and gamma < 0
  std::vector<DimVector> generators;
};

struct Chamber {
  Sector sector;
  Rational sample_alpha;
  Rational sample_gamma;
};

/// Candidate walls (sorted by angle in [-pi/2, pi/2)) and the chambers they
/// cut out of the open fourth quadrant.
struct WallArrangement {
  std::size_t charge = 1;
  std::vector<Wall> walls;
  std::vector<Chamber> chambers;
};

/// For n == 1 the generators are every proper nonzero vector of the
/// 2 x 5 x 2 grid (each is realized by some representation, e.g. the zero
/// one); for n >= 2 they are candidate_dimvectors(n).
WallArrangement wall_arrangement(std::size_t n);

/// Rays strictly inside the open fourth quadrant that bound the stability
/// region of some sampled representation, sorted by angle and deduplicated.
std::vector<Ray> effective_walls_charge1(const std::vector<QuiverRep>& sample);

}  // namespace iq
