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
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "iq/matrix.hpp"
#include "iq/pencil.hpp"

namespace iq {

/// Dimension vector (dim V_-1, dim V_0, dim V_1).
struct DimVector {
  std::size_t s_minus1 = 0;
  std::size_t s0 = 0;
  std::size_t s1 = 0;

  bool is_zero() const { return s_minus1 == 0 && s0 == 0 && s1 == 0; }
  bool fits_in(const DimVector& o) const { return s_minus1 <= o.s_minus1 && s0 <= o.s0 && s1 <= o.s1; }
  std::string to_string() const;

  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

/// Representation of the quiver  V_-1 ==(f_0..f_3)==> V_0 ==(g_0..g_3)==> V_1
/// with f_i : V_-1 -> V_0 (b x a) and g_i : V_0 -> V_1 (c x b). The relations
/// g_i f_j + g_j f_i = 0 are not enforced here; see check_relations.
class QuiverRep {
 public:
  QuiverRep() = default;
  QuiverRep(DimVector dim, std::array<RationalMatrix, 4> f, std::array<RationalMatrix, 4> g);

  static QuiverRep zero(DimVector dim);

  const DimVector& dim() const { return dim_; }
  const RationalMatrix& f(std::size_t i) const { return f_.at(i); }
  const RationalMatrix& g(std::size_t i) const { return g_.at(i); }
  const std::array<RationalMatrix, 4>& fs() const { return f_; }
  const std::array<RationalMatrix, 4>& gs() const { return g_; }

  /// lambda -> sum lambda_i f_i  (b x a pencil)
  LinearPencil eta_pencil() const { return LinearPencil(f_); }
  /// lambda -> sum lambda_i g_i  (c x b pencil)
  LinearPencil phi_pencil() const { return LinearPencil(g_); }

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

 private:
  DimVector dim_;
  std::array<RationalMatrix, 4> f_;
  std::array<RationalMatrix, 4> g_;
};

struct RelationCheck {
  bool holds = true;
  std::size_t i = 0;  // first failing pair, i <= j
  std::size_t j = 0;
  RationalMatrix residual;
};

/// Checks g_i f_j + g_j f_i == 0 for all 0 <= i <= j <= 3.
RelationCheck check_relations(const QuiverRep& r);

class SingularGauge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f_i -> g0 f_i g_minus1^-1,  g_i -> g1 g_i g0^-1.
QuiverRep gauge_act(const QuiverRep& r, const RationalMatrix& g_minus1, const RationalMatrix& g0,
                    const RationalMatrix& g1);

/// Dual representation: dims (c, b, a), f'_i = g_i^T, g'_i = f_i^T.
QuiverRep dual(const QuiverRep& r);

/// Dimension of Hom(r1, r2): triples (h_-1, h_0, h_1) with
/// f2_i h_-1 = h_0 f1_i and g2_i h_0 = h_1 g1_i.
std::size_t hom_space_dim(const QuiverRep& r1, const QuiverRep& r2);

// ---------------------------------------------------------------------------
// Subrepresentations

/// Bases (as columns) of U in V_-1, V in V_0, W in V_1.
struct SubrepWitness {
  DimVector dim;
  RationalMatrix basis_u;
  RationalMatrix basis_v;
  RationalMatrix basis_w;
};

/// Exact check that the witness spans a subrepresentation of r.
bool verify_witness(const QuiverRep& r, const SubrepWitness& w);

/// span{f_i(U)}
RationalMatrix push_forward(const QuiverRep& r, const RationalMatrix& u_basis);
/// intersection of g_i^{-1}(W)
RationalMatrix pull_back(const QuiverRep& r, const RationalMatrix& w_basis);

struct SubrepSearch {
  enum class Mode { ExactFinite, Sampled };
  Mode mode = Mode::Sampled;
  unsigned samples = 64;
  std::uint64_t seed = 0;
};

struct SubrepResult {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<SubrepWitness> witness;
};

/// Existence of a subrepresentation with the given dimension vector, via
/// the (U, W) reduction: a subrep with dim U = s_-1, dim W = s_1 exists iff
/// F(U) is inside G(W) and dim F(U) <= s_0 <= dim G(W). When U and W are
/// forced (s_-1 in {0, a} and s_1 in {0, c}, in particular whenever
/// a == c == 1) the answer is exact. Otherwise the search covers coordinate
/// subspaces (plus `samples` random ones in Sampled mode) and answers Yes
/// or Unknown. Throws std::invalid_argument if the target is zero, the full
/// vector, or does not fit.
SubrepResult subrep_exists(const QuiverRep& r, const DimVector& target, const SubrepSearch& search = {});

/// Every dimension vector found by the (U, W) search over the same candidate
/// family subrep_exists uses, with one witness each. Proper and nonzero only.
std::map<DimVector, SubrepWitness> find_subreps(const QuiverRep& r, const SubrepSearch& search = {});

class WrongDim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact set of proper nonzero subrep dimension vectors of a (1,4,1) rep.
std::set<DimVector> all_subrep_dimvectors_charge1(const QuiverRep& r);

// ---------------------------------------------------------------------------
// Injectivity / surjectivity of the representation's pencils

struct RepPencilReport {
  PencilVerdict globally_injective;
  PencilVerdict locally_injective;
  PencilVerdict globally_surjective;
  PencilVerdict locally_surjective;
};

/// Runs the four pencil questions on the eta (f) and phi (g) pencils.
/// Global injectivity on a pencil with fewer rows than columns is reported
/// as No without certificate.
RepPencilReport pencil_report(const QuiverRep& r, std::uint64_t seed = 0);

}  // namespace iq
