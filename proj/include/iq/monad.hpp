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
#include <stdexcept>
#include <string>

#include "iq/pencil.hpp"
#include "iq/quiver.hpp"

namespace iq {

class WrongShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CompositeNonzero : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenerationFailed : public std::runtime_error {
 public:
  GenerationFailed(unsigned attempts, const std::string& what)
      : std::runtime_error(what), attempts_(attempts) {}
  unsigned attempts() const { return attempts_; }

 private:
  unsigned attempts_;
};

/// Linear monad O(-1)^n --alpha--> O^(2n+2) --beta--> O(1)^n given by its
/// coefficient pencils.
class Monad {
 public:
  Monad() = default;
  /// Throws WrongShape unless alpha is (2n+2) x n and beta is n x (2n+2), n >= 1.
  Monad(LinearPencil alpha, LinearPencil beta);

  std::size_t charge() const { return n_; }
  const LinearPencil& alpha() const { return alpha_; }
  const LinearPencil& beta() const { return beta_; }

  friend bool operator==(const Monad&, const Monad&) = default;

 private:
  std::size_t n_ = 0;
  LinearPencil alpha_;
  LinearPencil beta_;
};

/// beta_i alpha_j + beta_j alpha_i == 0 for all 0 <= i <= j <= 3.
bool composite_vanishes(const Monad& m);

/// f_i = alpha_i, g_i = beta_i.
QuiverRep functor_F(const Monad& m);
/// Throws WrongShape unless dim r == (n, 2n+2, n) with n >= 1.
Monad functor_F_inverse(const QuiverRep& r);

enum class SheafType { LocallyFree, TorsionFreeNotLF, NotInstanton, Undetermined };
std::string to_string(SheafType t);

struct MonadDiagnosis {
  PencilVerdict beta_surjective_everywhere;
  PencilVerdict alpha_injective_everywhere;
  PencilVerdict alpha_fail_codim2;
  SheafType sheaf_type = SheafType::Undetermined;
};

/// NotInstanton when beta fails surjectivity somewhere or the alpha fail
/// locus has a divisor component. Any ProbablyYes among the verdicts that
/// decide the remaining cases gives Undetermined. Throws CompositeNonzero.
MonadDiagnosis diagnose(const Monad& m, std::uint64_t seed = 0);

enum class InstantonKind { LocallyFree, TorsionFree, Any };
std::string to_string(InstantonKind k);
/// Accepts "locally-free", "torsion-free", "any". Throws std::invalid_argument.
InstantonKind parse_instanton_kind(const std::string& s);

inline constexpr unsigned kDefaultGenerationAttempts = 256;

/// Charge 1: normal form from a random skew form (Pfaffian != 0 for
/// LocallyFree, rank 2 for TorsionFree). Charge >= 2: random beta and alpha
/// columns drawn from the solution space of the relations; for TorsionFree
/// one alpha column is first chosen to vanish at a point and beta is drawn
/// among the pencils compatible with it. An attempt is accepted when
/// diagnose agrees with `kind`. Throws GenerationFailed.
Monad generate_instanton(std::size_t n, InstantonKind kind, std::uint64_t seed,
                         unsigned max_attempts = kDefaultGenerationAttempts);

}  // namespace iq
