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

#include "iq/monad.hpp"

#include "iq/charge_one.hpp"
#include "iq/rng.hpp"

namespace iq {

Monad::Monad(LinearPencil alpha, LinearPencil beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  n_ = alpha_.cols();
  if (n_ == 0 || alpha_.rows() != 2 * n_ + 2 || beta_.rows() != n_ || beta_.cols() != 2 * n_ + 2)
    throw WrongShape("monad needs alpha of shape (2n+2) x n and beta of shape n x (2n+2)");
}

bool composite_vanishes(const Monad& m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      if (!(m.beta().coeff(i) * m.alpha().coeff(j) + m.beta().coeff(j) * m.alpha().coeff(i)).is_zero())
        return false;
  return true;
}

QuiverRep functor_F(const Monad& m) {
  const auto n = m.charge();
  return QuiverRep({n, 2 * n + 2, n}, m.alpha().coeffs(), m.beta().coeffs());
}

Monad functor_F_inverse(const QuiverRep& r) {
  const auto& d = r.dim();
  if (d.s_minus1 == 0 || d.s1 != d.s_minus1 || d.s0 != 2 * d.s_minus1 + 2)
    throw WrongShape("dimension vector " + d.to_string() + " is not of the form (n, 2n+2, n)");
  return Monad(r.eta_pencil(), r.phi_pencil());
}

std::string to_string(SheafType t) {
  switch (t) {
    case SheafType::LocallyFree:
      return "LocallyFree";
    case SheafType::TorsionFreeNotLF:
      return "TorsionFreeNotLF";
    case SheafType::NotInstanton:
      return "NotInstanton";
    case SheafType::Undetermined:
      return "Undetermined";
  }
  return "?";
}

MonadDiagnosis diagnose(const Monad& m, std::uint64_t seed) {
  if (!composite_vanishes(m)) throw CompositeNonzero("beta o alpha does not vanish");
  MonadDiagnosis d;
  d.beta_surjective_everywhere = is_surjective_everywhere(m.beta(), seed);
  d.alpha_injective_everywhere = is_injective_everywhere(m.alpha(), seed + 1);
  d.alpha_fail_codim2 = fail_locus_codim_at_least_2(m.alpha(), PencilMode::Injective, seed + 2);

  const auto beta = d.beta_surjective_everywhere.answer;
  const auto inj = d.alpha_injective_everywhere.answer;
  const auto codim = d.alpha_fail_codim2.answer;
  if (beta == Answer::No || codim == Answer::No)
    d.sheaf_type = SheafType::NotInstanton;
  else if (beta == Answer::Yes && inj == Answer::Yes)
    d.sheaf_type = SheafType::LocallyFree;
  else if (beta == Answer::Yes && inj == Answer::No && codim == Answer::Yes)
    d.sheaf_type = SheafType::TorsionFreeNotLF;
  else
    d.sheaf_type = SheafType::Undetermined;
  return d;
}

std::string to_string(InstantonKind k) {
  switch (k) {
    case InstantonKind::LocallyFree:
      return "locally-free";
    case InstantonKind::TorsionFree:
      return "torsion-free";
    case InstantonKind::Any:
      return "any";
  }
  return "?";
}

InstantonKind parse_instanton_kind(const std::string& s) {
  if (s == "locally-free") return InstantonKind::LocallyFree;
  if (s == "torsion-free") return InstantonKind::TorsionFree;
  if (s == "any") return InstantonKind::Any;
  throw std::invalid_argument("unknown instanton kind '" + s + "'");
}

namespace {

bool accepts(InstantonKind kind, const MonadDiagnosis& d) {
  if (d.beta_surjective_everywhere.answer == Answer::No || d.alpha_fail_codim2.answer != Answer::Yes) return false;
  switch (kind) {
    case InstantonKind::LocallyFree:
      return d.alpha_injective_everywhere.answer != Answer::No;
    case InstantonKind::TorsionFree:
      return d.alpha_injective_everywhere.answer == Answer::No;
    case InstantonKind::Any:
      return true;
  }
  return false;
}

std::array<RationalMatrix, 4> random_coefficients(Rng& rng, std::size_t rows, std::size_t cols) {
  std::array<RationalMatrix, 4> out;
  for (auto& m : out) m = rng.random_matrix(rows, cols);
  return out;
}

// A column pencil v (4 coefficient vectors of length b, concatenated) is a
// valid alpha column iff beta_i v_j + beta_j v_i == 0 for all i <= j. The
// relations never mix alpha columns, so alpha is any n-tuple of such v.
std::vector<RationalVector> alpha_column_space(const std::array<RationalMatrix, 4>& beta) {
  const std::size_t n = beta[0].rows();
  const std::size_t b = beta[0].cols();
  RationalMatrix sys(10 * n, 4 * b);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      for (std::size_t p = 0; p < n; ++p, ++row)
        for (std::size_t k = 0; k < b; ++k) {
          sys(row, j * b + k) += beta[i](p, k);
          sys(row, i * b + k) += beta[j](p, k);
        }
  return kernel_basis(sys);
}

// Row pencils r (length 4b) with r_i w_j + r_j w_i == 0 for a given column w.
std::vector<RationalVector> beta_row_space(const RationalVector& w, std::size_t b) {
  RationalMatrix sys(10, 4 * b);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j, ++row)
      for (std::size_t k = 0; k < b; ++k) {
        sys(row, i * b + k) += w[j * b + k];
        sys(row, j * b + k) += w[i * b + k];
      }
  return kernel_basis(sys);
}

RationalVector random_combination(Rng& rng, const std::vector<RationalVector>& basis, std::size_t len) {
  RationalVector x(len);
  for (const auto& v : basis) {
    const auto c = rng.small_integer();
    for (std::size_t k = 0; k < len; ++k) x[k] += c * v[k];
  }
  return x;
}

// Column pencil vanishing at a random point lambda_0.
RationalVector vanishing_column(Rng& rng, std::size_t b) {
  RationalVector lambda;
  do lambda = rng.random_vector(4); while (lambda[3].is_zero());
  auto w = rng.random_vector(4 * b);
  for (std::size_t k = 0; k < b; ++k) {
    Rational s;
    for (std::size_t i = 0; i < 4; ++i) s += lambda[i] * w[i * b + k];
    w[3 * b + k] -= s / lambda[3];
  }
  return w;
}

Monad generate_charge1(InstantonKind kind, Rng& rng) {
  if (kind == InstantonKind::Any)
    kind = rng.uniform(0, 1) == 0 ? InstantonKind::LocallyFree : InstantonKind::TorsionFree;
  const auto form = kind == InstantonKind::LocallyFree ? random_skew_form_off_quadric(rng)
                                                       : random_skew_form_on_quadric(rng);
  return functor_F_inverse(from_p5_point(form));
}

}  // namespace

Monad generate_instanton(std::size_t n, InstantonKind kind, std::uint64_t seed, unsigned max_attempts) {
  if (n == 0) throw std::invalid_argument("charge must be positive");
  Rng rng(seed);
  if (n == 1) return generate_charge1(kind, rng);

  const std::size_t b = 2 * n + 2;
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    std::array<RationalMatrix, 4> beta;
    std::vector<RationalVector> columns;
    if (kind == InstantonKind::TorsionFree) {
      // beta is chosen to admit a column that vanishes at one point.
      columns.push_back(vanishing_column(rng, b));
      const auto rows = beta_row_space(columns.front(), b);
      if (rows.empty()) continue;
      for (auto& m : beta) m = RationalMatrix(n, b);
      for (std::size_t p = 0; p < n; ++p) {
        const auto r = random_combination(rng, rows, 4 * b);
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t k = 0; k < b; ++k) beta[i](p, k) = r[i * b + k];
      }
    } else {
      beta = random_coefficients(rng, n, b);
    }
    const auto space = alpha_column_space(beta);
    if (space.size() < n) continue;  // alpha would have a common kernel vector
    while (columns.size() < n) columns.push_back(random_combination(rng, space, 4 * b));

    std::array<RationalMatrix, 4> alpha;
    for (std::size_t i = 0; i < 4; ++i) {
      alpha[i] = RationalMatrix(b, n);
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < b; ++k) alpha[i](k, q) = columns[q][i * b + k];
    }
    const Monad m{LinearPencil(alpha), LinearPencil(beta)};
    if (composite_vanishes(m) && accepts(kind, diagnose(m, rng.fork()))) return m;
  }
  throw GenerationFailed(max_attempts, "no acceptable charge-" + std::to_string(n) + " monad after " +
                                           std::to_string(max_attempts) + " attempts");
}

}  // namespace iq
