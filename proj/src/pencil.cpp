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

#include "iq/pencil.hpp"

#include <sstream>

#include "iq/rng.hpp"

namespace iq {

LinearPencil::LinearPencil(std::array<RationalMatrix, 4> coeff) : coeff_(std::move(coeff)) {
  rows_ = coeff_[0].rows();
  cols_ = coeff_[0].cols();
  for (const auto& c : coeff_)
    if (c.rows() != rows_ || c.cols() != cols_)
      throw ShapeError("pencil coefficient matrices must share their shape");
}

LinearPencil LinearPencil::zero(std::size_t rows, std::size_t cols) {
  return LinearPencil({RationalMatrix(rows, cols), RationalMatrix(rows, cols),
                       RationalMatrix(rows, cols), RationalMatrix(rows, cols)});
}

RationalMatrix LinearPencil::evaluate(std::span<const Rational> lambda) const {
  if (lambda.size() != 4) throw ShapeError("pencil evaluation needs 4 coordinates");
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < 4; ++i)
    if (!lambda[i].is_zero()) m += coeff_[i] * lambda[i];
  return m;
}

LinearPencil LinearPencil::transpose() const {
  return LinearPencil({coeff_[0].transpose(), coeff_[1].transpose(), coeff_[2].transpose(),
                       coeff_[3].transpose()});
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::ProbablyYes: return "ProbablyYes";
  }
  return "?";
}

std::string to_string(const PencilVerdict& v) {
  if (v.answer == Answer::ProbablyYes) return "ProbablyYes(" + std::to_string(v.rounds) + ")";
  return to_string(v.answer);
}

namespace {

RationalMatrix select_rows(const RationalMatrix& m, std::span<const std::size_t> rows) {
  RationalMatrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(rows[i], c);
  return out;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn
// returns false.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// B(mu) = [C0 mu | C1 mu | C2 mu | C3 mu]; B(mu) lambda = p(lambda) mu.
RationalMatrix kernel_pencil_matrix(const LinearPencil& p, const RationalVector& mu) {
  std::vector<RationalVector> cols;
  cols.reserve(4);
  for (std::size_t i = 0; i < 4; ++i) cols.push_back(p.coeff(i) * mu);
  return RationalMatrix::from_columns(p.rows(), cols);
}

RationalVector axpy(const RationalVector& base, const Rational& s, const RationalVector& dir) {
  RationalVector out = base;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * dir[i];
  return out;
}

bool independent(const RationalVector& a, const RationalVector& b) {
  return rank(RationalMatrix::from_columns(a.size(), std::vector<RationalVector>{a, b})) == 2;
}

std::pair<RationalVector, RationalVector> random_line(Rng& rng, std::size_t dim) {
  for (;;) {
    auto base = rng.random_vector(dim);
    auto dir = rng.random_vector(dim);
    if (independent(base, dir)) return {std::move(base), std::move(dir)};
  }
}

RationalVector some_kernel_vector(const RationalMatrix& m) {
  auto k = kernel_basis(m);
  return k.empty() ? RationalVector{} : k.front();
}

PencilCertificate point_certificate(RationalVector lambda) {
  PencilCertificate c;
  c.kind = PencilCertificate::Kind::RankDropPoint;
  c.point = std::move(lambda);
  return c;
}

// Stacked coefficient matrix of a one-column pencil: column i is coeff[i].
RationalMatrix single_column_stack(const LinearPencil& p) {
  std::vector<RationalVector> cols;
  for (std::size_t i = 0; i < 4; ++i) cols.push_back(p.coeff(i).col(0));
  return RationalMatrix::from_columns(p.rows(), cols);
}

// Restricts the rank condition along lambda(s) = base + s*dir. Returns a
// certificate iff the fail locus meets the line.
std::optional<PencilCertificate> probe_lambda_line(const LinearPencil& p, const RationalVector& base,
                                                   const RationalVector& dir) {
  const auto m0 = p.evaluate(base);
  const auto m1 = p.evaluate(dir);
  if (rank(m1) < p.cols()) return point_certificate(dir);
  const auto g = maximal_minor_gcd(m0, m1);
  if (g.is_zero()) return point_certificate(base);
  if (g.degree() == 0) return std::nullopt;
  if (g.degree() == 1) {
    const Rational root = -g.coeffs()[0] / g.coeffs()[1];
    return point_certificate(axpy(base, root, dir));
  }
  PencilCertificate c;
  c.kind = PencilCertificate::Kind::LineMinorGcd;
  c.line_base = base;
  c.line_direction = dir;
  c.locus = g;
  return c;
}

// Same question asked in the kernel space: is there mu on the line
// mu(s) = base + s*dir and lambda != 0 with p(lambda) mu = 0?
std::optional<PencilCertificate> probe_kernel_line(const LinearPencil& p, const RationalVector& base,
                                                   const RationalVector& dir) {
  const auto b0 = kernel_pencil_matrix(p, base);
  const auto b1 = kernel_pencil_matrix(p, dir);
  if (rank(b1) < 4) return point_certificate(some_kernel_vector(b1));
  const auto g = maximal_minor_gcd(b0, b1);
  if (g.is_zero()) return point_certificate(some_kernel_vector(b0));
  if (g.degree() == 0) return std::nullopt;
  if (g.degree() == 1) {
    const Rational root = -g.coeffs()[0] / g.coeffs()[1];
    return point_certificate(some_kernel_vector(kernel_pencil_matrix(p, axpy(base, root, dir))));
  }
  PencilCertificate c;
  c.kind = PencilCertificate::Kind::KernelLineMinorGcd;
  c.line_base = base;
  c.line_direction = dir;
  c.locus = g;
  return c;
}

bool all_minors_divisible(const RationalMatrix& m0, const RationalMatrix& m1, const Polynomial& g) {
  const std::size_t k = m0.cols();
  std::vector<Rational> xs;
  for (std::size_t i = 0; i <= k; ++i) xs.emplace_back(static_cast<long>(i));
  std::vector<RationalMatrix> samples;
  for (const auto& x : xs) samples.push_back(m0 + m1 * x);
  bool ok = true;
  for_each_subset(m0.rows(), k, [&](std::span<const std::size_t> rows) {
    std::vector<Rational> ys;
    for (const auto& s : samples) ys.push_back(determinant(select_rows(s, rows)));
    const auto minor = Polynomial::interpolate(xs, ys);
    if (!divmod(minor, g).second.is_zero()) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace

Polynomial maximal_minor_gcd(const RationalMatrix& m0, const RationalMatrix& m1) {
  const std::size_t k = m0.cols();
  if (m0.rows() < k) return {};
  std::vector<Rational> xs;
  for (std::size_t i = 0; i <= k; ++i) xs.emplace_back(static_cast<long>(i));
  std::vector<RationalMatrix> samples;
  samples.reserve(xs.size());
  for (const auto& x : xs) samples.push_back(m0 + m1 * x);

  Polynomial g;
  for_each_subset(m0.rows(), k, [&](std::span<const std::size_t> rows) {
    std::vector<Rational> ys;
    ys.reserve(samples.size());
    for (const auto& s : samples) ys.push_back(determinant(select_rows(s, rows)));
    g = gcd(g, Polynomial::interpolate(xs, ys));
    return g.is_zero() || g.degree() > 0;
  });
  return g;
}

std::size_t generic_rank(const LinearPencil& p, std::uint64_t seed, unsigned samples) {
  Rng rng(seed);
  std::size_t best = 0;
  const std::size_t cap = std::min(p.rows(), p.cols());
  for (unsigned i = 0; i < samples && best < cap; ++i) {
    RationalVector lambda(4);
    for (auto& x : lambda) x = rng.small_rational();
    best = std::max(best, rank(p.evaluate(lambda)));
  }
  return best;
}

PencilVerdict is_injective_everywhere(const LinearPencil& p, std::uint64_t seed, unsigned rounds) {
  if (p.rows() < p.cols()) throw ShapeError("is_injective_everywhere: rows < cols");
  if (p.cols() == 0) return {Answer::Yes, 0, std::nullopt};

  if (p.cols() == 1) {
    const auto stack = single_column_stack(p);
    if (rank(stack) == 4) return {Answer::Yes, 0, std::nullopt};
    return {Answer::No, 0, point_certificate(some_kernel_vector(stack))};
  }

  if (p.cols() == 2) {
    // mu ranges over all of P^1 = {(1:s)} plus (0:1): exact.
    auto hit = probe_kernel_line(p, RationalVector{1, 0}, RationalVector{0, 1});
    if (hit) return {Answer::No, 1, std::move(hit)};
    return {Answer::Yes, 1, std::nullopt};
  }

  Rng rng(seed);
  // A generic rank deficit is invisible to mu-lines when the bad mu form a point set.
  RationalVector lambda;
  do lambda = rng.random_vector(4); while (rank(RationalMatrix::column(lambda)) == 0);
  if (rank(p.evaluate(lambda)) < p.cols()) return {Answer::No, 0, point_certificate(lambda)};
  for (unsigned k = 0; k < rounds; ++k) {
    auto [base, dir] = random_line(rng, p.cols());
    auto hit = probe_kernel_line(p, base, dir);
    if (hit) return {Answer::No, k + 1, std::move(hit)};
  }
  return {Answer::ProbablyYes, rounds, std::nullopt};
}

PencilVerdict is_surjective_everywhere(const LinearPencil& p, std::uint64_t seed, unsigned rounds) {
  return is_injective_everywhere(p.transpose(), seed, rounds);
}

PencilVerdict fail_locus_codim_at_least_2(const LinearPencil& p, PencilMode mode, std::uint64_t seed,
                                          unsigned lines) {
  const LinearPencil q = mode == PencilMode::Surjective ? p.transpose() : p;
  if (q.cols() == 0) return {Answer::Yes, 0, std::nullopt};
  if (q.rows() < q.cols())
    return {Answer::No, 0, point_certificate(RationalVector{1, 0, 0, 0})};

  if (q.cols() == 1) {
    // Fail set is the projectivised kernel of the stack.
    const auto stack = single_column_stack(q);
    if (rank(stack) >= 2) return {Answer::Yes, 0, std::nullopt};
    return {Answer::No, 0, point_certificate(some_kernel_vector(stack))};
  }

  Rng rng(seed);
  std::optional<PencilCertificate> first_hit;
  for (unsigned k = 0; k < lines; ++k) {
    auto [base, dir] = random_line(rng, 4);
    auto hit = probe_lambda_line(q, base, dir);
    if (!hit) return {Answer::Yes, k + 1, std::nullopt};
    if (!first_hit) first_hit = std::move(hit);
  }
  return {Answer::No, lines, std::move(first_hit)};
}

bool verify_certificate(const LinearPencil& q, const PencilCertificate& cert) {
  using Kind = PencilCertificate::Kind;
  switch (cert.kind) {
    case Kind::RankDropPoint: {
      if (cert.point.size() != 4) return false;
      bool nonzero = false;
      for (const auto& x : cert.point) nonzero = nonzero || !x.is_zero();
      return nonzero && rank(q.evaluate(cert.point)) < q.cols();
    }
    case Kind::LineMinorGcd:
      if (cert.locus.degree() < 1 || cert.line_base.size() != 4) return false;
      return all_minors_divisible(q.evaluate(cert.line_base), q.evaluate(cert.line_direction), cert.locus);
    case Kind::KernelLineMinorGcd:
      if (cert.locus.degree() < 1 || cert.line_base.size() != q.cols()) return false;
      return all_minors_divisible(kernel_pencil_matrix(q, cert.line_base),
                                  kernel_pencil_matrix(q, cert.line_direction), cert.locus);
  }
  return false;
}

}  // namespace iq
