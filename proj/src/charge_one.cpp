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

#include "iq/charge_one.hpp"

namespace iq {

namespace {

constexpr DimVector kCharge1{1, 4, 1};

void require_charge1(const QuiverRep& r) {
  if (r.dim() != kCharge1) throw WrongDim("expected dimension vector (1,4,1), got " + r.dim().to_string());
}

Rational nonzero_small_rational(Rng& rng) {
  for (;;) {
    auto x = rng.small_rational();
    if (!x.is_zero()) return x;
  }
}

}  // namespace

SkewForm::SkewForm(std::array<Rational, 6> coords) : c_(std::move(coords)) {
  for (const auto& x : c_)
    if (!x.is_zero()) return;
  throw AllZero("skew form coordinates are all zero");
}

SkewForm SkewForm::from_matrix(const RationalMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ShapeError("skew form needs a 4x4 matrix");
  if (!is_skew_symmetric(m)) throw NotSkewSymmetric("matrix is not skew-symmetric");
  return SkewForm({m(1, 0), m(2, 0), m(3, 0), m(2, 1), m(3, 1), m(3, 2)});
}

RationalMatrix SkewForm::matrix() const {
  const auto& [a, b, c, d, e, f] = c_;
  return RationalMatrix{{0, -a, -b, -c}, {a, 0, -d, -e}, {b, d, 0, -f}, {c, e, f, 0}};
}

Rational SkewForm::pfaffian() const {
  const auto& [a, b, c, d, e, f] = c_;
  return b * e - a * f - d * c;
}

std::size_t SkewForm::rank() const { return iq::rank(matrix()); }

SkewForm SkewForm::normalized() const {
  Rational lead;
  for (const auto& x : c_)
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  auto out = c_;
  for (auto& x : out) x /= lead;
  return SkewForm(out);
}

std::string SkewForm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) s += ":";
    s += c_[i].to_string();
  }
  return s + "]";
}

bool operator==(const SkewForm& x, const SkewForm& y) { return x.normalized().c_ == y.normalized().c_; }

std::string to_string(Quadric q) { return q == Quadric::OnQuadric ? "OnQuadric" : "OffQuadric"; }

Quadric quadric_membership(const SkewForm& s) {
  return s.pfaffian().is_zero() ? Quadric::OnQuadric : Quadric::OffQuadric;
}

RationalMatrix m_matrix(const QuiverRep& r) {
  require_charge1(r);
  RationalMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = r.f(j)(i, 0);
  return m;
}

RationalMatrix n_matrix(const QuiverRep& r) {
  require_charge1(r);
  RationalMatrix n(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) n(i, j) = r.g(i)(0, j);
  return n;
}

SkewForm normal_form(const QuiverRep& r) {
  require_charge1(r);
  const auto rel = check_relations(r);
  if (!rel.holds)
    throw RelationsViolated("relation (" + std::to_string(rel.i) + "," + std::to_string(rel.j) + ") fails");
  const auto n = n_matrix(r);
  if (rank(n) != 4) throw NotGloballySurjective("g-rows do not span: rank " + std::to_string(rank(n)));
  return SkewForm::from_matrix(n * m_matrix(r)).normalized();
}

QuiverRep from_p5_point(const SkewForm& s) {
  const auto m = s.matrix();
  std::array<RationalMatrix, 4> f, g;
  for (std::size_t j = 0; j < 4; ++j) {
    f[j] = RationalMatrix::column(m.col(j));
    g[j] = RationalMatrix(1, 4);
    g[j](0, j) = 1;
  }
  return QuiverRep(kCharge1, std::move(f), std::move(g));
}

QuiverRep from_p5_point(const std::array<Rational, 6>& coords) { return from_p5_point(SkewForm(coords)); }

std::string to_string(Charge1Kind k) {
  switch (k) {
    case Charge1Kind::LocallyFreeInstanton:
      return "LocallyFreeInstanton";
    case Charge1Kind::NonLocallyFreeInstanton:
      return "NonLocallyFreeInstanton";
    case Charge1Kind::PerverseDual:
      return "PerverseDual";
    case Charge1Kind::NotStableHere:
      return "NotStableHere";
    case Charge1Kind::EmptyRegion:
      return "EmptyRegion";
    case Charge1Kind::StrictlySemistable:
      return "StrictlySemistable";
  }
  return "?";
}

std::string to_string(Charge1Region r) {
  switch (r) {
    case Charge1Region::Q4belowWall:
      return "Q4belowWall";
    case Charge1Region::Q4aboveWall:
      return "Q4aboveWall";
    case Charge1Region::Wall:
      return "Wall";
    case Charge1Region::OutsideQ4:
      return "OutsideQ4";
  }
  return "?";
}

Charge1Region region_of(const Rational& alpha, const Rational& gamma) {
  if (alpha.sign() <= 0 || gamma.sign() >= 0) return Charge1Region::OutsideQ4;
  const int s = (alpha + gamma).sign();
  return s < 0 ? Charge1Region::Q4belowWall : (s > 0 ? Charge1Region::Q4aboveWall : Charge1Region::Wall);
}

Charge1Class classify(const QuiverRep& r, const StabilityParam& theta) {
  Charge1Class out;
  out.verdict = is_stable_charge1(r, theta);
  out.rank_m = rank(m_matrix(r));
  out.rank_n = rank(n_matrix(r));
  out.region = region_of(theta.alpha, theta.gamma);
  if (out.region == Charge1Region::OutsideQ4) {
    out.kind = Charge1Kind::EmptyRegion;
    return out;
  }
  switch (out.verdict.kind) {
    case StabilityVerdict::Kind::Stable:
      if (out.rank_m == 4 && out.rank_n == 4)
        out.kind = Charge1Kind::LocallyFreeInstanton;
      else if (out.rank_n == 4)
        out.kind = Charge1Kind::NonLocallyFreeInstanton;
      else
        out.kind = Charge1Kind::PerverseDual;
      break;
    case StabilityVerdict::Kind::SemistableOnly:
      out.kind = Charge1Kind::StrictlySemistable;
      break;
    case StabilityVerdict::Kind::Unstable:
      out.kind = Charge1Kind::NotStableHere;
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Charge1Sample c) {
  switch (c) {
    case Charge1Sample::LocallyFree:
      return "locally-free";
    case Charge1Sample::GloballySurjectiveRank2:
      return "glob-surj-rank2";
    case Charge1Sample::GloballyInjectiveRank2:
      return "glob-inj-rank2";
    case Charge1Sample::DoublyDegenerate:
      return "doubly-degenerate";
  }
  return "?";
}

SkewForm random_skew_form_off_quadric(Rng& rng) {
  for (;;) {
    std::array<Rational, 6> c;
    for (auto& x : c) x = rng.small_rational();
    const auto& [a, b, cc, d, e, f] = c;
    if (!(b * e - a * f - d * cc).is_zero()) return SkewForm(c);
  }
}

SkewForm random_skew_form_on_quadric(Rng& rng) {
  for (;;) {
    const auto x = rng.random_vector(4);
    const auto y = rng.random_vector(4);
    RationalMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = x[i] * y[j] - y[i] * x[j];
    if (rank(m) == 2) return SkewForm::from_matrix(m);
  }
}

QuiverRep sample_charge1(Charge1Sample c, Rng& rng) {
  switch (c) {
    case Charge1Sample::LocallyFree:
      return from_p5_point(random_skew_form_off_quadric(rng));
    case Charge1Sample::GloballySurjectiveRank2:
      return from_p5_point(random_skew_form_on_quadric(rng));
    case Charge1Sample::GloballyInjectiveRank2:
      return dual(from_p5_point(random_skew_form_on_quadric(rng)));
    case Charge1Sample::DoublyDegenerate: {
      const auto p = nonzero_small_rational(rng);
      std::array<RationalMatrix, 4> f, g;
      f[0] = RationalMatrix::column({0, p, rng.small_rational(), rng.small_rational()});
      f[1] = RationalMatrix::column({-p, 0, rng.small_rational(), rng.small_rational()});
      f[2] = f[3] = RationalMatrix(4, 1);
      for (std::size_t i = 0; i < 4; ++i) g[i] = RationalMatrix(1, 4);
      g[0](0, 0) = 1;
      g[1](0, 1) = 1;
      return QuiverRep(kCharge1, std::move(f), std::move(g));
    }
  }
  throw std::invalid_argument("unknown charge-1 sample class");
}

QuiverRep random_gauge(const QuiverRep& r, Rng& rng) {
  const auto& d = r.dim();
  auto scalar_or_invertible = [&](std::size_t n) {
    if (n == 1) return RationalMatrix{{nonzero_small_rational(rng)}};
    return rng.random_invertible(n);
  };
  const auto gm1 = scalar_or_invertible(d.s_minus1);
  const auto g0 = scalar_or_invertible(d.s0);
  const auto g1 = scalar_or_invertible(d.s1);
  return gauge_act(r, gm1, g0, g1);
}

}  // namespace iq
