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

#include <doctest.h>

#include <algorithm>

#include "iq/charge_one.hpp"
#include "iq/rng.hpp"
#include "iq/stability.hpp"

using iq::DimVector;
using iq::Rational;
using iq::Ray;
using iq::StabilityParam;
using iq::StabilityVerdict;
using Kind = iq::StabilityVerdict::Kind;

namespace {

StabilityParam theta(Rational a, Rational g, std::size_t n = 1) { return {std::move(a), std::move(g), n}; }

// Direct substitution: alpha s_-1 - (alpha + gamma) n s_0 / (2n + 2) + gamma s_1.
Rational theta_formula(const Rational& a, const Rational& g, std::size_t n, const DimVector& s) {
  const Rational nn(static_cast<long>(n));
  return a * Rational(static_cast<long>(s.s_minus1)) -
         (a + g) * nn * Rational(static_cast<long>(s.s0)) / Rational(static_cast<long>(2 * n + 2)) +
         g * Rational(static_cast<long>(s.s1));
}

bool has_ray(const std::vector<Ray>& rays, long a, long g) {
  return std::find(rays.begin(), rays.end(), Ray::through(a, g)) != rays.end();
}

}  // namespace

TEST_CASE("theta_dot examples") {
  iq::Rng rng(41);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto t = theta(rng.small_rational(), rng.small_rational(), n);
    CHECK(iq::theta_dot(t, t.full_dim()).is_zero());
  }
  CHECK(iq::theta_dot(theta(1, -1), {1, 2, 1}).is_zero());
  CHECK(iq::theta_dot(theta(1, -2), {0, 4, 1}) == Rational(-1));
}

TEST_CASE("property: theta_dot is the linear formula") {
  iq::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto a = rng.small_rational(), g = rng.small_rational();
    const DimVector s{static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n))),
                      static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(2 * n + 2))),
                      static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)))};
    CHECK(iq::theta_dot(theta(a, g, n), s) == theta_formula(a, g, n, s));
    // The (d, 2d, d) wall value is d/(n+1) (alpha + gamma).
    const auto d = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n)));
    CHECK(iq::theta_dot(theta(a, g, n), {d, 2 * d, d}) ==
          Rational(static_cast<long>(d), static_cast<long>(n + 1)) * (a + g));
  }
}

TEST_CASE("is_stable_charge1 examples") {
  const auto lf = iq::from_p5_point({1, 0, 0, 0, 0, 1});
  CHECK(iq::is_stable_charge1(lf, theta(1, -2)).kind == Kind::Stable);

  const auto surj = iq::from_p5_point({1, 0, 0, 0, 0, 0});
  const auto v = iq::is_stable_charge1(surj, theta(1, Rational(-1, 2)));
  CHECK(v.kind == Kind::Unstable);
  REQUIRE(v.certificate);
  CHECK(*v.certificate == DimVector{1, 2, 1});
  CHECK(v.max_value == Rational(1, 4));

  CHECK(iq::is_stable_charge1(surj, theta(1, -1)).kind == Kind::SemistableOnly);
  CHECK_THROWS_AS(iq::is_stable_charge1(lf, theta(1, -1, 2)), iq::WrongDim);
}

TEST_CASE("stability regions of the charge-one classes") {
  const auto lf = iq::stability_region_charge1(iq::from_p5_point({1, 0, 0, 0, 0, 1}));
  REQUIRE(lf.sectors.size() == 1);
  CHECK(lf.sectors[0].from == Ray::through(0, -1));
  CHECK(lf.sectors[0].to == Ray::through(1, 0));
  CHECK(lf.contains(1, -1));

  const auto surj = iq::stability_region_charge1(iq::from_p5_point({1, 0, 0, 0, 0, 0}));
  REQUIRE(surj.sectors.size() == 1);
  CHECK(surj.sectors[0].from == Ray::through(0, -1));
  CHECK(surj.sectors[0].to == Ray::through(1, -1));
  CHECK(surj.contains(1, -2));
  CHECK_FALSE(surj.contains(2, -1));
  CHECK_FALSE(surj.contains(1, -1));

  iq::Rng rng(43);
  const auto inj =
      iq::stability_region_charge1(iq::sample_charge1(iq::Charge1Sample::GloballyInjectiveRank2, rng));
  REQUIRE(inj.sectors.size() == 1);
  CHECK(inj.sectors[0].from == Ray::through(1, -1));
  CHECK(inj.sectors[0].to == Ray::through(1, 0));

  CHECK(iq::stability_region_charge1(iq::sample_charge1(iq::Charge1Sample::DoublyDegenerate, rng)).empty());
}

TEST_CASE("property: region membership agrees with pointwise verdicts") {
  iq::Rng rng(44);
  for (int t = 0; t < 40; ++t) {
    const auto r = iq::random_gauge(iq::sample_charge1(static_cast<iq::Charge1Sample>(t % 4), rng), rng);
    const auto region = iq::stability_region_charge1(r);
    for (int k = 0; k < 10; ++k) {
      const auto a = rng.small_rational(), g = rng.small_rational();
      if (a.is_zero() && g.is_zero()) continue;
      CHECK(region.contains(a, g) == (iq::is_stable_charge1(r, theta(a, g)).kind == Kind::Stable));
    }
  }
}

TEST_CASE("property: scaling theta by a positive rational preserves the verdict") {
  iq::Rng rng(45);
  for (int t = 0; t < 60; ++t) {
    const auto r = iq::sample_charge1(static_cast<iq::Charge1Sample>(t % 4), rng);
    const auto a = rng.small_rational(), g = rng.small_rational();
    auto c = abs(rng.small_rational());
    if (c.is_zero()) c = Rational(7, 2);
    CHECK(iq::is_stable_charge1(r, theta(a, g)).kind == iq::is_stable_charge1(r, theta(c * a, c * g)).kind);
  }
}

TEST_CASE("angle order") {
  CHECK(iq::angle_less(Ray::through(1, 0), Ray::through(1, 1)));
  CHECK(iq::angle_less(Ray::through(0, 1), Ray::through(-1, 0)));
  CHECK(iq::angle_less(Ray::through(-1, 0), Ray::through(0, -1)));
  CHECK(iq::angle_less(Ray::through(0, -1), Ray::through(1, -1)));
  CHECK_FALSE(iq::angle_less(Ray::through(1, -1), Ray::through(2, -2)));
  CHECK(Ray::through(Rational(2, 3), Rational(-4, 3)).to_string() == "(1,-2)");
}

TEST_CASE("candidate dimension vectors") {
  const auto one = iq::candidate_dimvectors(1);
  std::set<DimVector> expected;
  for (std::size_t b = 0; b <= 4; ++b) expected.insert({0, b, 1});
  expected.insert({1, 2, 1});
  expected.insert({1, 3, 1});
  CHECK(std::set<DimVector>(one.begin(), one.end()) == expected);

  const auto two = iq::candidate_dimvectors(2);
  CHECK(std::find(two.begin(), two.end(), DimVector{0, 7, 1}) == two.end());
  CHECK(std::find(two.begin(), two.end(), DimVector{1, 9, 2}) == two.end());
  for (const auto& s : two) {
    if (s.s_minus1 >= 1) CHECK(s.s_minus1 + 1 <= s.s0);
    if (s.s1 < 2) CHECK(s.s0 <= s.s1 + 1);
    CHECK(s.s0 <= 4 * s.s1);
    CHECK(s.s1 >= 1);
  }
}

TEST_CASE("theta epsilon checks") {
  CHECK(iq::verify_theta_eps_charge2(Rational(1, 100)).ok);
  // s = (0,3,1) at charge 2: -eps exactly.
  const auto eps = Rational(1, 7);
  const StabilityParam te{eps, Rational(-1), 2};
  CHECK(iq::theta_dot(te, {0, 3, 1}) == -eps);
  // The large-eps report gives the exact maximum.
  const auto half = iq::verify_theta_eps_charge2(Rational(1, 2));
  Rational max_value(-1000);
  for (const auto& s : iq::candidate_dimvectors(2))
    max_value = std::max(max_value, iq::theta_dot({Rational(1, 2), Rational(-1), 2}, s));
  CHECK(half.max_value == max_value);
  CHECK(half.ok == (max_value.sign() < 0));
  CHECK_THROWS(iq::verify_theta_eps(2, Rational(0)));
  CHECK_THROWS(iq::verify_theta_eps(2, Rational(1)));
}

TEST_CASE("wall arrangement for charge one") {
  const auto w = iq::wall_arrangement(1);
  std::vector<Ray> dirs;
  for (const auto& wall : w.walls) dirs.push_back(wall.direction);
  CHECK(has_ray(dirs, 1, -1));
  CHECK(has_ray(dirs, 1, 0));
  CHECK(has_ray(dirs, 0, -1));
  CHECK(has_ray(dirs, 3, 1));
  CHECK(has_ray(dirs, 1, 3));
  CHECK(has_ray(dirs, 1, 1));
  // (1,b,1) and (0,b,0) generate gamma = -alpha.
  for (const auto& wall : w.walls)
    for (const auto& s : wall.generators) {
      CHECK(iq::theta_dot(theta(wall.direction.alpha, wall.direction.gamma), s).is_zero());
      if ((s.s_minus1 == 1 && s.s1 == 1) || (s.s_minus1 == 0 && s.s1 == 0))
        CHECK(wall.direction == Ray::through(1, -1));
    }
  REQUIRE(w.chambers.size() == 2);
  CHECK(w.chambers[0].sample_alpha == Rational(1));
  CHECK(w.chambers[0].sample_gamma == Rational(-2));
}

TEST_CASE("effective walls examples") {
  iq::Rng rng(46);
  CHECK(iq::effective_walls_charge1({}).empty());
  CHECK(iq::effective_walls_charge1({iq::sample_charge1(iq::Charge1Sample::LocallyFree, rng)}).empty());
  const auto w = iq::effective_walls_charge1({iq::sample_charge1(iq::Charge1Sample::GloballySurjectiveRank2, rng),
                                              iq::sample_charge1(iq::Charge1Sample::GloballyInjectiveRank2, rng)});
  REQUIRE(w.size() == 1);
  CHECK(w[0] == Ray::through(1, -1));
}

TEST_CASE("heuristic stability") {
  iq::Rng rng(47);
  const auto surj = iq::sample_charge1(iq::Charge1Sample::GloballySurjectiveRank2, rng);
  const auto h = iq::heuristic_stability(surj, theta(1, Rational(-1, 2)));
  CHECK(h.kind == iq::HeuristicStability::Kind::CertifiedUnstable);
  REQUIRE(h.certificate);
  CHECK(iq::verify_witness(surj, *h.certificate));
  CHECK(iq::theta_dot(theta(1, Rational(-1, 2)), h.certificate->dim).sign() > 0);

  const auto lf = iq::sample_charge1(iq::Charge1Sample::LocallyFree, rng);
  const auto ok = iq::heuristic_stability(lf, theta(1, -2));
  CHECK(ok.kind == iq::HeuristicStability::Kind::NoDestabilizerFound);
  CHECK(ok.negative_on_candidates);
  CHECK_THROWS_AS(iq::heuristic_stability(iq::QuiverRep::zero({1, 3, 1}), theta(1, -2)), iq::WrongDim);
}
