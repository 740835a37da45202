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

#include "iq/charge_one.hpp"
#include "iq/rng.hpp"
#include "support/oracle.hpp"

using iq::Charge1Kind;
using iq::Charge1Region;
using iq::Charge1Sample;
using iq::QuiverRep;
using iq::Rational;
using iq::RationalMatrix;
using iq::SkewForm;

namespace {

iq::StabilityParam theta(Rational a, Rational g) { return {std::move(a), std::move(g), 1}; }

}  // namespace

TEST_CASE("skew form basics") {
  CHECK_THROWS_AS(SkewForm({0, 0, 0, 0, 0, 0}), iq::AllZero);
  const SkewForm s({1, 0, 0, 0, 0, 1});
  CHECK(s.pfaffian() == Rational(-1));
  CHECK(s.rank() == 4);
  CHECK(SkewForm::from_matrix(s.matrix()) == s);
  CHECK(SkewForm({2, 0, 0, 0, 0, 2}) == s);
  CHECK_FALSE(SkewForm({2, 0, 0, 0, 0, 1}) == s);
  CHECK(SkewForm({0, -3, 0, 0, 6, 0}).normalized().to_string() == "[0:1:0:0:-2:0]");
}

TEST_CASE("quadric membership examples") {
  CHECK(iq::quadric_membership(SkewForm({1, 0, 0, 0, 0, 0})) == iq::Quadric::OnQuadric);
  CHECK(iq::quadric_membership(SkewForm({1, 0, 0, 0, 0, 1})) == iq::Quadric::OffQuadric);
  CHECK(iq::quadric_membership(SkewForm({0, 1, 0, 0, 1, 0})) == iq::Quadric::OffQuadric);
  CHECK(SkewForm({0, 1, 0, 0, 1, 0}).pfaffian() == Rational(1));
}

TEST_CASE("from_p5_point examples") {
  const auto r = iq::from_p5_point({1, 0, 0, 0, 0, 0});
  CHECK(r.f(0) == RationalMatrix{{0}, {1}, {0}, {0}});
  CHECK(r.f(1) == RationalMatrix{{-1}, {0}, {0}, {0}});
  CHECK(r.f(2).is_zero());
  CHECK(r.f(3).is_zero());
  CHECK(iq::n_matrix(r) == RationalMatrix::identity(4));

  CHECK_THROWS_AS(iq::from_p5_point({0, 0, 0, 0, 0, 0}), iq::AllZero);
  const auto lf = iq::from_p5_point({1, 0, 0, 0, 0, 1});
  CHECK(iq::check_relations(lf).holds);
  CHECK(iq::is_injective_everywhere(lf.eta_pencil()).answer == iq::Answer::Yes);
}

TEST_CASE("normal form examples") {
  const SkewForm s({1, 0, 0, 0, 0, 1});
  const auto r = iq::from_p5_point(s);
  CHECK(iq::normal_form(r) == s);
  CHECK(iq::normal_form(r).coords() == s.coords());

  iq::Rng rng(51);
  const auto a = rng.random_invertible(4);
  const auto gauged = iq::gauge_act(r, RationalMatrix::identity(1), a, RationalMatrix::identity(1));
  CHECK(iq::normal_form(gauged) == s);

  // g-rows of rank 3.
  auto g = r.gs();
  g[3] = g[0] + g[1];
  auto f = r.fs();
  for (auto& m : f) m = RationalMatrix(4, 1);
  CHECK_THROWS_AS(iq::normal_form(QuiverRep(r.dim(), f, g)), iq::NotGloballySurjective);
  CHECK_THROWS_AS(iq::normal_form(QuiverRep::zero({2, 6, 2})), iq::WrongDim);

  auto bad = r.fs();
  bad[0](0, 0) = 1;
  CHECK_THROWS_AS(iq::normal_form(QuiverRep(r.dim(), bad, r.gs())), iq::RelationsViolated);
}

TEST_CASE("property: normal form is a gauge invariant") {
  iq::Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const auto s = (t % 2 == 0) ? iq::random_skew_form_off_quadric(rng) : iq::random_skew_form_on_quadric(rng);
    const auto r = iq::from_p5_point(s);
    CHECK(iq::check_relations(r).holds);
    const auto g = iq::random_gauge(r, rng);
    CHECK(iq::normal_form(g) == s);
    CHECK(iq::normal_form(g).pfaffian().is_zero() == (t % 2 == 1));
    // pf^2 == det of the skew matrix via the cofactor oracle.
    CHECK((s.pfaffian() * s.pfaffian()).raw() == oracle::cofactor_det(oracle::to_mat(s.matrix())));
  }
}

TEST_CASE("region_of") {
  CHECK(iq::region_of(1, -2) == Charge1Region::Q4belowWall);
  CHECK(iq::region_of(2, -1) == Charge1Region::Q4aboveWall);
  CHECK(iq::region_of(2, -2) == Charge1Region::Wall);
  CHECK(iq::region_of(-1, -1) == Charge1Region::OutsideQ4);
  CHECK(iq::region_of(1, 1) == Charge1Region::OutsideQ4);
  CHECK(iq::region_of(0, -1) == Charge1Region::OutsideQ4);
}

TEST_CASE("classify examples") {
  CHECK(iq::classify(iq::from_p5_point({1, 0, 0, 0, 0, 1}), theta(1, -2)).kind ==
        Charge1Kind::LocallyFreeInstanton);
  CHECK(iq::classify(iq::from_p5_point({1, 0, 0, 0, 0, 0}), theta(1, -2)).kind ==
        Charge1Kind::NonLocallyFreeInstanton);
  CHECK(iq::classify(iq::from_p5_point({1, 0, 0, 0, 0, 0}), theta(1, Rational(-1, 2))).kind ==
        Charge1Kind::NotStableHere);
  CHECK(iq::classify(iq::from_p5_point({1, 0, 0, 0, 0, 0}), theta(1, -1)).kind ==
        Charge1Kind::StrictlySemistable);
  iq::Rng rng(53);
  for (int c = 0; c < 4; ++c)
    CHECK(iq::classify(iq::sample_charge1(static_cast<Charge1Sample>(c), rng), theta(-1, -1)).kind ==
          Charge1Kind::EmptyRegion);
  const auto dual = iq::classify(iq::sample_charge1(Charge1Sample::GloballyInjectiveRank2, rng), theta(2, -1));
  CHECK(dual.kind == Charge1Kind::PerverseDual);
  CHECK(dual.rank_m == 4);
  CHECK(dual.rank_n == 2);
}

TEST_CASE("property: sampled classes have the advertised ranks and relations") {
  iq::Rng rng(54);
  const std::array<std::pair<std::size_t, std::size_t>, 4> ranks{{{4, 4}, {2, 4}, {4, 2}, {2, 2}}};
  for (int t = 0; t < 80; ++t) {
    const auto c = static_cast<Charge1Sample>(t % 4);
    const auto r = iq::random_gauge(iq::sample_charge1(c, rng), rng);
    CHECK(iq::check_relations(r).holds);
    CHECK(oracle::rank(iq::m_matrix(r)) == ranks[t % 4].first);
    CHECK(oracle::rank(iq::n_matrix(r)) == ranks[t % 4].second);
    // N M is skew for globally surjective reps.
    if (ranks[t % 4].second == 4) CHECK(iq::is_skew_symmetric(iq::n_matrix(r) * iq::m_matrix(r)));
  }
}
