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
#include "iq/pencil.hpp"
#include "iq/rng.hpp"
#include "support/oracle.hpp"

using iq::Answer;
using iq::LinearPencil;
using iq::PencilMode;
using iq::Rational;
using iq::RationalMatrix;

namespace {

// 4x1 pencil lambda -> M lambda, i.e. coefficient i is column i of M.
LinearPencil column_pencil(const RationalMatrix& m) {
  std::array<RationalMatrix, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = RationalMatrix::column(m.col(i));
  return LinearPencil(c);
}

RationalMatrix skew(long a, long b, long c, long d, long e, long f) {
  return iq::SkewForm({a, b, c, d, e, f}).matrix();
}

}  // namespace

TEST_CASE("evaluate examples") {
  std::array<RationalMatrix, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = RationalMatrix::identity(3) * Rational(static_cast<long>(i));
  const LinearPencil p(c);
  const std::vector<Rational> ones(4, Rational(1));
  CHECK(p.evaluate(ones) == RationalMatrix::identity(3) * Rational(6));
  const std::vector<Rational> e0{1, 0, 0, 0};
  CHECK(p.evaluate(e0) == c[0]);
  CHECK(p.evaluate(std::vector<Rational>(4)).is_zero());
}

TEST_CASE("generic_rank examples") {
  CHECK(iq::generic_rank(LinearPencil::zero(3, 2), 0) == 0);
  std::array<RationalMatrix, 4> c{RationalMatrix::identity(4), RationalMatrix::zero(4, 4), RationalMatrix::zero(4, 4),
                                  RationalMatrix::zero(4, 4)};
  CHECK(iq::generic_rank(LinearPencil(c), 0) == 4);
  CHECK(iq::generic_rank(column_pencil(skew(1, 0, 0, 0, 0, 1)), 0) == 1);
}

TEST_CASE("injectivity of charge-one column pencils") {
  CHECK(iq::is_injective_everywhere(column_pencil(skew(1, 0, 0, 0, 0, 1))).answer == Answer::Yes);

  const auto degenerate = column_pencil(skew(1, 0, 0, 0, 0, 0));
  const auto v = iq::is_injective_everywhere(degenerate);
  CHECK(v.answer == Answer::No);
  REQUIRE(v.certificate);
  CHECK(iq::verify_certificate(degenerate, *v.certificate));
  // The certificate point lies in the kernel of M.
  REQUIRE(v.certificate->kind == iq::PencilCertificate::Kind::RankDropPoint);
  CHECK((skew(1, 0, 0, 0, 0, 0) * v.certificate->point) == std::vector<Rational>(4));

  const auto zero = iq::is_injective_everywhere(LinearPencil::zero(4, 1));
  CHECK(zero.answer == Answer::No);
  CHECK(zero.certificate.has_value());
}

TEST_CASE("fail locus codimension examples") {
  CHECK(iq::fail_locus_codim_at_least_2(column_pencil(skew(1, 0, 0, 0, 0, 0)), PencilMode::Injective).answer ==
        Answer::Yes);
  CHECK(iq::fail_locus_codim_at_least_2(LinearPencil::zero(4, 1), PencilMode::Injective).answer == Answer::No);
  // 1x4 row pencil with canonical rows: v(lambda) = lambda^T, never zero.
  std::array<RationalMatrix, 4> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i] = RationalMatrix(1, 4);
    rows[i](0, i) = 1;
  }
  CHECK(iq::fail_locus_codim_at_least_2(LinearPencil(rows), PencilMode::Surjective).answer == Answer::Yes);
  CHECK(iq::is_surjective_everywhere(LinearPencil(rows)).answer == Answer::Yes);
}

TEST_CASE("a pencil whose determinant is a surface has codimension one failure") {
  // 2x2 pencil [[x0, x1], [x2, x3]]: fails on the quadric x0 x3 - x1 x2 = 0.
  std::array<RationalMatrix, 4> c;
  for (std::size_t i = 0; i < 4; ++i) {
    c[i] = RationalMatrix(2, 2);
    c[i](i / 2, i % 2) = 1;
  }
  const LinearPencil p(c);
  const auto v = iq::fail_locus_codim_at_least_2(p, PencilMode::Injective, 3);
  CHECK(v.answer == Answer::No);
  REQUIRE(v.certificate);
  CHECK(iq::verify_certificate(p, *v.certificate));
  CHECK(iq::is_injective_everywhere(p).answer == Answer::No);
}

TEST_CASE("property: No verdicts always carry verifiable certificates") {
  iq::Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(2, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 3));
    std::array<RationalMatrix, 4> c;
    for (auto& m : c) m = rng.random_matrix(rows, cols);
    if (t % 3 == 0) c[3] = RationalMatrix::zero(rows, cols);
    if (t % 5 == 0)
      for (auto& m : c)
        for (std::size_t r = 0; r < rows; ++r) m(r, 0) = Rational(0);  // common kernel e_0
    const LinearPencil p(c);
    if (rows < cols) continue;
    const auto v = iq::is_injective_everywhere(p, static_cast<std::uint64_t>(t));
    if (v.answer == Answer::No) {
      REQUIRE(v.certificate);
      CHECK(iq::verify_certificate(p, *v.certificate));
    }
    if (t % 5 == 0) CHECK(v.answer == Answer::No);
    // Exact for <= 2 columns.
    if (cols <= 2) CHECK(v.answer != Answer::ProbablyYes);
  }
}

TEST_CASE("property: transpose swaps injectivity and surjectivity") {
  iq::Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    std::array<RationalMatrix, 4> c;
    for (auto& m : c) m = rng.random_matrix(2, 4);
    const LinearPencil p(c);
    CHECK(iq::is_surjective_everywhere(p, 5).answer == iq::is_injective_everywhere(p.transpose(), 5).answer);
  }
}
