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

// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "instanton_quiver.h"

namespace {

const char* kLocallyFree =
    "QREP 1 4 1\n"
    "F0\n0\n1\n0\n0\nF1\n-1\n0\n0\n0\nF2\n0\n0\n0\n1\nF3\n0\n0\n-1\n0\n"
    "G0\n1 0 0 0\nG1\n0 1 0 0\nG2\n0 0 1 0\nG3\n0 0 0 1\n";

iq_rep* parse(const char* text) {
  iq_rep* r = nullptr;
  REQUIRE(iq_rep_parse(text, &r) == IQ_OK);
  return r;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(iq_version()).size() > 0);
  CHECK(std::string(iq_status_name(IQ_OK)) == "OK");
  CHECK(std::string(iq_status_name(IQ_ERR_PARSE)) == "ParseError");
  CHECK(std::string(iq_status_name(IQ_ERR_SHAPE)) == "WrongDim");
  CHECK(std::string(iq_status_name(IQ_ERR_GENERATION_FAILED)) == "GenerationFailed");
}

TEST_CASE("parse, serialize and compare") {
  iq_rep* r = parse(kLocallyFree);
  size_t d[3];
  iq_rep_dim(r, d);
  CHECK(d[0] == 1);
  CHECK(d[1] == 4);
  CHECK(d[2] == 1);

  char* text = nullptr;
  REQUIRE(iq_rep_serialize(r, &text) == IQ_OK);
  iq_rep* again = parse(text);
  CHECK(iq_rep_equal(r, again));
  iq_string_free(text);

  const char* coords[6] = {"1", "0", "0", "0", "0", "1"};
  iq_rep* p5 = nullptr;
  REQUIRE(iq_rep_from_p5_point(coords, &p5) == IQ_OK);
  CHECK(iq_rep_equal(r, p5));

  iq_rep_free(p5);
  iq_rep_free(again);
  iq_rep_free(r);
}

TEST_CASE("errors leave outputs untouched and report lines") {
  iq_rep* r = nullptr;
  CHECK(iq_rep_parse("QREP 1 4 1\nF0\n0\n", &r) == IQ_ERR_PARSE);
  CHECK(r == nullptr);
  CHECK(iq_last_error_line() == 4);
  CHECK(std::strstr(iq_last_error(), "line 4") != nullptr);

  const char* zeros[6] = {"0", "0", "0", "0", "0", "0"};
  CHECK(iq_rep_from_p5_point(zeros, &r) == IQ_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  const char* decimal[6] = {"0.5", "0", "0", "0", "0", "0"};
  CHECK(iq_rep_from_p5_point(decimal, &r) == IQ_ERR_INVALID_ARGUMENT);

  iq_rep* lf = parse(kLocallyFree);
  iq_stability_result res{};
  CHECK(iq_stability_charge1(lf, "1", "abc", &res) == IQ_ERR_INVALID_ARGUMENT);
  iq_rep_free(lf);

  char* text = nullptr;
  CHECK(iq_read_text_file("/nonexistent/dir/file.qrep", &text) == IQ_ERR_IO);
  CHECK(text == nullptr);
  CHECK(iq_detect_file_kind("MONAD 2\n") == IQ_FILE_MONAD);
  CHECK(iq_detect_file_kind("# c\nQREP 1 1 1\n") == IQ_FILE_QREP);
  CHECK(iq_detect_file_kind("nonsense") == IQ_FILE_UNKNOWN);
}

TEST_CASE("relations and pencils") {
  iq_rep* lf = parse(kLocallyFree);
  iq_relation_report rel{};
  REQUIRE(iq_check_relations(lf, &rel) == IQ_OK);
  CHECK(rel.holds);
  iq_pencil_report p{};
  REQUIRE(iq_rep_pencil_report(lf, 0, &p) == IQ_OK);
  CHECK(p.globally_injective.answer == IQ_ANSWER_YES);
  CHECK(p.globally_surjective.answer == IQ_ANSWER_YES);
  size_t hom = 0;
  REQUIRE(iq_hom_space_dim(lf, lf, &hom) == IQ_OK);
  CHECK(hom == 1);

  const size_t dim[3] = {0, 2, 1};
  iq_search_result s = IQ_SEARCH_UNKNOWN;
  int verified = 0;
  REQUIRE(iq_subrep_exists(lf, dim, 0, &s, &verified) == IQ_OK);
  CHECK(s == IQ_SEARCH_YES);
  CHECK(verified);
  const size_t bad[3] = {1, 2, 1};
  REQUIRE(iq_subrep_exists(lf, bad, 0, &s, &verified) == IQ_OK);
  CHECK(s == IQ_SEARCH_NO);
  iq_rep_free(lf);

  std::string broken = kLocallyFree;
  broken.replace(broken.find("F0\n0\n"), 5, "F0\n1\n");
  iq_rep* v = parse(broken.c_str());
  REQUIRE(iq_check_relations(v, &rel) == IQ_OK);
  CHECK_FALSE(rel.holds);
  CHECK(rel.i == 0);
  CHECK(rel.j == 0);
  iq_rep_free(v);
}

TEST_CASE("stability and classification") {
  iq_rep* lf = parse(kLocallyFree);
  iq_stability_result res{};
  REQUIRE(iq_stability_charge1(lf, "1", "-2", &res) == IQ_OK);
  CHECK(res.kind == IQ_STABLE);
  CHECK(std::string(res.max_value) == "-1");
  iq_stability_result_clear(&res);
  CHECK(res.max_value == nullptr);

  REQUIRE(iq_stability_charge1(lf, "-1", "-1", &res) == IQ_OK);
  CHECK(res.kind == IQ_UNSTABLE);
  CHECK(res.has_certificate);
  iq_stability_result_clear(&res);

  iq_classification c{};
  REQUIRE(iq_classify_charge1(lf, "1", "-2", &c) == IQ_OK);
  CHECK(c.kind == IQ_C1_LOCALLY_FREE_INSTANTON);
  CHECK(c.region == IQ_REGION_Q4_BELOW_WALL);
  CHECK(c.has_skew_form);
  CHECK(std::string(c.skew_form) == "[1:0:0:0:0:1]");
  CHECK(std::string(c.pfaffian) == "-1");
  CHECK_FALSE(c.on_quadric);
  CHECK(std::string(iq_charge1_kind_name(c.kind)) == "LocallyFreeInstanton");
  iq_classification_clear(&c);

  iq_heuristic_result h{};
  REQUIRE(iq_stability_heuristic(lf, "1", "-2", 0, &h) == IQ_OK);
  CHECK_FALSE(h.certified_unstable);
  CHECK(h.negative_on_candidates);
  iq_heuristic_result_clear(&h);
  iq_rep_free(lf);

  iq_rep* big = parse("QREP 0 6 0\nF0\nF1\nF2\nF3\nG0\nG1\nG2\nG3\n");
  CHECK(iq_stability_charge1(big, "1", "-2", &res) == IQ_ERR_SHAPE);
  iq_rep_free(big);
}

TEST_CASE("samples, walls and chambers") {
  iq_rep* reps[4];
  for (int c = 0; c < 4; ++c) REQUIRE(iq_rep_sample_charge1(static_cast<iq_charge1_sample>(c), 5, &reps[c]) == IQ_OK);
  char* walls = nullptr;
  REQUIRE(iq_effective_walls_charge1(reps, 4, &walls) == IQ_OK);
  CHECK(std::string(walls) == "(1,-1)\n");
  iq_string_free(walls);
  for (auto* r : reps) iq_rep_free(r);

  iq_chambers* ch = nullptr;
  REQUIRE(iq_chambers_compute(1, &ch) == IQ_OK);
  CHECK(iq_chambers_wall_count(ch) == 6);
  CHECK(iq_chambers_chamber_count(ch) == 2);
  char *from = nullptr, *to = nullptr, *sample = nullptr;
  REQUIRE(iq_chambers_chamber(ch, 0, &from, &to, &sample) == IQ_OK);
  CHECK(std::string(from) == "(0,-1)");
  CHECK(std::string(to) == "(1,-1)");
  CHECK(std::string(sample) == "(1,-2)");
  iq_string_free(from);
  iq_string_free(to);
  iq_string_free(sample);
  CHECK(iq_chambers_chamber(ch, 9, &from, &to, &sample) == IQ_ERR_INVALID_ARGUMENT);
  iq_chambers_free(ch);

  int ok = 0;
  size_t cex[3];
  REQUIRE(iq_verify_theta_eps(2, "1/100", &ok, cex) == IQ_OK);
  CHECK(ok);
}

TEST_CASE("monads and generation") {
  iq_monad* m = nullptr;
  unsigned attempts = 0;
  REQUIRE(iq_generate_instanton(1, IQ_KIND_LOCALLY_FREE, 7, 16, &m, &attempts) == IQ_OK);
  CHECK(iq_monad_charge(m) == 1);
  iq_diagnosis d{};
  REQUIRE(iq_monad_diagnose(m, 0, &d) == IQ_OK);
  CHECK(d.sheaf_type == IQ_SHEAF_LOCALLY_FREE);
  CHECK(std::string(iq_sheaf_type_name(d.sheaf_type)) == "LocallyFree");

  iq_rep* r = nullptr;
  REQUIRE(iq_functor_F(m, &r) == IQ_OK);
  iq_monad* back = nullptr;
  REQUIRE(iq_functor_F_inverse(r, &back) == IQ_OK);
  CHECK(iq_monad_equal(m, back));

  char* text = nullptr;
  REQUIRE(iq_monad_serialize(m, &text) == IQ_OK);
  iq_monad* parsed = nullptr;
  REQUIRE(iq_monad_parse(text, &parsed) == IQ_OK);
  CHECK(iq_monad_equal(m, parsed));
  iq_string_free(text);

  iq_monad* none = nullptr;
  CHECK(iq_generate_instanton(3, IQ_KIND_ANY, 0, 3, &none, &attempts) == IQ_ERR_GENERATION_FAILED);
  CHECK(none == nullptr);
  CHECK(attempts == 3);

  iq_monad_free(parsed);
  iq_monad_free(back);
  iq_rep_free(r);
  iq_monad_free(m);
}

TEST_CASE("svg") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(iq_render_svg(nullptr, &a) == IQ_OK);
  REQUIRE(iq_render_svg(nullptr, &b) == IQ_OK);
  CHECK(std::string(a) == std::string(b));
  iq_string_free(a);
  iq_string_free(b);
}

TEST_CASE("null handles are rejected") {
  iq_relation_report rel{};
  CHECK(iq_check_relations(nullptr, &rel) == IQ_ERR_INVALID_ARGUMENT);
  iq_rep_free(nullptr);
  iq_monad_free(nullptr);
  iq_chambers_free(nullptr);
  iq_string_free(nullptr);
}
