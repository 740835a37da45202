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

#include "instanton_quiver.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "iq/charge_one.hpp"
#include "iq/monad.hpp"
#include "iq/stability.hpp"
#include "iq/svg.hpp"
#include "iq/text_format.hpp"

struct iq_rep {
  iq::QuiverRep value;
};

struct iq_monad {
  iq::Monad value;
};

struct iq_chambers {
  iq::WallArrangement value;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

iq_status fail(iq_status s, const char* what, std::size_t line = 0) {
  g_last_error = what;
  g_last_error_line = line;
  return s;
}

template <typename Fn>
iq_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    g_last_error_line = 0;
    return IQ_OK;
  } catch (const iq::ParseError& e) {
    return fail(IQ_ERR_PARSE, e.what(), e.line());
  } catch (const iq::GenerationFailed& e) {
    return fail(IQ_ERR_GENERATION_FAILED, e.what());
  } catch (const iq::WrongDim& e) {
    return fail(IQ_ERR_SHAPE, e.what());
  } catch (const iq::WrongShape& e) {
    return fail(IQ_ERR_SHAPE, e.what());
  } catch (const iq::ShapeError& e) {
    return fail(IQ_ERR_SHAPE, e.what());
  } catch (const iq::RelationsViolated& e) {
    return fail(IQ_ERR_RELATIONS, e.what());
  } catch (const iq::CompositeNonzero& e) {
    return fail(IQ_ERR_RELATIONS, e.what());
  } catch (const iq::NotGloballySurjective& e) {
    return fail(IQ_ERR_NOT_GLOBALLY_SURJECTIVE, e.what());
  } catch (const IoError& e) {
    return fail(IQ_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(IQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(IQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(IQ_ERR_INVALID_ARGUMENT, "index out of range");
  } catch (const std::exception& e) {
    return fail(IQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IQ_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + " is NULL");
}

iq::Rational parse_rational(const char* s, const char* name) {
  require(s, name);
  try {
    return iq::Rational::parse(s);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(name) + ": " + e.what());
  }
}

iq_verdict to_c(const iq::PencilVerdict& v) {
  iq_verdict out{};
  out.answer = v.answer == iq::Answer::Yes ? IQ_ANSWER_YES
                                           : (v.answer == iq::Answer::No ? IQ_ANSWER_NO : IQ_ANSWER_PROBABLY_YES);
  out.rounds = v.rounds;
  out.has_certificate = v.certificate.has_value();
  return out;
}

void copy_dim(const iq::DimVector& d, size_t out[3]) {
  out[0] = d.s_minus1;
  out[1] = d.s0;
  out[2] = d.s1;
}

iq_stability to_c(iq::StabilityVerdict::Kind k) {
  switch (k) {
    case iq::StabilityVerdict::Kind::Stable:
      return IQ_STABLE;
    case iq::StabilityVerdict::Kind::SemistableOnly:
      return IQ_SEMISTABLE_ONLY;
    case iq::StabilityVerdict::Kind::Unstable:
      return IQ_UNSTABLE;
  }
  return IQ_UNSTABLE;
}

void fill(const iq::StabilityVerdict& v, iq_stability_result* out) {
  iq_stability_result r{};
  r.kind = to_c(v.kind);
  r.has_certificate = v.certificate.has_value();
  if (v.certificate) copy_dim(*v.certificate, r.certificate);
  r.max_value = dup(v.max_value.to_string());
  *out = r;
}

iq::StabilityParam theta_of(const char* alpha, const char* gamma, std::size_t n) {
  // Parsed into locals: a throw inside a braced aggregate leaks on GCC 11.
  auto a = parse_rational(alpha, "alpha");
  auto g = parse_rational(gamma, "gamma");
  return {std::move(a), std::move(g), n};
}

}  // namespace

extern "C" {

const char* iq_version(void) { return "1.0.0"; }

const char* iq_status_name(iq_status s) {
  switch (s) {
    case IQ_OK:
      return "OK";
    case IQ_ERR_PARSE:
      return "ParseError";
    case IQ_ERR_SHAPE:
      return "WrongDim";
    case IQ_ERR_RELATIONS:
      return "RelationsViolated";
    case IQ_ERR_NOT_GLOBALLY_SURJECTIVE:
      return "NotGloballySurjective";
    case IQ_ERR_GENERATION_FAILED:
      return "GenerationFailed";
    case IQ_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case IQ_ERR_IO:
      return "IoError";
    case IQ_ERR_INTERNAL:
      return "InternalError";
  }
  return "?";
}

const char* iq_last_error(void) { return g_last_error.c_str(); }
size_t iq_last_error_line(void) { return g_last_error_line; }
void iq_string_free(char* s) { std::free(s); }

// ---- files -----------------------------------------------------------------

iq_status iq_read_text_file(const char* path, char** out_text) {
  return guard([&] {
    require(path, "path");
    require(out_text, "out_text");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open '") + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    *out_text = dup(ss.str());
  });
}

iq_status iq_write_text_file(const char* path, const char* text) {
  return guard([&] {
    require(path, "path");
    require(text, "text");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(std::string("cannot write '") + path + "'");
    out << text;
    if (!out) throw IoError(std::string("write failed for '") + path + "'");
  });
}

iq_file_kind iq_detect_file_kind(const char* text) {
  if (!text) return IQ_FILE_UNKNOWN;
  switch (iq::detect_kind(text)) {
    case iq::FileKind::Qrep:
      return IQ_FILE_QREP;
    case iq::FileKind::Monad:
      return IQ_FILE_MONAD;
    case iq::FileKind::Unknown:
      break;
  }
  return IQ_FILE_UNKNOWN;
}

// ---- representations -------------------------------------------------------

iq_status iq_rep_parse(const char* text, iq_rep** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new iq_rep{iq::read_qrep(text)};
  });
}

iq_status iq_rep_serialize(const iq_rep* r, char** out_text) {
  return guard([&] {
    require(r, "rep");
    require(out_text, "out_text");
    *out_text = dup(iq::write_qrep(r->value));
  });
}

iq_status iq_rep_clone(const iq_rep* r, iq_rep** out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    *out = new iq_rep{r->value};
  });
}

void iq_rep_free(iq_rep* r) { delete r; }

void iq_rep_dim(const iq_rep* r, size_t out_dim[3]) {
  if (!r || !out_dim) return;
  copy_dim(r->value.dim(), out_dim);
}

int iq_rep_equal(const iq_rep* a, const iq_rep* b) { return a && b && a->value == b->value; }

iq_status iq_rep_from_p5_point(const char* const coords[6], iq_rep** out) {
  return guard([&] {
    require(coords, "coords");
    require(out, "out");
    std::array<iq::Rational, 6> c;
    for (std::size_t i = 0; i < 6; ++i) c[i] = parse_rational(coords[i], "coordinate");
    *out = new iq_rep{iq::from_p5_point(c)};
  });
}

iq_status iq_rep_sample_charge1(iq_charge1_sample cls, uint64_t seed, iq_rep** out) {
  return guard([&] {
    require(out, "out");
    iq::Charge1Sample c;
    switch (cls) {
      case IQ_SAMPLE_LOCALLY_FREE:
        c = iq::Charge1Sample::LocallyFree;
        break;
      case IQ_SAMPLE_GLOBALLY_SURJECTIVE_RANK2:
        c = iq::Charge1Sample::GloballySurjectiveRank2;
        break;
      case IQ_SAMPLE_GLOBALLY_INJECTIVE_RANK2:
        c = iq::Charge1Sample::GloballyInjectiveRank2;
        break;
      case IQ_SAMPLE_DOUBLY_DEGENERATE:
        c = iq::Charge1Sample::DoublyDegenerate;
        break;
      default:
        throw std::invalid_argument("unknown sample class");
    }
    iq::Rng rng(seed);
    auto r = iq::sample_charge1(c, rng);
    *out = new iq_rep{iq::random_gauge(r, rng)};
  });
}

iq_status iq_check_relations(const iq_rep* r, iq_relation_report* out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    const auto c = iq::check_relations(r->value);
    *out = iq_relation_report{c.holds ? 1 : 0, c.i, c.j};
  });
}

iq_status iq_rep_pencil_report(const iq_rep* r, uint64_t seed, iq_pencil_report* out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    const auto p = iq::pencil_report(r->value, seed);
    *out = iq_pencil_report{to_c(p.globally_injective), to_c(p.locally_injective), to_c(p.globally_surjective),
                            to_c(p.locally_surjective)};
  });
}

iq_status iq_hom_space_dim(const iq_rep* a, const iq_rep* b, size_t* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = iq::hom_space_dim(a->value, b->value);
  });
}

iq_status iq_subrep_exists(const iq_rep* r, const size_t dim[3], uint64_t seed, iq_search_result* out,
                           int* out_verified) {
  return guard([&] {
    require(r, "rep");
    require(dim, "dim");
    require(out, "out");
    iq::SubrepSearch search;
    search.seed = seed;
    const auto res = iq::subrep_exists(r->value, {dim[0], dim[1], dim[2]}, search);
    *out = res.kind == iq::SubrepResult::Kind::Yes
               ? IQ_SEARCH_YES
               : (res.kind == iq::SubrepResult::Kind::No ? IQ_SEARCH_NO : IQ_SEARCH_UNKNOWN);
    if (out_verified) *out_verified = res.witness && iq::verify_witness(r->value, *res.witness);
  });
}

// ---- monads ----------------------------------------------------------------

iq_status iq_monad_parse(const char* text, iq_monad** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new iq_monad{iq::read_monad(text)};
  });
}

iq_status iq_monad_serialize(const iq_monad* m, char** out_text) {
  return guard([&] {
    require(m, "monad");
    require(out_text, "out_text");
    *out_text = dup(iq::write_monad(m->value));
  });
}

void iq_monad_free(iq_monad* m) { delete m; }
size_t iq_monad_charge(const iq_monad* m) { return m ? m->value.charge() : 0; }
int iq_monad_equal(const iq_monad* a, const iq_monad* b) { return a && b && a->value == b->value; }

iq_status iq_functor_F(const iq_monad* m, iq_rep** out) {
  return guard([&] {
    require(m, "monad");
    require(out, "out");
    *out = new iq_rep{iq::functor_F(m->value)};
  });
}

iq_status iq_functor_F_inverse(const iq_rep* r, iq_monad** out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    *out = new iq_monad{iq::functor_F_inverse(r->value)};
  });
}

iq_status iq_monad_diagnose(const iq_monad* m, uint64_t seed, iq_diagnosis* out) {
  return guard([&] {
    require(m, "monad");
    require(out, "out");
    const auto d = iq::diagnose(m->value, seed);
    iq_diagnosis c{};
    c.beta_surjective_everywhere = to_c(d.beta_surjective_everywhere);
    c.alpha_injective_everywhere = to_c(d.alpha_injective_everywhere);
    c.alpha_fail_codim2 = to_c(d.alpha_fail_codim2);
    switch (d.sheaf_type) {
      case iq::SheafType::LocallyFree:
        c.sheaf_type = IQ_SHEAF_LOCALLY_FREE;
        break;
      case iq::SheafType::TorsionFreeNotLF:
        c.sheaf_type = IQ_SHEAF_TORSION_FREE_NOT_LF;
        break;
      case iq::SheafType::NotInstanton:
        c.sheaf_type = IQ_SHEAF_NOT_INSTANTON;
        break;
      case iq::SheafType::Undetermined:
        c.sheaf_type = IQ_SHEAF_UNDETERMINED;
        break;
    }
    *out = c;
  });
}

const char* iq_sheaf_type_name(iq_sheaf_type t) {
  switch (t) {
    case IQ_SHEAF_LOCALLY_FREE:
      return "LocallyFree";
    case IQ_SHEAF_TORSION_FREE_NOT_LF:
      return "TorsionFreeNotLF";
    case IQ_SHEAF_NOT_INSTANTON:
      return "NotInstanton";
    case IQ_SHEAF_UNDETERMINED:
      return "Undetermined";
  }
  return "?";
}

iq_status iq_generate_instanton(size_t n, iq_instanton_kind kind, uint64_t seed, unsigned max_attempts,
                                iq_monad** out, unsigned* out_attempts) {
  return guard([&] {
    require(out, "out");
    iq::InstantonKind k;
    switch (kind) {
      case IQ_KIND_LOCALLY_FREE:
        k = iq::InstantonKind::LocallyFree;
        break;
      case IQ_KIND_TORSION_FREE:
        k = iq::InstantonKind::TorsionFree;
        break;
      case IQ_KIND_ANY:
        k = iq::InstantonKind::Any;
        break;
      default:
        throw std::invalid_argument("unknown instanton kind");
    }
    try {
      *out = new iq_monad{iq::generate_instanton(n, k, seed, max_attempts)};
    } catch (const iq::GenerationFailed& e) {
      if (out_attempts) *out_attempts = e.attempts();
      throw;
    }
  });
}

// ---- stability -------------------------------------------------------------

void iq_stability_result_clear(iq_stability_result* r) {
  if (!r) return;
  std::free(r->max_value);
  r->max_value = nullptr;
}

const char* iq_stability_name(iq_stability s) {
  switch (s) {
    case IQ_STABLE:
      return "Stable";
    case IQ_SEMISTABLE_ONLY:
      return "SemistableOnly";
    case IQ_UNSTABLE:
      return "Unstable";
  }
  return "?";
}

iq_status iq_stability_charge1(const iq_rep* r, const char* alpha, const char* gamma, iq_stability_result* out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    fill(iq::is_stable_charge1(r->value, theta_of(alpha, gamma, 1)), out);
  });
}

void iq_heuristic_result_clear(iq_heuristic_result* r) {
  if (!r) return;
  std::free(r->max_value);
  r->max_value = nullptr;
}

iq_status iq_stability_heuristic(const iq_rep* r, const char* alpha, const char* gamma, uint64_t seed,
                                 iq_heuristic_result* out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    const auto n = r->value.dim().s_minus1;
    if (n == 0) throw iq::WrongDim("charge must be positive");
    iq::SubrepSearch search;
    search.seed = seed;
    const auto h = iq::heuristic_stability(r->value, theta_of(alpha, gamma, n), search);
    iq_heuristic_result c{};
    c.certified_unstable = h.kind == iq::HeuristicStability::Kind::CertifiedUnstable;
    if (h.certificate) {
      copy_dim(h.certificate->dim, c.certificate);
      c.certificate_verified = iq::verify_witness(r->value, *h.certificate);
    }
    c.subreps_examined = h.subreps_examined;
    c.negative_on_candidates = h.negative_on_candidates;
    c.has_candidate_violation = h.candidate_violation.has_value();
    if (h.candidate_violation) copy_dim(*h.candidate_violation, c.candidate_violation);
    c.max_value = dup(h.max_value.to_string());
    *out = c;
  });
}

void iq_classification_clear(iq_classification* c) {
  if (!c) return;
  iq_stability_result_clear(&c->verdict);
  std::free(c->skew_form);
  std::free(c->pfaffian);
  c->skew_form = nullptr;
  c->pfaffian = nullptr;
}

const char* iq_charge1_kind_name(iq_charge1_kind k) {
  switch (k) {
    case IQ_C1_LOCALLY_FREE_INSTANTON:
      return "LocallyFreeInstanton";
    case IQ_C1_NON_LOCALLY_FREE_INSTANTON:
      return "NonLocallyFreeInstanton";
    case IQ_C1_PERVERSE_DUAL:
      return "PerverseDual";
    case IQ_C1_NOT_STABLE_HERE:
      return "NotStableHere";
    case IQ_C1_EMPTY_REGION:
      return "EmptyRegion";
    case IQ_C1_STRICTLY_SEMISTABLE:
      return "StrictlySemistable";
  }
  return "?";
}

const char* iq_charge1_region_name(iq_charge1_region r) {
  switch (r) {
    case IQ_REGION_Q4_BELOW_WALL:
      return "Q4belowWall";
    case IQ_REGION_Q4_ABOVE_WALL:
      return "Q4aboveWall";
    case IQ_REGION_WALL:
      return "Wall";
    case IQ_REGION_OUTSIDE_Q4:
      return "OutsideQ4";
  }
  return "?";
}

iq_status iq_classify_charge1(const iq_rep* r, const char* alpha, const char* gamma, iq_classification* out) {
  return guard([&] {
    require(r, "rep");
    require(out, "out");
    const auto cls = iq::classify(r->value, theta_of(alpha, gamma, 1));
    iq_classification c{};
    c.kind = static_cast<iq_charge1_kind>(static_cast<int>(cls.kind));
    c.region = static_cast<iq_charge1_region>(static_cast<int>(cls.region));
    c.rank_m = cls.rank_m;
    c.rank_n = cls.rank_n;
    std::optional<iq::SkewForm> form;
    if (cls.rank_n == 4 && iq::check_relations(r->value).holds) {
      try {
        form = iq::normal_form(r->value);
      } catch (const iq::AllZero&) {
      }
    }
    if (form) {
      c.has_skew_form = 1;
      c.skew_form = dup(form->to_string());
      c.pfaffian = dup(form->pfaffian().to_string());
      c.on_quadric = iq::quadric_membership(*form) == iq::Quadric::OnQuadric;
    }
    fill(cls.verdict, &c.verdict);
    *out = c;
  });
}

iq_status iq_verify_theta_eps(size_t n, const char* eps, int* out_ok, size_t out_counterexample[3]) {
  return guard([&] {
    require(out_ok, "out_ok");
    const auto rep = iq::verify_theta_eps(n, parse_rational(eps, "eps"));
    *out_ok = rep.ok;
    if (rep.counterexample && out_counterexample) copy_dim(*rep.counterexample, out_counterexample);
  });
}

// ---- walls and chambers ----------------------------------------------------

iq_status iq_chambers_compute(size_t n, iq_chambers** out) {
  return guard([&] {
    require(out, "out");
    if (n == 0) throw std::invalid_argument("charge must be positive");
    *out = new iq_chambers{iq::wall_arrangement(n)};
  });
}

void iq_chambers_free(iq_chambers* c) { delete c; }
size_t iq_chambers_wall_count(const iq_chambers* c) { return c ? c->value.walls.size() : 0; }

iq_status iq_chambers_wall_direction(const iq_chambers* c, size_t i, char** out) {
  return guard([&] {
    require(c, "chambers");
    require(out, "out");
    *out = dup(c->value.walls.at(i).direction.to_string());
  });
}

size_t iq_chambers_wall_generator_count(const iq_chambers* c, size_t i) {
  if (!c || i >= c->value.walls.size()) return 0;
  return c->value.walls[i].generators.size();
}

iq_status iq_chambers_wall_generator(const iq_chambers* c, size_t i, size_t k, size_t out_dim[3]) {
  return guard([&] {
    require(c, "chambers");
    require(out_dim, "out_dim");
    copy_dim(c->value.walls.at(i).generators.at(k), out_dim);
  });
}

size_t iq_chambers_chamber_count(const iq_chambers* c) { return c ? c->value.chambers.size() : 0; }

iq_status iq_chambers_chamber(const iq_chambers* c, size_t i, char** out_from, char** out_to, char** out_sample) {
  return guard([&] {
    require(c, "chambers");
    require(out_from, "out_from");
    require(out_to, "out_to");
    require(out_sample, "out_sample");
    const auto& ch = c->value.chambers.at(i);
    const auto sample = "(" + ch.sample_alpha.to_string() + "," + ch.sample_gamma.to_string() + ")";
    *out_from = dup(ch.sector.from.to_string());
    *out_to = dup(ch.sector.to.to_string());
    *out_sample = dup(sample);
  });
}

iq_status iq_effective_walls_charge1(const iq_rep* const* reps, size_t count, char** out) {
  return guard([&] {
    require(out, "out");
    if (count) require(reps, "reps");
    std::vector<iq::QuiverRep> sample;
    for (size_t i = 0; i < count; ++i) {
      require(reps[i], "rep");
      sample.push_back(reps[i]->value);
    }
    std::string text;
    for (const auto& r : iq::effective_walls_charge1(sample)) text += r.to_string() + "\n";
    *out = dup(text);
  });
}

iq_status iq_render_svg(const iq_rep* overlay, char** out_svg) {
  return guard([&] {
    require(out_svg, "out_svg");
    std::optional<iq::SvgOverlay> ov;
    if (overlay) ov = iq::SvgOverlay{iq::stability_region_charge1(overlay->value), "input representation"};
    *out_svg = dup(iq::render_regions_svg(ov));
  });
}

}  // extern "C"
