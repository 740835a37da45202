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

// Command-line front end. Talks to the library only through instanton_quiver.h.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "instanton_quiver.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kGenerationFailed = 3;

struct RepDeleter {
  void operator()(iq_rep* r) const { iq_rep_free(r); }
};
struct MonadDeleter {
  void operator()(iq_monad* m) const { iq_monad_free(m); }
};
struct ChambersDeleter {
  void operator()(iq_chambers* c) const { iq_chambers_free(c); }
};
using RepPtr = std::unique_ptr<iq_rep, RepDeleter>;
using MonadPtr = std::unique_ptr<iq_monad, MonadDeleter>;
using ChambersPtr = std::unique_ptr<iq_chambers, ChambersDeleter>;

// Owns a string handed out by the library.
class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { iq_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

// Thrown for library errors; carries the exit code to use.
struct Failure {
  int exit_code;
};

void check(iq_status s, int exit_code = kInputError) {
  if (s == IQ_OK) return;
  std::cerr << iq_status_name(s) << ": " << iq_last_error() << "\n";
  throw Failure{s == IQ_ERR_GENERATION_FAILED ? kGenerationFailed : exit_code};
}

std::string dim_string(const size_t d[3]) {
  return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

std::string verdict_string(const iq_verdict& v) {
  switch (v.answer) {
    case IQ_ANSWER_YES:
      return "Yes";
    case IQ_ANSWER_NO:
      return v.has_certificate ? "No (certificate)" : "No";
    case IQ_ANSWER_PROBABLY_YES:
      return "ProbablyYes(" + std::to_string(v.rounds) + ")";
  }
  return "?";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("INSTANTON_QUIVER_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring malformed INSTANTON_QUIVER_SEED='" << env << "'\n";
  }
  return 0;
}

struct Loaded {
  RepPtr rep;
  MonadPtr monad;  // set when the file was a MONAD
};

Loaded load(const std::string& path) {
  CString text;
  check(iq_read_text_file(path.c_str(), text.out()));
  Loaded l;
  switch (iq_detect_file_kind(text.str().c_str())) {
    case IQ_FILE_QREP: {
      iq_rep* r = nullptr;
      check(iq_rep_parse(text.str().c_str(), &r));
      l.rep.reset(r);
      break;
    }
    case IQ_FILE_MONAD: {
      iq_monad* m = nullptr;
      check(iq_monad_parse(text.str().c_str(), &m));
      l.monad.reset(m);
      iq_rep* r = nullptr;
      check(iq_functor_F(m, &r));
      l.rep.reset(r);
      break;
    }
    case IQ_FILE_UNKNOWN:
      std::cerr << "ParseError: line 1: " << path << " is neither QREP nor MONAD\n";
      throw Failure{kInputError};
  }
  return l;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, std::uint64_t seed) {
  const auto l = load(path);
  size_t d[3];
  iq_rep_dim(l.rep.get(), d);
  std::cout << "command: check\ninput: " << path << "\nseed: " << seed << "\n";
  std::cout << "format: " << (l.monad ? "MONAD" : "QREP") << "\ndim: " << dim_string(d) << "\n";

  iq_relation_report rel{};
  check(iq_check_relations(l.rep.get(), &rel));
  if (rel.holds)
    std::cout << "relations: OK\n";
  else
    std::cout << "relations: Violation(" << rel.i << "," << rel.j << ")\n";

  iq_pencil_report p{};
  check(iq_rep_pencil_report(l.rep.get(), seed, &p));
  std::cout << "globally injective: " << verdict_string(p.globally_injective) << "\n"
            << "locally injective: " << verdict_string(p.locally_injective) << "\n"
            << "globally surjective: " << verdict_string(p.globally_surjective) << "\n"
            << "locally surjective: " << verdict_string(p.locally_surjective) << "\n";

  if (l.monad && rel.holds) {
    iq_diagnosis diag{};
    check(iq_monad_diagnose(l.monad.get(), seed, &diag));
    std::cout << "beta surjective everywhere: " << verdict_string(diag.beta_surjective_everywhere) << "\n"
              << "alpha injective everywhere: " << verdict_string(diag.alpha_injective_everywhere) << "\n"
              << "alpha fail locus codim >= 2: " << verdict_string(diag.alpha_fail_codim2) << "\n"
              << "sheaf: " << iq_sheaf_type_name(diag.sheaf_type) << "\n";
  }
  return rel.holds ? kOk : kNegative;
}

int cmd_stability(const std::string& path, const std::string& alpha, const std::string& gamma, bool heuristic,
                  std::uint64_t seed) {
  const auto l = load(path);
  size_t d[3];
  iq_rep_dim(l.rep.get(), d);
  std::cout << "command: stability\ninput: " << path << "\nseed: " << seed << "\ntheta: alpha=" << alpha
            << " gamma=" << gamma << "\ndim: " << dim_string(d) << "\n";
  const bool charge1 = d[0] == 1 && d[1] == 4 && d[2] == 1;

  if (!heuristic) {
    if (!charge1) {
      std::cerr << "NonExactRequested: exact stability is implemented for dimension vector (1,4,1) only; "
                   "pass --heuristic for the necessary-condition analysis\n";
      return kInputError;
    }
    iq_stability_result res{};
    check(iq_stability_charge1(l.rep.get(), alpha.c_str(), gamma.c_str(), &res));
    std::cout << "mode: exact\n";
    if (res.kind == IQ_UNSTABLE)
      std::cout << "Unstable, certificate " << dim_string(res.certificate) << "\n";
    else
      std::cout << iq_stability_name(res.kind) << "\n";
    std::cout << "max theta.s: " << res.max_value << "\n";
    const int code = res.kind == IQ_STABLE ? kOk : kNegative;
    iq_stability_result_clear(&res);
    return code;
  }

  iq_heuristic_result h{};
  check(iq_stability_heuristic(l.rep.get(), alpha.c_str(), gamma.c_str(), seed, &h));
  std::cout << "mode: necessary-condition analysis (not a stability proof)\n"
            << "sampled subrepresentation dimension vectors: " << h.subreps_examined << "\n"
            << "max theta.s over sampled: " << h.max_value << "\n";
  int code = kOk;
  if (h.certified_unstable) {
    std::cout << "Unstable (certified), certificate " << dim_string(h.certificate)
              << (h.certificate_verified ? ", witness verified" : ", witness NOT verified") << "\n";
    code = kNegative;
  } else {
    std::cout << "no destabilizing subrepresentation found\n";
  }
  if (h.negative_on_candidates)
    std::cout << "theta.s < 0 on every candidate dimension vector: yes\n";
  else
    std::cout << "theta.s < 0 on every candidate dimension vector: no, fails at "
              << dim_string(h.candidate_violation) << "\n";
  iq_heuristic_result_clear(&h);
  return code;
}

std::optional<std::pair<long long, long long>> parse_pair(const std::string& s) {
  // "(x,y)" with integer entries, as produced for rays.
  const auto comma = s.find(',');
  if (s.size() < 5 || s.front() != '(' || s.back() != ')' || comma == std::string::npos) return std::nullopt;
  return std::make_pair(std::stoll(s.substr(1, comma - 1)), std::stoll(s.substr(comma + 1, s.size() - comma - 2)));
}

// "gamma = -alpha", "alpha = 0", "gamma = alpha/3", ...
std::string line_equation(const std::string& ray) {
  const auto p = parse_pair(ray);
  if (!p) return ray;
  const auto [x, y] = *p;
  if (x == 0) return "alpha = 0";
  if (y == 0) return "gamma = 0";
  // Primitive direction, so y/x is already in lowest terms.
  long long num = y;
  long long den = x;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::string s = num < 0 ? "-" : "";
  const long long a = num < 0 ? -num : num;
  if (a != 1) s += std::to_string(a);
  s += "alpha";
  if (den != 1) s += "/" + std::to_string(den);
  return "gamma = " + s;
}

int cmd_chambers(std::size_t n, const std::string& svg_path, bool certify, const std::string& overlay_path,
                 std::uint64_t seed) {
  if (n == 0) {
    std::cerr << "InvalidArgument: charge must be positive\n";
    return kInputError;
  }
  if (certify && n != 1) {
    std::cerr << "InvalidArgument: --certify needs charge 1 (exact subrepresentation sets)\n";
    return kInputError;
  }
  iq_chambers* raw = nullptr;
  check(iq_chambers_compute(n, &raw));
  ChambersPtr ch(raw);

  std::cout << "command: chambers\ncharge: " << n << "\nseed: " << seed << "\n";
  const char* label = n == 1 ? "candidate" : "candidate (not certified)";
  for (size_t i = 0; i < iq_chambers_wall_count(ch.get()); ++i) {
    CString dir;
    check(iq_chambers_wall_direction(ch.get(), i, dir.out()));
    std::cout << "wall " << label << ": direction " << dir.str() << "  " << line_equation(dir.str())
              << "  generators";
    for (size_t k = 0; k < iq_chambers_wall_generator_count(ch.get(), i); ++k) {
      size_t d[3];
      check(iq_chambers_wall_generator(ch.get(), i, k, d));
      std::cout << " " << dim_string(d);
    }
    std::cout << "\n";
  }
  for (size_t i = 0; i < iq_chambers_chamber_count(ch.get()); ++i) {
    CString from, to, sample;
    check(iq_chambers_chamber(ch.get(), i, from.out(), to.out(), sample.out()));
    std::cout << "chamber: from " << from.str() << " to " << to.str() << ", sample point " << sample.str() << "\n";
  }

  if (certify) {
    std::vector<RepPtr> owned;
    std::vector<const iq_rep*> reps;
    for (int cls = IQ_SAMPLE_LOCALLY_FREE; cls <= IQ_SAMPLE_DOUBLY_DEGENERATE; ++cls) {
      iq_rep* r = nullptr;
      check(iq_rep_sample_charge1(static_cast<iq_charge1_sample>(cls), seed + static_cast<std::uint64_t>(cls), &r));
      owned.emplace_back(r);
      reps.push_back(r);
    }
    CString walls;
    check(iq_effective_walls_charge1(reps.data(), reps.size(), walls.out()));
    std::cout << "effective walls (certified over the built-in sample of all four classes):";
    const auto text = walls.str();
    if (text.empty()) std::cout << " none";
    std::cout << "\n";
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto end = text.find('\n', pos);
      const auto ray = text.substr(pos, end - pos);
      std::cout << "  " << ray << "  " << line_equation(ray) << "\n";
      pos = end + 1;
    }
  }

  if (!svg_path.empty()) {
    Loaded overlay;
    if (!overlay_path.empty()) overlay = load(overlay_path);
    CString svg;
    check(iq_render_svg(overlay.rep.get(), svg.out()));
    check(iq_write_text_file(svg_path.c_str(), svg.str().c_str()));
    std::cout << "svg: " << svg_path << "\n";
  }
  return kOk;
}

int cmd_generate(std::size_t n, const std::string& kind, std::uint64_t seed, const std::string& out_prefix,
                 unsigned attempts) {
  iq_instanton_kind k;
  if (kind == "locally-free")
    k = IQ_KIND_LOCALLY_FREE;
  else if (kind == "torsion-free")
    k = IQ_KIND_TORSION_FREE;
  else if (kind == "any")
    k = IQ_KIND_ANY;
  else {
    std::cerr << "InvalidArgument: unknown kind '" << kind << "'\n";
    return kInputError;
  }
  std::cout << "command: generate\ncharge: " << n << "\nkind: " << kind << "\nseed: " << seed << "\n";
  iq_monad* raw = nullptr;
  unsigned used = 0;
  const auto status = iq_generate_instanton(n, k, seed, attempts, &raw, &used);
  if (status == IQ_ERR_GENERATION_FAILED) {
    std::cerr << "GenerationFailed: " << iq_last_error() << "\n";
    std::cout << "attempts: " << used << "\n";
    return kGenerationFailed;
  }
  check(status);
  MonadPtr m(raw);

  iq_rep* rraw = nullptr;
  check(iq_functor_F(m.get(), &rraw));
  RepPtr r(rraw);

  CString monad_text, rep_text;
  check(iq_monad_serialize(m.get(), monad_text.out()));
  check(iq_rep_serialize(r.get(), rep_text.out()));
  const auto monad_path = out_prefix + ".monad";
  const auto rep_path = out_prefix + ".qrep";
  check(iq_write_text_file(monad_path.c_str(), monad_text.str().c_str()));
  check(iq_write_text_file(rep_path.c_str(), rep_text.str().c_str()));

  iq_relation_report rel{};
  check(iq_check_relations(r.get(), &rel));
  iq_diagnosis diag{};
  check(iq_monad_diagnose(m.get(), seed, &diag));
  std::cout << "wrote: " << monad_path << "\nwrote: " << rep_path << "\n"
            << "relations: " << (rel.holds ? "OK" : "Violation") << "\n"
            << "beta surjective everywhere: " << verdict_string(diag.beta_surjective_everywhere) << "\n"
            << "alpha injective everywhere: " << verdict_string(diag.alpha_injective_everywhere) << "\n"
            << "alpha fail locus codim >= 2: " << verdict_string(diag.alpha_fail_codim2) << "\n"
            << "sheaf: " << iq_sheaf_type_name(diag.sheaf_type) << "\n";
  return kOk;
}

int cmd_classify(const std::string& path, const std::string& alpha, const std::string& gamma,
                 std::uint64_t seed) {
  const auto l = load(path);
  iq_classification c{};
  check(iq_classify_charge1(l.rep.get(), alpha.c_str(), gamma.c_str(), &c));
  std::cout << "command: classify\ninput: " << path << "\nseed: " << seed << "\ntheta: alpha=" << alpha
            << " gamma=" << gamma << "\n";
  std::cout << iq_charge1_kind_name(c.kind);
  // pf is printed off the quadric only; on it pf == 0 by definition.
  if (c.has_skew_form) {
    if (!c.on_quadric) std::cout << ", pf=" << c.pfaffian;
    std::cout << ", " << (c.on_quadric ? "OnQuadric" : "OffQuadric");
  }
  std::cout << "\nregion: " << iq_charge1_region_name(c.region) << "\n";
  std::cout << "verdict: " << iq_stability_name(c.verdict.kind);
  if (c.verdict.has_certificate) std::cout << ", certificate " << dim_string(c.verdict.certificate);
  std::cout << "\nrank M: " << c.rank_m << "\nrank N: " << c.rank_n << "\n";
  if (c.has_skew_form)
    std::cout << "skew form: " << c.skew_form << "\n";
  else
    std::cout << "skew form: none (not globally surjective)\n";
  const bool stable_kind = c.kind == IQ_C1_LOCALLY_FREE_INSTANTON || c.kind == IQ_C1_NON_LOCALLY_FREE_INSTANTON ||
                           c.kind == IQ_C1_PERVERSE_DUAL;
  iq_classification_clear(&c);
  return stable_kind ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for instanton representations of the (n, 2n+2, n) quiver."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(iq_version()));

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "PRNG seed (default: $INSTANTON_QUIVER_SEED or 0)");

  std::string path, alpha, gamma, svg_path, overlay_path, kind = "any", out_prefix = "instanton";
  std::size_t n = 1;
  bool heuristic = false, certify = false;
  unsigned attempts = 256;

  auto* check_cmd = app.add_subcommand("check", "Validate relations and pencil properties of a QREP or MONAD file");
  check_cmd->add_option("path", path, "input file")->required();

  auto* stab = app.add_subcommand("stability", "King stability at theta(alpha, gamma)");
  stab->add_option("path", path, "input file")->required();
  stab->add_option("--alpha", alpha, "rational p/q")->required()->allow_extra_args(false);
  stab->add_option("--gamma", gamma, "rational p/q")->required()->allow_extra_args(false);
  stab->add_flag("--heuristic", heuristic, "necessary-condition analysis for any charge");

  auto* cham = app.add_subcommand("chambers", "Candidate walls and chambers of the (alpha, gamma)-plane");
  cham->add_option("n,--n", n, "charge")->required();
  cham->add_option("--svg", svg_path, "write the charge-1 region diagram");
  cham->add_option("--overlay", overlay_path, "QREP/MONAD whose stability region is drawn on the SVG");
  cham->add_flag("--certify", certify, "exact effective walls over built-in charge-1 samples");

  auto* gen = app.add_subcommand("generate", "Sample an instanton monad");
  gen->add_option("n,--n", n, "charge")->required();
  gen->add_option("--kind", kind, "locally-free | torsion-free | any");
  gen->add_option("--out", out_prefix, "output prefix; writes PREFIX.monad and PREFIX.qrep");
  gen->add_option("--attempts", attempts, "retry bound for charge >= 2");

  auto* cls = app.add_subcommand("classify", "Charge-1 classification at theta(alpha, gamma)");
  cls->add_option("path", path, "input file")->required();
  cls->add_option("--alpha", alpha, "rational p/q")->required();
  cls->add_option("--gamma", gamma, "rational p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(path, seed);
    if (*stab) return cmd_stability(path, alpha, gamma, heuristic, seed);
    if (*cham) return cmd_chambers(n, svg_path, certify, overlay_path, seed);
    if (*gen) return cmd_generate(n, kind, seed, out_prefix, attempts);
    if (*cls) return cmd_classify(path, alpha, gamma, seed);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kInputError;
}
