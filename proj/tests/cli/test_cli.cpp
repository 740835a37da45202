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

// Runs the instanton-quiver executable and checks output and exit codes.
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef IQ_CLI_PATH
#error "IQ_CLI_PATH must name the CLI executable"
#endif
#ifndef IQ_TEST_TMPDIR
#error "IQ_TEST_TMPDIR must name a scratch directory"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr
};

Run run(const std::string& args) {
  const std::string cmd = std::string("env -u INSTANTON_QUIVER_SEED ") + IQ_CLI_PATH + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(IQ_TEST_TMPDIR) / "cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Charge-one QREP for the skew form (a..f) laid out below the diagonal.
std::string p5_qrep(const std::array<int, 6>& c) {
  const int a = c[0], b = c[1], cc = c[2], d = c[3], e = c[4], f = c[5];
  const int m[4][4] = {{0, -a, -b, -cc}, {a, 0, -d, -e}, {b, d, 0, -f}, {cc, e, f, 0}};
  std::ostringstream s;
  s << "QREP 1 4 1\n";
  for (int j = 0; j < 4; ++j) {
    s << "F" << j << "\n";
    for (int i = 0; i < 4; ++i) s << m[i][j] << "\n";
  }
  for (int i = 0; i < 4; ++i) {
    s << "G" << i << "\n";
    for (int k = 0; k < 4; ++k) s << (k == i ? 1 : 0) << (k == 3 ? "\n" : " ");
  }
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check") {
  const auto good = write_file("lf.qrep", p5_qrep({1, 0, 0, 0, 0, 1}));
  auto r = run("check " + good);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "relations: OK"));
  CHECK(contains(r.out, "dim: (1,4,1)"));
  CHECK(contains(r.out, "seed: 0"));

  auto text = p5_qrep({1, 0, 0, 0, 0, 1});
  text.replace(text.find("F0\n0\n"), 5, "F0\n1\n");  // v0 u0 = 1
  r = run("check " + write_file("bad.qrep", text));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Violation(0,0)"));

  const auto full = p5_qrep({1, 0, 0, 0, 0, 1});
  r = run("check " + write_file("trunc.qrep", full.substr(0, full.size() / 2)));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "ParseError"));
  CHECK(contains(r.out, "line "));

  r = run("check " + scratch("missing.qrep").string());
  CHECK(r.code == 2);
}

TEST_CASE("stability") {
  const auto lf = write_file("lf.qrep", p5_qrep({1, 0, 0, 0, 0, 1}));
  const auto surj = write_file("surj.qrep", p5_qrep({1, 0, 0, 0, 0, 0}));
  auto r = run("stability " + lf + " --alpha 1 --gamma -2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\nStable\n"));
  r = run("stability " + surj + " --alpha 1 --gamma -1/2");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Unstable, certificate (1,2,1)"));
  r = run("stability " + surj + " --alpha 1 --gamma -1");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "SemistableOnly"));
  r = run("stability " + lf + " --alpha=-1 --gamma=-1");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Unstable"));
  r = run("stability " + lf + " --alpha 0.5 --gamma -1");
  CHECK(r.code == 2);
}

TEST_CASE("stability at charge two needs the heuristic flag") {
  const auto prefix = scratch("g2").string();
  REQUIRE(run("generate 2 --kind any --seed 7 --out " + prefix).code == 0);
  auto r = run("stability " + prefix + ".qrep --alpha 1 --gamma -2");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "NonExactRequested"));
  r = run("stability " + prefix + ".qrep --alpha 1 --gamma -2 --heuristic");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "necessary-condition analysis"));
  r = run("stability " + prefix + ".qrep --alpha -1 --gamma -1 --heuristic");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Unstable (certified)"));
}

TEST_CASE("chambers") {
  auto r = run("chambers 1 --certify");
  CHECK(r.code == 0);
  for (const char* eq : {"gamma = -alpha", "gamma = 0", "alpha = 0", "gamma = alpha/3", "gamma = 3alpha",
                         "gamma = alpha  generators"})
    CHECK(contains(r.out, eq));
  const auto eff = r.out.substr(r.out.find("effective walls"));
  CHECK(contains(eff, "(1,-1)  gamma = -alpha"));
  CHECK(std::count(eff.begin(), eff.end(), '\n') == 2);

  r = run("chambers 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "candidate (not certified)"));
  CHECK(run("chambers 2 --certify").code == 2);
  CHECK(run("chambers 0").code == 2);
}

TEST_CASE("svg output is byte-stable") {
  const auto a = scratch("a.svg"), b = scratch("b.svg");
  REQUIRE(run("chambers 1 --svg " + a.string()).code == 0);
  REQUIRE(run("chambers 1 --svg " + b.string()).code == 0);
  const auto sa = read_file(a);
  CHECK(sa.size() > 100);
  CHECK(sa == read_file(b));
  CHECK(contains(sa, "<svg"));

  const auto overlay = write_file("surj.qrep", p5_qrep({1, 0, 0, 0, 0, 0}));
  const auto c = scratch("c.svg");
  REQUIRE(run("chambers 1 --svg " + c.string() + " --overlay " + overlay).code == 0);
  CHECK(read_file(c) != sa);
}

TEST_CASE("generate") {
  const auto p1 = scratch("lf7").string(), p2 = scratch("lf7b").string();
  auto r = run("generate 1 --kind locally-free --seed 7 --out " + p1);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sheaf: LocallyFree"));
  CHECK(contains(r.out, "seed: 7"));
  REQUIRE(run("--seed 7 generate 1 --kind locally-free --out " + p2).code == 0);
  CHECK(read_file(p1 + ".monad") == read_file(p2 + ".monad"));
  CHECK(read_file(p1 + ".qrep") == read_file(p2 + ".qrep"));
  CHECK(run("check " + p1 + ".monad").code == 0);

  const auto p3 = scratch("any2").string();
  r = run("generate 2 --kind any --seed 7 --out " + p3);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "relations: OK"));

  r = run("generate 9 --attempts 2 --out " + scratch("n9").string());
  CHECK(r.code == 3);
  CHECK(contains(r.out, "GenerationFailed"));
  CHECK(run("generate 1 --kind reflexive").code == 2);
}

TEST_CASE("classify") {
  const auto lf = write_file("lf.qrep", p5_qrep({1, 0, 0, 0, 0, 1}));
  const auto surj = write_file("surj.qrep", p5_qrep({1, 0, 0, 0, 0, 0}));
  auto r = run("classify " + lf + " --alpha 1 --gamma -2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "LocallyFreeInstanton, pf=-1, OffQuadric"));
  r = run("classify " + surj + " --alpha 1 --gamma -2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "NonLocallyFreeInstanton, OnQuadric"));
  r = run("classify " + surj + " --alpha 1 --gamma -1/2");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "NotStableHere"));

  const auto prefix = scratch("c2").string();
  REQUIRE(run("generate 2 --seed 3 --out " + prefix).code == 0);
  r = run("classify " + prefix + ".qrep --alpha 1 --gamma -2");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "WrongDim"));
}

TEST_CASE("seed from the environment and usage errors") {
  const auto lf = write_file("lf.qrep", p5_qrep({1, 0, 0, 0, 0, 1}));
  Run r;
  {
    const std::string cmd = std::string("INSTANTON_QUIVER_SEED=42 ") + IQ_CLI_PATH + " check " + lf + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    pclose(pipe);
  }
  CHECK(contains(r.out, "seed: 42"));
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}
