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

#include "iq/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace iq {

Rational StabilityParam::middle() const {
  const auto n = static_cast<long>(charge);
  return -(alpha + gamma) * Rational(n, 2 * n + 2);
}

Rational theta_dot(const StabilityParam& theta, const DimVector& s) {
  return theta.alpha * Rational(static_cast<long>(s.s_minus1)) + theta.middle() * Rational(static_cast<long>(s.s0)) +
         theta.gamma * Rational(static_cast<long>(s.s1));
}

std::string to_string(StabilityVerdict::Kind k) {
  switch (k) {
    case StabilityVerdict::Kind::Stable:
      return "Stable";
    case StabilityVerdict::Kind::SemistableOnly:
      return "SemistableOnly";
    case StabilityVerdict::Kind::Unstable:
      return "Unstable";
  }
  return "?";
}

StabilityVerdict verdict_from_dimvectors(const std::set<DimVector>& subreps, const StabilityParam& theta) {
  StabilityVerdict v;
  bool first = true;
  DimVector argmax;
  for (const auto& s : subreps) {
    const auto value = theta_dot(theta, s);
    if (first || value > v.max_value) {
      v.max_value = value;
      argmax = s;
      first = false;
    }
  }
  if (first) return v;
  if (v.max_value.sign() > 0) {
    v.kind = StabilityVerdict::Kind::Unstable;
    v.certificate = argmax;
  } else if (v.max_value.is_zero()) {
    v.kind = StabilityVerdict::Kind::SemistableOnly;
  }
  return v;
}

StabilityVerdict is_stable_charge1(const QuiverRep& r, const StabilityParam& theta) {
  if (theta.charge != 1) throw WrongDim("stability parameter is not of charge 1");
  return verdict_from_dimvectors(all_subrep_dimvectors_charge1(r), theta);
}

// ---------------------------------------------------------------------------

namespace {

Rational cross(const Ray& a, const Ray& b) { return a.alpha * b.gamma - a.gamma * b.alpha; }
Rational dot(const Ray& a, const Ray& b) { return a.alpha * b.alpha + a.gamma * b.gamma; }

int half(const Ray& r) {
  return (r.gamma.sign() > 0 || (r.gamma.is_zero() && r.alpha.sign() > 0)) ? 0 : 1;
}

// Angle order relative to `origin`: origin itself is smallest.
bool relative_less(const Ray& origin, const Ray& x, const Ray& y) {
  auto h = [&](const Ray& r) {
    const auto c = cross(origin, r);
    return (c.sign() > 0 || (c.is_zero() && dot(origin, r).sign() > 0)) ? 0 : 1;
  };
  const int hx = h(x);
  const int hy = h(y);
  if (hx != hy) return hx < hy;
  return cross(x, y).sign() > 0;
}

Ray negate(const Ray& r) { return {-r.alpha, -r.gamma}; }

Ray sum(const Ray& a, const Ray& b) { return Ray::through(a.alpha + b.alpha, a.gamma + b.gamma); }

struct LinearForm {
  Rational c_alpha;
  Rational c_gamma;
  Rational at(const Ray& r) const { return c_alpha * r.alpha + c_gamma * r.gamma; }
};

LinearForm form_of(const DimVector& s, std::size_t n) {
  const auto n_l = static_cast<long>(n);
  const Rational w = Rational(n_l, 2 * n_l + 2) * Rational(static_cast<long>(s.s0));
  return {Rational(static_cast<long>(s.s_minus1)) - w, Rational(static_cast<long>(s.s1)) - w};
}

Rational max_at(const std::vector<LinearForm>& forms, const Ray& r) {
  Rational m = forms.front().at(r);
  for (const auto& f : forms) m = std::max(m, f.at(r));
  return m;
}

void push_unique(std::vector<Ray>& rays, const Ray& r) {
  if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
}

// Direction of a wall normalized to alpha > 0, or alpha == 0 and gamma < 0.
Ray normalized_direction(const LinearForm& f) {
  auto d = Ray::through(-f.c_gamma, f.c_alpha);
  if (d.alpha.sign() < 0 || (d.alpha.is_zero() && d.gamma.sign() > 0)) d = negate(d);
  return d;
}

}  // namespace

Ray Ray::through(const Rational& alpha, const Rational& gamma) {
  if (alpha.is_zero() && gamma.is_zero()) throw std::invalid_argument("ray direction must be nonzero");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), alpha.denominator().get_mpz_t(), gamma.denominator().get_mpz_t());
  mpz_class x = alpha.numerator() * (l / alpha.denominator());
  mpz_class y = gamma.numerator() * (l / gamma.denominator());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  return {Rational(x), Rational(y)};
}

std::string Ray::to_string() const { return "(" + alpha.to_string() + "," + gamma.to_string() + ")"; }

bool angle_less(const Ray& a, const Ray& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

bool StabilityRegion::contains(const Rational& alpha, const Rational& gamma) const {
  if (alpha.is_zero() && gamma.is_zero()) return false;
  if (whole_plane) return true;
  const auto d = Ray::through(alpha, gamma);
  for (const auto& s : sectors)
    if (d != s.from && relative_less(s.from, d, s.to)) return true;
  return false;
}

StabilityRegion stability_region(const std::set<DimVector>& subreps, std::size_t n) {
  StabilityRegion region;
  std::vector<LinearForm> forms;
  for (const auto& s : subreps) {
    const auto f = form_of(s, n);
    if (f.c_alpha.is_zero() && f.c_gamma.is_zero()) return region;  // theta . s == 0 everywhere
    forms.push_back(f);
  }
  if (forms.empty()) {
    region.whole_plane = true;
    return region;
  }

  std::vector<Ray> rays;
  for (const auto& f : forms) {
    const auto d = Ray::through(-f.c_gamma, f.c_alpha);
    push_unique(rays, d);
    push_unique(rays, negate(d));
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  const std::size_t k = rays.size();

  std::vector<bool> ray_ok(k), sector_ok(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = rays[i];
    const auto& b = rays[(i + 1) % k];
    const Ray mid = cross(a, b).sign() > 0 ? sum(a, b) : Ray::through(-a.gamma, a.alpha);
    ray_ok[i] = max_at(forms, a).sign() < 0;
    sector_ok[i] = max_at(forms, mid).sign() < 0;
  }

  auto status_of = [&](const Ray& r) {
    return max_at(forms, r).is_zero() ? BoundaryRay::Status::SemistableOnly
                                      : BoundaryRay::Status::StrictlyUnstable;
  };
  auto add_boundary = [&](const Ray& r) {
    for (const auto& b : region.boundary)
      if (b.ray == r) return;
    region.boundary.push_back({r, status_of(r)});
  };

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t prev = (i + k - 1) % k;
    if (!sector_ok[i] || (ray_ok[i] && sector_ok[prev])) continue;  // not the start of a run
    std::size_t end = i;
    while (ray_ok[(end + 1) % k] && sector_ok[(end + 1) % k]) end = (end + 1) % k;
    const auto& from = rays[i];
    const auto& to = rays[(end + 1) % k];
    region.sectors.push_back({from, to});
    add_boundary(from);
    add_boundary(to);
  }
  return region;
}

StabilityRegion stability_region_charge1(const QuiverRep& r) {
  return stability_region(all_subrep_dimvectors_charge1(r), 1);
}

// ---------------------------------------------------------------------------

std::vector<DimVector> candidate_dimvectors(std::size_t n) {
  if (n == 0) throw std::invalid_argument("charge must be positive");
  const DimVector full{n, 2 * n + 2, n};
  std::vector<DimVector> out;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; b <= 2 * n + 2; ++b)
      for (std::size_t c = 0; c <= n; ++c) {
        const DimVector s{a, b, c};
        if (s.is_zero() || s == full) continue;
        if (a >= 1 && a + 1 > b) continue;
        if (c < n && b > c + n - 1) continue;
        if (b > 4 * c) continue;
        if (c < 1) continue;
        out.push_back(s);
      }
  return out;
}

ThetaEpsReport verify_theta_eps(std::size_t n, const Rational& eps) {
  if (eps.sign() <= 0 || eps >= Rational(1)) throw std::invalid_argument("eps must lie in (0, 1)");
  const StabilityParam theta{eps, Rational(-1), n};
  ThetaEpsReport rep;
  bool first = true;
  for (const auto& s : candidate_dimvectors(n)) {
    const auto v = theta_dot(theta, s);
    if (first || v > rep.max_value) rep.max_value = v;
    first = false;
    if (rep.ok && v.sign() >= 0) {
      rep.ok = false;
      rep.counterexample = s;
      rep.counterexample_value = v;
    }
  }
  return rep;
}

ThetaEpsReport verify_theta_eps_charge2(const Rational& eps) { return verify_theta_eps(2, eps); }

HeuristicStability heuristic_stability(const QuiverRep& r, const StabilityParam& theta, const SubrepSearch& search) {
  if (r.dim() != theta.full_dim())
    throw WrongDim("representation " + r.dim().to_string() + " does not match charge " +
                   std::to_string(theta.charge));
  HeuristicStability h;
  const auto found = find_subreps(r, search);
  h.subreps_examined = found.size();
  bool first = true;
  for (const auto& [s, witness] : found) {
    const auto v = theta_dot(theta, s);
    if (first || v > h.max_value) {
      h.max_value = v;
      if (v.sign() > 0) h.certificate = witness;
    }
    first = false;
  }
  if (h.certificate) h.kind = HeuristicStability::Kind::CertifiedUnstable;
  h.negative_on_candidates = true;
  for (const auto& s : candidate_dimvectors(theta.charge))
    if (theta_dot(theta, s).sign() >= 0) {
      h.negative_on_candidates = false;
      h.candidate_violation = s;
      break;
    }
  return h;
}

// ---------------------------------------------------------------------------

WallArrangement wall_arrangement(std::size_t n) {
  std::vector<DimVector> generators;
  if (n == 1) {
    for (std::size_t a = 0; a <= 1; ++a)
      for (std::size_t b = 0; b <= 4; ++b)
        for (std::size_t c = 0; c <= 1; ++c) {
          const DimVector s{a, b, c};
          if (!s.is_zero() && s != DimVector{1, 4, 1}) generators.push_back(s);
        }
  } else {
    generators = candidate_dimvectors(n);
  }

  WallArrangement arr;
  arr.charge = n;
  for (const auto& s : generators) {
    const auto f = form_of(s, n);
    if (f.c_alpha.is_zero() && f.c_gamma.is_zero()) continue;
    const auto d = normalized_direction(f);
    auto it = std::find_if(arr.walls.begin(), arr.walls.end(), [&](const Wall& w) { return w.direction == d; });
    if (it == arr.walls.end())
      arr.walls.push_back({d, {s}});
    else
      it->generators.push_back(s);
  }
  auto by_angle = [](const Wall& x, const Wall& y) { return cross(x.direction, y.direction).sign() > 0; };
  std::sort(arr.walls.begin(), arr.walls.end(), by_angle);

  std::vector<Ray> bounds{{Rational(0), Rational(-1)}};
  for (const auto& w : arr.walls)
    if (w.direction.in_open_q4()) bounds.push_back(w.direction);
  bounds.push_back({Rational(1), Rational(0)});
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const auto mid = sum(bounds[i], bounds[i + 1]);
    arr.chambers.push_back({{bounds[i], bounds[i + 1]}, mid.alpha, mid.gamma});
  }
  return arr;
}

std::vector<Ray> effective_walls_charge1(const std::vector<QuiverRep>& sample) {
  std::vector<Ray> out;
  for (const auto& r : sample)
    for (const auto& b : stability_region_charge1(r).boundary)
      if (b.ray.in_open_q4()) push_unique(out, b.ray);
  std::sort(out.begin(), out.end(), angle_less);
  return out;
}

}  // namespace iq
