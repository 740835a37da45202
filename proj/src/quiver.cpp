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

#include "iq/quiver.hpp"

#include <sstream>

#include "iq/rng.hpp"

namespace iq {

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << "(" << s_minus1 << "," << s0 << "," << s1 << ")";
  return os.str();
}

QuiverRep::QuiverRep(DimVector dim, std::array<RationalMatrix, 4> f, std::array<RationalMatrix, 4> g)
    : dim_(dim), f_(std::move(f)), g_(std::move(g)) {
  for (const auto& m : f_)
    if (m.rows() != dim_.s0 || m.cols() != dim_.s_minus1)
      throw ShapeError("f-map shape does not match dimension vector " + dim_.to_string());
  for (const auto& m : g_)
    if (m.rows() != dim_.s1 || m.cols() != dim_.s0)
      throw ShapeError("g-map shape does not match dimension vector " + dim_.to_string());
}

QuiverRep QuiverRep::zero(DimVector dim) {
  const RationalMatrix f(dim.s0, dim.s_minus1);
  const RationalMatrix g(dim.s1, dim.s0);
  return QuiverRep(dim, {f, f, f, f}, {g, g, g, g});
}

RelationCheck check_relations(const QuiverRep& r) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      auto residual = r.g(i) * r.f(j) + r.g(j) * r.f(i);
      if (!residual.is_zero()) return {false, i, j, std::move(residual)};
    }
  return {};
}

QuiverRep gauge_act(const QuiverRep& r, const RationalMatrix& g_minus1, const RationalMatrix& g0,
                    const RationalMatrix& g1) {
  const auto& d = r.dim();
  if (g_minus1.rows() != d.s_minus1 || !g_minus1.square() || g0.rows() != d.s0 || !g0.square() ||
      g1.rows() != d.s1 || !g1.square())
    throw ShapeError("gauge matrices do not match the dimension vector");
  const auto inv_m1 = inverse(g_minus1);
  const auto inv_0 = inverse(g0);
  if (!inv_m1 || !inv_0 || rank(g1) != g1.rows()) throw SingularGauge("gauge matrix is singular");
  std::array<RationalMatrix, 4> f, g;
  for (std::size_t i = 0; i < 4; ++i) {
    f[i] = g0 * r.f(i) * *inv_m1;
    g[i] = g1 * r.g(i) * *inv_0;
  }
  return QuiverRep(d, std::move(f), std::move(g));
}

QuiverRep dual(const QuiverRep& r) {
  const auto& d = r.dim();
  std::array<RationalMatrix, 4> f, g;
  for (std::size_t i = 0; i < 4; ++i) {
    f[i] = r.g(i).transpose();
    g[i] = r.f(i).transpose();
  }
  return QuiverRep({d.s1, d.s0, d.s_minus1}, std::move(f), std::move(g));
}

std::size_t hom_space_dim(const QuiverRep& r1, const QuiverRep& r2) {
  const auto& d1 = r1.dim();
  const auto& d2 = r2.dim();
  // Unknown layout: h_-1 (a2 x a1), then h_0 (b2 x b1), then h_1 (c2 x c1), row-major.
  const std::size_t off0 = d2.s_minus1 * d1.s_minus1;
  const std::size_t off1 = off0 + d2.s0 * d1.s0;
  const std::size_t n = off1 + d2.s1 * d1.s1;
  auto hm1 = [&](std::size_t p, std::size_t q) { return p * d1.s_minus1 + q; };
  auto h0 = [&](std::size_t p, std::size_t q) { return off0 + p * d1.s0 + q; };
  auto h1 = [&](std::size_t p, std::size_t q) { return off1 + p * d1.s1 + q; };

  std::vector<Rational> entries;
  std::size_t rows = 0;
  auto new_row = [&]() -> std::size_t {
    entries.resize(entries.size() + n);
    return rows++;
  };
  auto at = [&](std::size_t row, std::size_t col) -> Rational& { return entries[row * n + col]; };

  for (std::size_t i = 0; i < 4; ++i) {
    // f2_i h_-1 - h_0 f1_i = 0   (b2 x a1 equations)
    for (std::size_t p = 0; p < d2.s0; ++p)
      for (std::size_t q = 0; q < d1.s_minus1; ++q) {
        const auto row = new_row();
        for (std::size_t k = 0; k < d2.s_minus1; ++k) at(row, hm1(k, q)) += r2.f(i)(p, k);
        for (std::size_t k = 0; k < d1.s0; ++k) at(row, h0(p, k)) -= r1.f(i)(k, q);
      }
    // g2_i h_0 - h_1 g1_i = 0   (c2 x b1 equations)
    for (std::size_t p = 0; p < d2.s1; ++p)
      for (std::size_t q = 0; q < d1.s0; ++q) {
        const auto row = new_row();
        for (std::size_t k = 0; k < d2.s0; ++k) at(row, h0(k, q)) += r2.g(i)(p, k);
        for (std::size_t k = 0; k < d1.s1; ++k) at(row, h1(p, k)) -= r1.g(i)(k, q);
      }
  }
  if (rows == 0) return n;
  return n - rank(RationalMatrix(rows, n, std::move(entries)));
}

// ---------------------------------------------------------------------------

RationalMatrix push_forward(const QuiverRep& r, const RationalMatrix& u_basis) {
  RationalMatrix images(r.dim().s0, 0);
  for (std::size_t i = 0; i < 4; ++i) images = hstack(images, r.f(i) * u_basis);
  return column_space(images);
}

RationalMatrix pull_back(const QuiverRep& r, const RationalMatrix& w_basis) {
  const auto ann = annihilator(w_basis, r.dim().s1);
  if (ann.rows() == 0) return RationalMatrix::identity(r.dim().s0);
  RationalMatrix stacked(0, r.dim().s0);
  for (std::size_t i = 0; i < 4; ++i) stacked = vstack(stacked, ann * r.g(i));
  return null_space(stacked);
}

namespace {

RationalMatrix image_of_g(const QuiverRep& r, const RationalMatrix& v_basis) {
  RationalMatrix images(r.dim().s1, 0);
  for (std::size_t i = 0; i < 4; ++i) images = hstack(images, r.g(i) * v_basis);
  return column_space(images);
}

}  // namespace

bool verify_witness(const QuiverRep& r, const SubrepWitness& w) {
  const auto& d = r.dim();
  if (w.basis_u.rows() != d.s_minus1 || w.basis_v.rows() != d.s0 || w.basis_w.rows() != d.s1) return false;
  if (w.basis_u.cols() != w.dim.s_minus1 || w.basis_v.cols() != w.dim.s0 || w.basis_w.cols() != w.dim.s1)
    return false;
  if (rank(w.basis_u) != w.dim.s_minus1 || rank(w.basis_v) != w.dim.s0 || rank(w.basis_w) != w.dim.s1)
    return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!contains(w.basis_v, r.f(i) * w.basis_u)) return false;
    if (!contains(w.basis_w, r.g(i) * w.basis_v)) return false;
  }
  return true;
}

namespace {

RationalMatrix coordinate_subspace(std::size_t ambient, std::span<const std::size_t> idx) {
  RationalMatrix m(ambient, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) m(idx[k], k) = 1;
  return m;
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RationalMatrix random_subspace(Rng& rng, std::size_t ambient, std::size_t dim) {
  for (;;) {
    RationalMatrix m(ambient, dim);
    for (std::size_t r = 0; r < ambient; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = rng.small_integer();
    if (rank(m) == dim) return m;
  }
}

// Candidate subspaces of Q^ambient of the given dimension: forced when dim is
// 0 or ambient, else all coordinate subspaces plus random samples.
std::vector<RationalMatrix> subspace_candidates(std::size_t ambient, std::size_t dim, const SubrepSearch& search,
                                                Rng& rng) {
  std::vector<RationalMatrix> out;
  if (dim == 0) return {RationalMatrix(ambient, 0)};
  if (dim == ambient) return {RationalMatrix::identity(ambient)};
  for_each_combination(ambient, dim, [&](std::span<const std::size_t> idx) {
    out.push_back(coordinate_subspace(ambient, idx));
  });
  if (search.mode == SubrepSearch::Mode::Sampled)
    for (unsigned k = 0; k < search.samples; ++k) out.push_back(random_subspace(rng, ambient, dim));
  return out;
}

// Subspaces of dimension `dim` containing `inner`.
std::vector<RationalMatrix> superspace_candidates(const RationalMatrix& inner, std::size_t ambient,
                                                  std::size_t dim, const SubrepSearch& search, Rng& rng) {
  const std::size_t base = inner.cols();
  if (base > dim) return {};
  if (base == dim) return {inner};
  if (dim == ambient) return {RationalMatrix::identity(ambient)};
  std::vector<RationalMatrix> out;
  const auto all_coords = RationalMatrix::identity(ambient);
  for_each_combination(ambient, dim - base, [&](std::span<const std::size_t> idx) {
    auto ext = extend_basis(inner, coordinate_subspace(ambient, idx), dim);
    if (ext.cols() == dim) out.push_back(std::move(ext));
  });
  if (search.mode == SubrepSearch::Mode::Sampled)
    for (unsigned k = 0; k < search.samples; ++k) {
      auto pool = hstack(random_subspace(rng, ambient, dim - base), all_coords);
      out.push_back(extend_basis(inner, pool, dim));
    }
  return out;
}

SubrepWitness make_witness(const DimVector& dim, const RationalMatrix& u, const RationalMatrix& f_of_u,
                           const RationalMatrix& g_of_w, const RationalMatrix& w) {
  return SubrepWitness{dim, u, extend_basis(f_of_u, g_of_w, dim.s0), w};
}

}  // namespace

SubrepResult subrep_exists(const QuiverRep& r, const DimVector& target, const SubrepSearch& search) {
  const auto& d = r.dim();
  if (!target.fits_in(d)) throw std::invalid_argument("target " + target.to_string() + " does not fit");
  if (target.is_zero() || target == d) throw std::invalid_argument("target must be proper and nonzero");

  Rng rng(search.seed);
  const bool u_forced = target.s_minus1 == 0 || target.s_minus1 == d.s_minus1;
  bool exhaustive = u_forced;

  for (const auto& u : subspace_candidates(d.s_minus1, target.s_minus1, search, rng)) {
    const auto fu = push_forward(r, u);
    if (fu.cols() > target.s0) continue;
    const auto h = image_of_g(r, fu);
    if (h.cols() > target.s1) continue;
    const bool w_forced = h.cols() == target.s1 || target.s1 == d.s1;
    if (!w_forced) exhaustive = false;
    for (const auto& w : superspace_candidates(h, d.s1, target.s1, search, rng)) {
      const auto gw = pull_back(r, w);
      if (gw.cols() >= target.s0) return {SubrepResult::Kind::Yes, make_witness(target, u, fu, gw, w)};
    }
  }
  return {exhaustive ? SubrepResult::Kind::No : SubrepResult::Kind::Unknown, std::nullopt};
}

std::map<DimVector, SubrepWitness> find_subreps(const QuiverRep& r, const SubrepSearch& search) {
  const auto& d = r.dim();
  Rng rng(search.seed);
  std::map<DimVector, SubrepWitness> found;
  for (std::size_t su = 0; su <= d.s_minus1; ++su) {
    for (const auto& u : subspace_candidates(d.s_minus1, su, search, rng)) {
      const auto fu = push_forward(r, u);
      const auto h = image_of_g(r, fu);
      for (std::size_t sw = h.cols(); sw <= d.s1; ++sw) {
        for (const auto& w : superspace_candidates(h, d.s1, sw, search, rng)) {
          const auto gw = pull_back(r, w);
          for (std::size_t sv = fu.cols(); sv <= gw.cols(); ++sv) {
            const DimVector dv{su, sv, sw};
            if (dv.is_zero() || dv == d || found.contains(dv)) continue;
            found.emplace(dv, make_witness(dv, u, fu, gw, w));
          }
        }
      }
    }
  }
  return found;
}

std::set<DimVector> all_subrep_dimvectors_charge1(const QuiverRep& r) {
  const DimVector expected{1, 4, 1};
  if (r.dim() != expected) throw WrongDim("expected dimension vector (1,4,1), got " + r.dim().to_string());
  std::set<DimVector> out;
  const RationalMatrix none(1, 0);
  const RationalMatrix all = RationalMatrix::identity(1);
  for (const auto* u : {&none, &all}) {
    const auto fu = push_forward(r, *u);
    for (const auto* w : {&none, &all}) {
      const auto gw = pull_back(r, *w);
      if (!contains(gw, fu)) continue;
      for (std::size_t sv = fu.cols(); sv <= gw.cols(); ++sv) {
        const DimVector dv{u->cols(), sv, w->cols()};
        if (!dv.is_zero() && dv != expected) out.insert(dv);
      }
    }
  }
  return out;
}

RepPencilReport pencil_report(const QuiverRep& r, std::uint64_t seed) {
  const auto eta = r.eta_pencil();
  const auto phi = r.phi_pencil();
  RepPencilReport rep;
  rep.globally_injective =
      eta.rows() >= eta.cols() ? is_injective_everywhere(eta, seed) : PencilVerdict{Answer::No, 0, std::nullopt};
  rep.locally_injective = fail_locus_codim_at_least_2(eta, PencilMode::Injective, seed + 1);
  rep.globally_surjective =
      phi.cols() >= phi.rows() ? is_surjective_everywhere(phi, seed + 2) : PencilVerdict{Answer::No, 0, std::nullopt};
  rep.locally_surjective = fail_locus_codim_at_least_2(phi, PencilMode::Surjective, seed + 3);
  return rep;
}

}  // namespace iq
