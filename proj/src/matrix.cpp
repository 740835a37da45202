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

#include "iq/matrix.hpp"

#include <sstream>
#include <utility>

namespace iq {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw ShapeError("entry count does not match rows*cols");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, std::span<const RationalVector> columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::column(const RationalVector& v) {
  return RationalMatrix(v.size(), 1, v);
}

RationalVector RationalMatrix::col(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<RationalVector> RationalMatrix::columns() const {
  std::vector<RationalVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  mpq_class acc;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k).raw();
        if (sgn(x) == 0) continue;
        acc += x * b(k, j).raw();
      }
      p(i, j) = Rational(acc);
    }
  return p;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k).raw() * v[k].raw();
    out[i] = Rational(acc);
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right) {
  if (left.rows() != right.rows()) throw ShapeError("hstack row mismatch");
  RationalMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw ShapeError("vstack column mismatch");
  RationalMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

// ---------------------------------------------------------------------------

EchelonForm bareiss_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  EchelonForm ef;
  ef.rows.assign(rows, std::vector<mpz_class>(cols));

  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& q = m(r, c).raw();
      ef.rows[r][c] = q.get_num() * (l / q.get_den());
    }
    ef.row_scale *= l;
  }

  auto& a = ef.rows;
  mpz_class prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != k) {
      std::swap(a[p], a[k]);
      ef.swap_sign = -ef.swap_sign;
    }
    const mpz_class& pivot = a[k][col];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const mpz_class lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = pivot * a[i][j] - lead * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = pivot;
    ef.pivot_columns.push_back(col);
    ++k;
  }
  return ef;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).rank(); }

namespace {

// Back substitution on an echelon form: fills the pivot unknowns of x given
// its free unknowns and an optional right-hand side column.
void back_substitute(const EchelonForm& ef, std::size_t n_unknowns, const std::vector<mpz_class>* rhs,
                     std::vector<mpq_class>& x) {
  for (std::size_t k = ef.rank(); k-- > 0;) {
    const std::size_t p = ef.pivot_columns[k];
    mpq_class acc = rhs ? mpq_class((*rhs)[k]) : mpq_class(0);
    for (std::size_t j = p + 1; j < n_unknowns; ++j)
      if (ef.rows[k][j] != 0) acc -= mpq_class(ef.rows[k][j]) * x[j];
    x[p] = acc / mpq_class(ef.rows[k][p]);
    x[p].canonicalize();
  }
}

RationalVector to_vector(const std::vector<mpq_class>& x) {
  RationalVector v;
  v.reserve(x.size());
  for (const auto& q : x) v.emplace_back(q);
  return v;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const auto ef = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivot_columns) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(n, 0);
    x[f] = 1;
    back_substitute(ef, n, nullptr, x);
    basis.push_back(to_vector(x));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear_system(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw ShapeError("solve_linear_system: A.rows != b.length");
  const std::size_t n = a.cols();
  const auto ef = bareiss_echelon(hstack(a, RationalMatrix::column(b)));
  for (auto p : ef.pivot_columns)
    if (p == n) return std::nullopt;

  std::vector<mpz_class> rhs(ef.rank());
  for (std::size_t k = 0; k < ef.rank(); ++k) rhs[k] = ef.rows[k][n];
  std::vector<mpq_class> x(n, 0);
  back_substitute(ef, n, &rhs, x);
  return LinearSolution{to_vector(x), kernel_basis(a)};
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const auto ef = bareiss_echelon(m);
  if (ef.rank() < n) return 0;
  return Rational(mpz_class(ef.rows[n - 1][n - 1] * ef.swap_sign), ef.row_scale);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix inv(n, n);
  // Solve column by column against the identity; a single echelon pass of
  // [m | I] would be faster but n <= 8 everywhere this is used.
  for (std::size_t c = 0; c < n; ++c) {
    RationalVector e(n);
    e[c] = 1;
    auto sol = solve_linear_system(m, e);
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = sol->particular[r];
  }
  return inv;
}

bool is_skew_symmetric(const RationalMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

Rational pfaffian4(const RationalMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ShapeError("pfaffian4 expects a 4x4 matrix");
  if (!is_skew_symmetric(m)) throw NotSkewSymmetric("pfaffian4: matrix is not skew-symmetric");
  const Rational a = -m(0, 1), b = -m(0, 2), c = -m(0, 3);
  const Rational d = -m(1, 2), e = -m(1, 3), f = -m(2, 3);
  return b * e - a * f - d * c;
}

// ---------------------------------------------------------------------------

RationalMatrix column_space(const RationalMatrix& m) {
  const auto ef = bareiss_echelon(m);
  RationalMatrix basis(m.rows(), ef.rank());
  for (std::size_t k = 0; k < ef.rank(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, k) = m(r, ef.pivot_columns[k]);
  return basis;
}

RationalMatrix null_space(const RationalMatrix& m) {
  const auto k = kernel_basis(m);
  return RationalMatrix::from_columns(m.cols(), k);
}

RationalMatrix annihilator(const RationalMatrix& basis, std::size_t ambient_dim) {
  if (basis.rows() != ambient_dim) throw ShapeError("annihilator: ambient dimension mismatch");
  const auto k = kernel_basis(basis.transpose());
  return RationalMatrix::from_columns(ambient_dim, k).transpose();
}

bool contains(const RationalMatrix& outer, const RationalMatrix& inner) {
  if (inner.cols() == 0) return true;
  return rank(hstack(outer, inner)) == rank(outer);
}

RationalMatrix intersect(const RationalMatrix& a, const RationalMatrix& b, std::size_t ambient_dim) {
  if (a.cols() == 0 || b.cols() == 0) return RationalMatrix(ambient_dim, 0);
  const auto coeffs = kernel_basis(hstack(a, b * Rational(-1)));
  std::vector<RationalVector> vecs;
  vecs.reserve(coeffs.size());
  for (const auto& k : coeffs) {
    RationalVector x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    vecs.push_back(a * x);
  }
  return column_space(RationalMatrix::from_columns(ambient_dim, vecs));
}

RationalMatrix preimage(const RationalMatrix& map, const RationalMatrix& w_basis) {
  const auto ann = annihilator(w_basis, map.rows());
  if (ann.rows() == 0) return RationalMatrix::identity(map.cols());
  return null_space(ann * map);
}

RationalMatrix extend_basis(const RationalMatrix& basis, const RationalMatrix& pool,
                            std::size_t target_dim) {
  RationalMatrix out = column_space(basis);
  std::size_t r = out.cols();
  for (std::size_t c = 0; c < pool.cols() && r < target_dim; ++c) {
    auto candidate = hstack(out, RationalMatrix::column(pool.col(c)));
    if (rank(candidate) > r) {
      out = std::move(candidate);
      ++r;
    }
  }
  return out;
}

}  // namespace iq
