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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "iq/rational.hpp"

namespace iq {

using RationalVector = std::vector<Rational>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSkewSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are
/// allowed and behave as the empty linear maps they represent.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(std::size_t rows, std::span<const RationalVector> columns);
  static RationalMatrix column(const RationalVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return data_; }

  RationalVector col(std::size_t c) const;
  RationalVector row(std::size_t r) const;
  std::vector<RationalVector> columns() const;

  RationalMatrix transpose() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

// ---------------------------------------------------------------------------
// Fraction-free elimination

/// Integer row-echelon form produced by Bareiss elimination. Rows are first
/// cleared of denominators, then eliminated with exact divisions only.
/// Pivot choice is the first nonzero entry, scanning rows downward, in
/// column order.
struct EchelonForm {
  std::vector<std::vector<mpz_class>> rows;  // rank() nonzero rows, then zero rows
  std::vector<std::size_t> pivot_columns;
  mpz_class row_scale = 1;  // product of the per-row denominator clearings
  int swap_sign = 1;
  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm bareiss_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space; empty iff rank(m) == m.cols().
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

struct LinearSolution {
  RationalVector particular;
  std::vector<RationalVector> nullspace;
};

/// Solves A x = b. Returns std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear_system(const RationalMatrix& a, const RationalVector& b);

Rational determinant(const RationalMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

bool is_skew_symmetric(const RationalMatrix& m);

/// Pfaffian of a 4x4 skew-symmetric matrix laid out as
///   [ 0 -a -b -c ]
///   [ a  0 -d -e ]
///   [ b  d  0 -f ]
///   [ c  e  f  0 ]
/// which is be - af - dc. Throws NotSkewSymmetric or ShapeError.
Rational pfaffian4(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// Subspaces of Q^d, represented by a d x k matrix whose columns are a basis.

/// Column basis of the span of m's columns (a subset of the original columns).
RationalMatrix column_space(const RationalMatrix& m);

/// Null space of m as a basis matrix (cols x nullity).
RationalMatrix null_space(const RationalMatrix& m);

/// Rows spanning the annihilator {y : y^T w = 0 for all w in W}.
RationalMatrix annihilator(const RationalMatrix& basis, std::size_t ambient_dim);

/// True iff every column of `inner` lies in the column span of `outer`.
bool contains(const RationalMatrix& outer, const RationalMatrix& inner);

RationalMatrix intersect(const RationalMatrix& a, const RationalMatrix& b, std::size_t ambient_dim);

/// {x : map * x in W} for a subspace W of the codomain.
RationalMatrix preimage(const RationalMatrix& map, const RationalMatrix& w_basis);

/// Extends `basis` by columns of `pool` until it reaches `target_dim`
/// (or runs out of pool vectors).
RationalMatrix extend_basis(const RationalMatrix& basis, const RationalMatrix& pool,
                            std::size_t target_dim);

}  // namespace iq
