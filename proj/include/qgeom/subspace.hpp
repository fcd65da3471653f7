/* Copyright 2026 The qgeom Authors
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
 *
 */

/**
 * @file subspace.hpp
 * @brief Exact linear algebra over GF(q) and canonical subspaces.
 *
 * A Subspace stores its basis in reduced row echelon form, so equal subspaces
 * have identical encodings; equality, ordering and hashing all work on the
 * RREF entry sequence. Vectors are rows; a matrix acts on the left of column
 * vectors, i.e. the image of a row vector x under A is (A x^T)^T.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qgeom/gf.hpp"

namespace qgeom {

using gf::Elem;
using gf::Field;
using Vector = std::vector<Elem>;

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<Elem> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const Elem> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  bool operator==(const Matrix&) const = default;
};

struct RrefResult {
  Matrix matrix;  ///< rank x cols, zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique RREF of the row space.
RrefResult rref(const Field& field, Matrix m);
std::size_t rank(const Field& field, Matrix m);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Inverse of a square matrix; throws DimensionMismatch when singular.
Matrix inverse(const Field& field, const Matrix& a);
bool is_invertible(const Field& field, const Matrix& a);
/// Applies the Frobenius power entrywise.
Matrix frobenius(const Field& field, const Matrix& a, unsigned power);
/// A * x for a column vector x given as a row.
Vector apply(const Field& field, const Matrix& a, std::span<const Elem> x);

/// Scales a nonzero vector so that its first nonzero entry is 1.
Vector normalized(const Field& field, std::span<const Elem> v);
bool is_zero(std::span<const Elem> v);

class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Takes an already reduced basis. Only use with output of rref().
  static Subspace from_rref(std::size_t ambient_dim, Matrix basis);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }
  const std::vector<Elem>& entries() const noexcept { return data_; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  Matrix basis() const;
  std::vector<std::size_t> pivots() const;
  std::vector<Vector> rows() const;

  auto operator<=>(const Subspace&) const = default;
  bool operator==(const Subspace&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<Elem> data_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept;
};

Subspace span(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors);
Subspace sum(const Field& field, const Subspace& a, const Subspace& b);
/// Zassenhaus: reduce [[A, A], [B, 0]]; rows with vanishing left half span A ∩ B.
Subspace intersect(const Field& field, const Subspace& a, const Subspace& b);
/// True iff b ⊆ a.
bool contains(const Field& field, const Subspace& a, const Subspace& b);
bool contains_vector(const Field& field, const Subspace& a, std::span<const Elem> v);
std::size_t sum_dim(const Field& field, const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Field& field, const Subspace& a, const Subspace& b);

/// Dot-pairing annihilator in the coordinate dual.
Subspace annihilator(const Field& field, const Subspace& s);

/// Image of S under x -> A * frob^power(x). A must be square and invertible.
Subspace image(const Field& field, const Matrix& a, unsigned frobenius_power, const Subspace& s);

/// Enumerates every vector of S (q^dim S of them) in coefficient order.
std::vector<Vector> vectors_of(const Field& field, const Subspace& s);

/// W = V/U modelled as GF(q)^(n - dim U) on the non-pivot columns of U.
class QuotientSpace {
 public:
  QuotientSpace(const Field& field, std::size_t ambient_dim, Subspace mod_out);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return transversal_.size(); }
  const Subspace& mod_out() const noexcept { return u_; }
  /// (n - dim U) x n projection matrix.
  const Matrix& coordinate_map() const noexcept { return map_; }
  const std::vector<std::size_t>& transversal() const noexcept { return transversal_; }

  Vector project_vector(const Field& field, std::span<const Elem> v) const;
  /// Puts w on the transversal coordinates and zero elsewhere.
  Vector lift_vector(std::span<const Elem> w) const;
  /// (S + U) / U in W coordinates.
  Subspace project(const Field& field, const Subspace& s) const;
  /// Preimage of T ⊆ W: lift(T) + U.
  Subspace lift(const Field& field, const Subspace& t) const;

 private:
  std::size_t n_;
  Subspace u_;
  std::vector<std::size_t> transversal_;
  Matrix map_;
};

}  // namespace qgeom
