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

#include "qgeom/subspace.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace qgeom {

namespace {

void check_ambient(const Subspace& a, const Subspace& b)
{
  if (a.ambient_dim() != b.ambient_dim())
    raise(ErrorCode::AmbientMismatch, "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                                          std::to_string(b.ambient_dim()));
}

// In-place Gauss-Jordan on a raw row-major buffer; returns rank. Rows past the
// rank are left zero, pivot columns are written to pivots when non-null.
std::size_t reduce(const Field& f, Elem* m, std::size_t rows, std::size_t cols,
                   std::vector<std::size_t>* pivots)
{
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
    Elem* pr = m + r * cols;
    const Elem s = f.inv(pr[c]);
    if (s != 1)
      for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* pi = m + i * cols;
      const Elem factor = pi[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) pi[j] = f.sub(pi[j], f.mul(factor, pr[j]));
    }
    if (pivots != nullptr) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::size_t stacked_rank(const Field& f, const Subspace& a, const Subspace& b)
{
  thread_local std::vector<Elem> scratch;
  const std::size_t n = a.ambient_dim();
  const std::size_t rows = a.dim() + b.dim();
  scratch.resize(rows * n);
  std::copy(a.entries().begin(), a.entries().end(), scratch.begin());
  std::copy(b.entries().begin(), b.entries().end(), scratch.begin() + static_cast<std::ptrdiff_t>(a.dim() * n));
  return reduce(f, scratch.data(), rows, n, nullptr);
}

}  // namespace

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows)
{
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) raise(ErrorCode::AmbientMismatch, "row length differs from column count");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

RrefResult rref(const Field& field, Matrix m)
{
  RrefResult out;
  out.rank = reduce(field, m.data.data(), m.rows, m.cols, &out.pivots);
  m.data.resize(out.rank * m.cols);
  m.rows = out.rank;
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const Field& field, Matrix m) { return reduce(field, m.data.data(), m.rows, m.cols, nullptr); }

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b)
{
  if (a.cols != b.rows) raise(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const Elem x = a.at(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) = field.add(out.at(i, j), field.mul(x, b.at(l, j)));
    }
  return out;
}

Matrix transpose(const Matrix& a)
{
  Matrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix inverse(const Field& field, const Matrix& a)
{
  if (a.rows != a.cols) raise(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  reduce(field, aug.data.data(), n, 2 * n, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) raise(ErrorCode::DimensionMismatch, "matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

bool is_invertible(const Field& field, const Matrix& a) { return a.rows == a.cols && rank(field, a) == a.rows; }

Matrix frobenius(const Field& field, const Matrix& a, unsigned power)
{
  Matrix out = a;
  if (power % field.e() == 0) return out;
  for (auto& x : out.data) x = field.frobenius(x, power);
  return out;
}

Vector apply(const Field& field, const Matrix& a, std::span<const Elem> x)
{
  if (x.size() != a.cols) raise(ErrorCode::DimensionMismatch, "vector length differs from column count");
  Vector out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j) acc = field.add(acc, field.mul(a.at(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

Vector normalized(const Field& field, std::span<const Elem> v)
{
  Vector out(v.begin(), v.end());
  auto it = std::find_if(out.begin(), out.end(), [](Elem x) { return x != 0; });
  if (it == out.end()) return out;
  const Elem s = field.inv(*it);
  for (auto& x : out) x = field.mul(x, s);
  return out;
}

bool is_zero(std::span<const Elem> v)
{
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
  Subspace s;
  s.n_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return from_rref(ambient_dim, Matrix::identity(ambient_dim)); }

Subspace Subspace::from_rref(std::size_t ambient_dim, Matrix basis)
{
  if (basis.cols != ambient_dim && basis.rows != 0)
    raise(ErrorCode::AmbientMismatch, "basis width differs from ambient dimension");
  Subspace s;
  s.n_ = ambient_dim;
  s.d_ = basis.rows;
  s.data_ = std::move(basis.data);
  return s;
}

Matrix Subspace::basis() const
{
  Matrix m(d_, n_);
  m.data = data_;
  return m;
}

std::vector<std::size_t> Subspace::pivots() const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d_; ++i) {
    const auto r = row(i);
    out.push_back(static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](Elem x) { return x != 0; }) - r.begin()));
  }
  return out;
}

std::vector<Vector> Subspace::rows() const
{
  std::vector<Vector> out;
  for (std::size_t i = 0; i < d_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept
{
  std::size_t h = s.ambient_dim() * 1315423911u + s.dim();
  for (Elem x : s.entries()) h = h * 131 + x + 1;
  return h;
}

Subspace span(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors)
{
  auto r = rref(field, Matrix::from_rows(ambient_dim, vectors));
  return Subspace::from_rref(ambient_dim, std::move(r.matrix));
}

Subspace sum(const Field& field, const Subspace& a, const Subspace& b)
{
  check_ambient(a, b);
  Matrix m(a.dim() + b.dim(), a.ambient_dim());
  std::copy(a.entries().begin(), a.entries().end(), m.data.begin());
  std::copy(b.entries().begin(), b.entries().end(), m.data.begin() + static_cast<std::ptrdiff_t>(a.entries().size()));
  auto r = rref(field, std::move(m));
  return Subspace::from_rref(a.ambient_dim(), std::move(r.matrix));
}

Subspace intersect(const Field& field, const Subspace& a, const Subspace& b)
{
  check_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  Matrix m(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = a.row(i)[j];
      m.at(i, n + j) = a.row(i)[j];
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(a.dim() + i, j) = b.row(i)[j];
  const auto r = rref(field, std::move(m));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n) continue;
    const auto row = r.matrix.row(i);
    rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return span(field, n, rows);
}

bool contains(const Field& field, const Subspace& a, const Subspace& b)
{
  check_ambient(a, b);
  if (b.dim() > a.dim()) return false;
  return stacked_rank(field, a, b) == a.dim();
}

bool contains_vector(const Field& field, const Subspace& a, std::span<const Elem> v)
{
  if (v.size() != a.ambient_dim()) raise(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  // Reduce v against the RREF rows; v ∈ A iff the remainder vanishes.
  Vector r(v.begin(), v.end());
  const auto piv = a.pivots();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Elem c = r[piv[i]];
    if (c == 0) continue;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = field.sub(r[j], field.mul(c, row[j]));
  }
  return is_zero(r);
}

std::size_t sum_dim(const Field& field, const Subspace& a, const Subspace& b)
{
  check_ambient(a, b);
  return stacked_rank(field, a, b);
}

std::size_t intersection_dim(const Field& field, const Subspace& a, const Subspace& b)
{
  return a.dim() + b.dim() - sum_dim(field, a, b);
}

Subspace annihilator(const Field& field, const Subspace& s)
{
  const std::size_t n = s.ambient_dim();
  const auto piv = s.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  // Null space of the RREF basis: one vector per free column.
  std::vector<Vector> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = field.neg(s.row(i)[f]);
    rows.push_back(std::move(v));
  }
  return span(field, n, rows);
}

Subspace image(const Field& field, const Matrix& a, unsigned frobenius_power, const Subspace& s)
{
  if (a.rows != a.cols || a.cols != s.ambient_dim())
    raise(ErrorCode::DimensionMismatch, "transformation does not act on this ambient space");
  std::vector<Vector> rows;
  rows.reserve(s.dim());
  Vector tmp(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto r = s.row(i);
    for (std::size_t j = 0; j < tmp.size(); ++j) tmp[j] = field.frobenius(r[j], frobenius_power);
    rows.push_back(apply(field, a, tmp));
  }
  return span(field, s.ambient_dim(), rows);
}

std::vector<Vector> vectors_of(const Field& field, const Subspace& s)
{
  const std::size_t n = s.ambient_dim();
  std::size_t count = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) count *= field.q();
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<Elem> coeffs(s.dim(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = s.dim(); i-- > 0;) {
      coeffs[i] = static_cast<Elem>(rest % field.q());
      rest /= field.q();
    }
    Vector v(n, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (coeffs[i] == 0) continue;
      const auto r = s.row(i);
      for (std::size_t j = 0; j < n; ++j) v[j] = field.add(v[j], field.mul(coeffs[i], r[j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

QuotientSpace::QuotientSpace(const Field& field, std::size_t ambient_dim, Subspace mod_out)
    : n_(ambient_dim), u_(std::move(mod_out))
{
  if (u_.ambient_dim() != n_) raise(ErrorCode::AmbientMismatch, "quotient by a subspace of another space");
  const auto piv = u_.pivots();
  std::vector<bool> is_pivot(n_, false);
  for (auto c : piv) is_pivot[c] = true;
  for (std::size_t c = 0; c < n_; ++c)
    if (!is_pivot[c]) transversal_.push_back(c);
  map_ = Matrix(transversal_.size(), n_);
  for (std::size_t j = 0; j < transversal_.size(); ++j) {
    map_.at(j, transversal_[j]) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) map_.at(j, piv[i]) = field.neg(u_.row(i)[transversal_[j]]);
  }
}

Vector QuotientSpace::project_vector(const Field& field, std::span<const Elem> v) const
{
  return apply(field, map_, v);
}

Vector QuotientSpace::lift_vector(std::span<const Elem> w) const
{
  if (w.size() != dim()) raise(ErrorCode::AmbientMismatch, "vector is not in quotient coordinates");
  Vector v(n_, 0);
  for (std::size_t j = 0; j < transversal_.size(); ++j) v[transversal_[j]] = w[j];
  return v;
}

Subspace QuotientSpace::project(const Field& field, const Subspace& s) const
{
  if (s.ambient_dim() != n_) raise(ErrorCode::AmbientMismatch, "projecting a subspace of another space");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(project_vector(field, s.row(i)));
  return span(field, dim(), rows);
}

Subspace QuotientSpace::lift(const Field& field, const Subspace& t) const
{
  if (t.ambient_dim() != dim()) raise(ErrorCode::AmbientMismatch, "lifting a subspace of another space");
  std::vector<Vector> rows = u_.rows();
  for (std::size_t i = 0; i < t.dim(); ++i) rows.push_back(lift_vector(t.row(i)));
  return span(field, n_, rows);
}

}  // namespace qgeom
