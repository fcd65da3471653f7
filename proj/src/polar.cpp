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

#include "qgeom/polar.hpp"

#include <algorithm>
#include <string>

#include "qgeom/grassmann.hpp"

namespace qgeom {

namespace {

void check_support(const FormSpec& form, std::span<const Elem> x)
{
  for (std::size_t i = form.form_dim; i < x.size(); ++i)
    if (x[i] != 0) raise(ErrorCode::OutsideSupport, "nonzero coordinate " + std::to_string(i + 1) + " beyond n'");
  if (x.size() < form.form_dim) raise(ErrorCode::DimensionMismatch, "vector shorter than the form dimension");
}

void check_square(const Matrix& m, std::size_t d, const char* name)
{
  if (m.rows != d || m.cols != d)
    raise(ErrorCode::InvalidArgument, std::string(name) + " must be " + std::to_string(d) + "x" + std::to_string(d));
}

Elem quadratic_value(const Field& f, const FormSpec& form, std::span<const Elem> x)
{
  Elem acc = 0;
  for (std::size_t i = 0; i < form.form_dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = i; j < form.form_dim; ++j) {
      const Elem c = form.quad.at(i, j);
      if (c == 0 || x[j] == 0) continue;
      acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
    }
  }
  return acc;
}

Elem pairing(const Field& f, const FormSpec& form, std::span<const Elem> x, std::span<const Elem> y)
{
  if (form.kind == FormKind::quadratic) {
    Vector s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = f.add(x[i], y[i]);
    return f.sub(f.sub(quadratic_value(f, form, s), quadratic_value(f, form, x)), quadratic_value(f, form, y));
  }
  const bool herm = form.kind == FormKind::hermitian;
  Elem acc = 0;
  for (std::size_t i = 0; i < form.form_dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < form.form_dim; ++j) {
      const Elem yj = herm ? f.conj(y[j]) : y[j];
      acc = f.add(acc, f.mul(x[i], f.mul(form.gram.at(i, j), yj)));
    }
  }
  return acc;
}

}  // namespace

std::string_view to_string(FormKind kind) noexcept
{
  switch (kind) {
    case FormKind::alternating: return "alternating";
    case FormKind::quadratic: return "quadratic";
    case FormKind::hermitian: return "hermitian";
  }
  return "alternating";
}

FormKind form_kind_from_string(std::string_view name)
{
  if (name == "alternating" || name == "symplectic") return FormKind::alternating;
  if (name == "quadratic") return FormKind::quadratic;
  if (name == "hermitian") return FormKind::hermitian;
  raise(ErrorCode::InvalidArgument, "unknown form kind '" + std::string(name) + "'");
}

void validate_form(const Field& field, const FormSpec& form)
{
  const std::size_t d = form.form_dim;
  if (d == 0) raise(ErrorCode::InvalidArgument, "form_dim must be positive");
  const Matrix& m = form.kind == FormKind::quadratic ? form.quad : form.gram;
  check_square(m, d, form.kind == FormKind::quadratic ? "quad" : "gram");
  for (Elem x : m.data)
    if (x >= field.q()) raise(ErrorCode::InvalidArgument, "form coefficient outside the field");
  switch (form.kind) {
    case FormKind::alternating:
      for (std::size_t i = 0; i < d; ++i) {
        if (m.at(i, i) != 0) raise(ErrorCode::InvalidArgument, "alternating gram needs a zero diagonal");
        for (std::size_t j = 0; j < d; ++j)
          if (m.at(i, j) != field.neg(m.at(j, i))) raise(ErrorCode::InvalidArgument, "gram is not antisymmetric");
      }
      break;
    case FormKind::hermitian:
      if (!field.has_conjugation())
        raise(ErrorCode::NoConjugation, "hermitian forms need an even extension degree");
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (m.at(i, j) != field.conj(m.at(j, i)))
            raise(ErrorCode::InvalidArgument, "gram is not conjugate-symmetric");
      break;
    case FormKind::quadratic:
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (m.at(i, j) != 0) raise(ErrorCode::InvalidArgument, "quad must be upper triangular");
      break;
  }
}

Elem evaluate(const Field& field, const FormSpec& form, std::span<const Elem> x, std::span<const Elem> y)
{
  check_support(form, x);
  check_support(form, y);
  if (x.size() != y.size()) raise(ErrorCode::DimensionMismatch, "vectors of different length");
  return pairing(field, form, x, y);
}

Elem evaluate_quadratic(const Field& field, const FormSpec& form, std::span<const Elem> x)
{
  if (form.kind != FormKind::quadratic) raise(ErrorCode::KindMismatch, "form is not quadratic");
  check_support(form, x);
  return quadratic_value(field, form, x);
}

bool is_singular_vector(const Field& field, const FormSpec& form, std::span<const Elem> x)
{
  check_support(form, x);
  if (form.kind == FormKind::quadratic) return quadratic_value(field, form, x) == 0;
  return pairing(field, form, x, x) == 0;
}

Subspace radical(const Field& field, const FormSpec& form, std::size_t ambient_dim)
{
  const std::size_t d = form.form_dim;
  if (ambient_dim < d) raise(ErrorCode::DimensionMismatch, "form_dim exceeds ambient dimension");
  // Column j of the pairing matrix is B(., e_j); the radical is orthogonal to all of them.
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < d; ++j) {
    Vector ej(d, 0);
    ej[j] = 1;
    Vector col(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      Vector ei(d, 0);
      ei[i] = 1;
      col[i] = pairing(field, form, ei, ej);
    }
    columns.push_back(std::move(col));
  }
  Subspace rad = annihilator(field, span(field, d, columns));
  std::vector<Vector> rows;
  if (form.kind == FormKind::quadratic) {
    // Q is additive on the radical of B, so its zeros there form a subspace.
    for (const auto& v : vectors_of(field, rad))
      if (quadratic_value(field, form, v) == 0) rows.push_back(v);
  } else {
    rows = rad.rows();
  }
  for (auto& r : rows) r.resize(ambient_dim, 0);
  return span(field, ambient_dim, rows);
}

bool is_totally_singular(const Field& field, const FormSpec& form, const Subspace& s)
{
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto u = s.row(i);
    if (!is_singular_vector(field, form, u)) return false;
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (evaluate(field, form, u, s.row(j)) != 0) return false;
  }
  return true;
}

PolarSpace build_polar_space(const Field& field, std::size_t n, const FormSpec& form, std::size_t cap)
{
  validate_form(field, form);
  if (form.form_dim > n) raise(ErrorCode::InvalidArgument, "form_dim exceeds n");
  if (radical(field, form, n).dim() != 0) raise(ErrorCode::DegenerateForm, "the form has a nonzero radical");

  PolarSpace ps;
  ps.field_ = field;
  ps.form_ = form;
  ps.n_ = n;
  {
    std::vector<Vector> prefix;
    for (std::size_t i = 0; i < form.form_dim; ++i) {
      Vector e(n, 0);
      e[i] = 1;
      prefix.push_back(std::move(e));
    }
    ps.v_prime_ = span(field, n, prefix);
  }

  std::vector<Vector> point_vectors;
  for (const auto& p : enum_grassmannian(field, form.form_dim, 1, cap)) {
    Vector v(p.row(0).begin(), p.row(0).end());
    v.resize(n, 0);
    if (!is_singular_vector(field, form, v)) continue;
    ps.points_.push_back(span(field, n, std::span(&v, 1)));
    point_vectors.push_back(std::move(v));
  }
  if (ps.points_.empty()) raise(ErrorCode::RankZero, "the form has no singular points");
  {
    // Keep point_vectors aligned with the canonical point order.
    std::vector<std::size_t> order(ps.points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ps.points_[a] < ps.points_[b]; });
    std::vector<Subspace> pts;
    std::vector<Vector> vecs;
    for (auto i : order) {
      pts.push_back(ps.points_[i]);
      vecs.push_back(point_vectors[i]);
    }
    ps.points_ = std::move(pts);
    point_vectors = std::move(vecs);
  }

  std::vector<Subspace> level = ps.points_;
  std::size_t dim = 1;
  std::size_t total = level.size();
  std::size_t dead_end_dim = 0;
  while (true) {
    std::vector<Subspace> next;
    for (const auto& s : level) {
      bool extended = false;
      for (const auto& p : point_vectors) {
        if (contains_vector(field, s, p)) continue;
        bool perp = true;
        for (std::size_t r = 0; r < s.dim() && perp; ++r) perp = pairing(field, form, s.row(r), p) == 0;
        if (!perp) continue;
        extended = true;
        Vector rows = s.entries();
        rows.insert(rows.end(), p.begin(), p.end());
        Matrix m(s.dim() + 1, n);
        m.data = std::move(rows);
        next.push_back(Subspace::from_rref(n, rref(field, std::move(m)).matrix));
      }
      if (!extended && dead_end_dim == 0) dead_end_dim = dim;
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    total += next.size();
    if (total > cap) raise(ErrorCode::TooLarge, "totally singular subspaces exceed the cap");
    if (next.empty()) break;
    if (dim == 1) ps.lines_ = next;
    level = std::move(next);
    ++dim;
  }
  ps.rank_ = dim;
  ps.maximals_ = std::move(level);
  if (dead_end_dim != 0 && dead_end_dim < dim)
    raise(ErrorCode::NonUniformMaximals, "a maximal totally singular subspace of dimension " +
                                             std::to_string(dead_end_dim) + " < " + std::to_string(dim) + " exists");
  if (2 * ps.rank_ > form.form_dim) raise(ErrorCode::DegenerateForm, "rank exceeds half the form dimension");
  return ps;
}

FiniteGraph dual_polar_graph(const PolarSpace& ps, Parallelism par)
{
  return FiniteGraph(kernels::intersection_adjacency(ps.field(), ps.maximals(), ps.rank() - 1, par), par);
}

std::vector<VertexId> point_star(const PolarSpace& ps, const Subspace& s)
{
  if (s.ambient_dim() != ps.ambient_dim()) raise(ErrorCode::AmbientMismatch, "subspace of another space");
  if (!contains(ps.field(), ps.form_support(), s) || !is_totally_singular(ps.field(), ps.form(), s))
    raise(ErrorCode::NotSingular, "subspace is not totally singular");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < ps.maximals().size(); ++i)
    if (contains(ps.field(), ps.maximals()[i], s)) out.push_back(static_cast<VertexId>(i));
  return out;
}

VertexId point_index(const PolarSpace& ps, const Subspace& point)
{
  auto it = std::lower_bound(ps.points().begin(), ps.points().end(), point);
  if (it == ps.points().end() || !(*it == point)) raise(ErrorCode::BadIndex, "not a point of the polar space");
  return static_cast<VertexId>(it - ps.points().begin());
}

}  // namespace qgeom
