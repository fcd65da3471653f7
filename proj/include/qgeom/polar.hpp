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
 * @file polar.hpp
 * @brief Reflexive and quadratic forms, polar spaces, dual polar graphs.
 *
 * A form lives on the coordinate prefix V' = <e_1, ..., e_{n'}> of V = GF(q)^n.
 * Singular points, totally singular lines and the maximal totally singular
 * subspaces are enumerated exactly; the rank m is the common dimension of the
 * maximals.
 */

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qgeom/graph.hpp"
#include "qgeom/subspace.hpp"

namespace qgeom {

enum class FormKind { alternating, quadratic, hermitian };

std::string_view to_string(FormKind kind) noexcept;
FormKind form_kind_from_string(std::string_view name);

struct FormSpec {
  FormKind kind = FormKind::alternating;
  std::size_t form_dim = 0;
  /// n' x n' Gram matrix (alternating, hermitian).
  Matrix gram;
  /// Upper-triangular n' x n' coefficients, Q(x) = sum_{i<=j} quad[i][j] x_i x_j.
  Matrix quad;
};

/// Shape and symmetry checks (antisymmetry, conjugate symmetry, triangularity).
/// Nondegeneracy is checked separately via radical().
void validate_form(const Field& field, const FormSpec& form);

/// Bilinear/sesquilinear value B(x, y); for quadratic kind the polar form
/// Q(x+y) - Q(x) - Q(y). Vectors have ambient length and must vanish past n'.
Elem evaluate(const Field& field, const FormSpec& form, std::span<const Elem> x, std::span<const Elem> y);
/// Q(x). Throws KindMismatch for non-quadratic forms.
Elem evaluate_quadratic(const Field& field, const FormSpec& form, std::span<const Elem> x);
/// Whether the 1-space <x> is singular (Q(x) = 0, or B(x, x) = 0).
bool is_singular_vector(const Field& field, const FormSpec& form, std::span<const Elem> x);

/// {v in V' : B(v, .) = 0}, intersected with {Q = 0} for quadratic forms, as a
/// subspace of GF(q)^ambient_dim.
Subspace radical(const Field& field, const FormSpec& form, std::size_t ambient_dim);

bool is_totally_singular(const Field& field, const FormSpec& form, const Subspace& s);

class PolarSpace {
 public:
  const Field& field() const noexcept { return field_; }
  const FormSpec& form() const noexcept { return form_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rank_; }
  /// Span of the first n' coordinates.
  const Subspace& form_support() const noexcept { return v_prime_; }
  const std::vector<Subspace>& points() const noexcept { return points_; }
  const std::vector<Subspace>& lines() const noexcept { return lines_; }
  const std::vector<Subspace>& maximals() const noexcept { return maximals_; }

 private:
  friend PolarSpace build_polar_space(const Field&, std::size_t, const FormSpec&, std::size_t);

  Field field_ = Field::build({2, 1, {}});
  FormSpec form_;
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  Subspace v_prime_;
  std::vector<Subspace> points_;
  std::vector<Subspace> lines_;
  std::vector<Subspace> maximals_;
};

/// Enumerates singular points, totally singular subspaces level by level
/// (extension by perpendicular singular points, RREF deduplication) and keeps
/// the top level as the maximals. Throws DegenerateForm, RankZero,
/// NonUniformMaximals, TooLarge.
PolarSpace build_polar_space(const Field& field, std::size_t n, const FormSpec& form,
                             std::size_t cap = enumeration_cap());

/// Γ(Π): maximals in canonical order, adjacent iff they meet in dimension m-1.
FiniteGraph dual_polar_graph(const PolarSpace& ps, Parallelism par = {});

/// Indices of the maximals containing the totally singular subspace S. Throws NotSingular.
std::vector<VertexId> point_star(const PolarSpace& ps, const Subspace& s);

/// Index of a point in ps.points(), or BadIndex.
VertexId point_index(const PolarSpace& ps, const Subspace& point);

}  // namespace qgeom
