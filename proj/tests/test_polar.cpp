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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qgeom/grassmann.hpp"
#include "qgeom/polar.hpp"
#include "support.hpp"

using namespace qgeom;
using support::code_of;
using support::make_field;
using support::unit;

namespace {

// Brute-force count of singular 1-spaces: nonzero singular vectors / (q - 1).
std::size_t count_singular_points(const Field& f, const FormSpec& form, std::size_t n)
{
  std::size_t vecs = 0;
  for (const auto& v : oracle::all_vectors(f.q(), n)) {
    bool zero = true;
    bool outside = false;
    for (std::size_t i = 0; i < n; ++i) {
      zero = zero && v[i] == 0;
      outside = outside || (i >= form.form_dim && v[i] != 0);
    }
    if (zero || outside) continue;
    Vector x(v.begin(), v.end());
    if (is_singular_vector(f, form, x)) ++vecs;
  }
  return vecs / (f.q() - 1);
}

bool collinear(const PolarSpace& ps, const Subspace& a, const Subspace& b)
{
  return is_totally_singular(ps.field(), ps.form(), sum(ps.field(), a, b));
}

}  // namespace

TEST_CASE("form evaluation examples")
{
  const auto f2 = make_field(2);
  const auto w = support::symplectic(f2, 4);
  CHECK(evaluate(f2, w, unit(4, 0), unit(4, 1)) == 1);
  CHECK(evaluate(f2, w, unit(4, 0), unit(4, 2)) == 0);
  CHECK(evaluate(f2, w, unit(4, 0), unit(4, 0)) == 0);
  CHECK(code_of([&] { evaluate_quadratic(f2, w, unit(4, 0)); }) == ErrorCode::KindMismatch);

  const auto q = support::parabolic_or_hyperbolic(5);
  Vector x{1, 1, 0, 0, 0};
  CHECK(evaluate_quadratic(f2, q, x) == 1);
  CHECK(evaluate_quadratic(f2, q, unit(5, 4)) == 1);
  CHECK(evaluate_quadratic(f2, q, unit(5, 0)) == 0);
  CHECK(evaluate(f2, q, unit(5, 0), unit(5, 1)) == 1);
  // over characteristic 2 the polar form of x5^2 vanishes
  CHECK(evaluate(f2, q, unit(5, 4), unit(5, 4)) == 0);

  const auto f4 = make_field(4);
  const auto h = support::unitary(3);
  const Vector a{1, 1, 0};  // B(a, a) = 1 + 1 = 0
  CHECK(is_singular_vector(f4, h, a));
  CHECK_FALSE(is_singular_vector(f4, h, unit(3, 0)));
  CHECK(code_of([&] { evaluate(f4, h, Vector{0, 0, 0, 1}, Vector{0, 0, 0, 1}); }) == ErrorCode::OutsideSupport);
}

TEST_CASE("form validation")
{
  const auto f3 = make_field(3);
  auto bad = support::symplectic(f3, 2);
  bad.gram.at(1, 0) = 1;
  CHECK(code_of([&] { validate_form(f3, bad); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { validate_form(f3, support::unitary(2)); }) == ErrorCode::NoConjugation);
  auto lower = support::parabolic_or_hyperbolic(2);
  lower.quad.at(1, 0) = 1;
  CHECK(code_of([&] { validate_form(f3, lower); }) == ErrorCode::InvalidArgument);
  CHECK(form_kind_from_string("hermitian") == FormKind::hermitian);
  CHECK(to_string(FormKind::quadratic) == "quadratic");
  CHECK(code_of([] { form_kind_from_string("orthogonal"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("radical of a degenerate form")
{
  const auto f3 = make_field(3);
  FormSpec q;
  q.kind = FormKind::quadratic;
  q.form_dim = 2;
  q.quad = Matrix(2, 2);
  q.quad.at(0, 0) = 1;  // Q = x1^2
  CHECK(radical(f3, q, 2) == span(f3, 2, std::vector<Vector>{unit(2, 1)}));
  CHECK(code_of([&] { build_polar_space(f3, 2, q); }) == ErrorCode::DegenerateForm);

  const auto f2 = make_field(2);
  CHECK(radical(f2, support::parabolic_or_hyperbolic(5), 5).dim() == 0);
  CHECK(radical(f2, support::symplectic(f2, 4), 5).dim() == 0);
  FormSpec zero = support::symplectic(f2, 3);  // third coordinate is radical
  CHECK(radical(f2, zero, 3).dim() == 1);
}

TEST_CASE("three classical spaces of rank 2")
{
  struct Case {
    unsigned q;
    FormSpec form;
    std::size_t points;
    std::size_t lines;
    std::vector<unsigned> b;
    std::vector<unsigned> c;
  };
  const auto f2 = make_field(2);
  const std::vector<Case> cases{
      {2, support::symplectic(f2, 4), 15, 15, {6, 4}, {1, 3}},
      {2, support::parabolic_or_hyperbolic(5), 15, 15, {6, 4}, {1, 3}},
      {4, support::unitary(4), 45, 27, {10, 8}, {1, 5}},
  };
  for (const auto& c : cases) {
    const auto f = make_field(c.q);
    const auto ps = build_polar_space(f, c.form.form_dim, c.form);
    CHECK(ps.rank() == 2);
    CHECK(ps.points().size() == c.points);
    CHECK(ps.points().size() == count_singular_points(f, c.form, c.form.form_dim));
    CHECK(ps.lines().size() == c.lines);
    CHECK(ps.maximals().size() == c.lines);
    const auto g = dual_polar_graph(ps);
    const auto in = intersection_numbers(g);
    CHECK(in.b_array() == c.b);
    CHECK(in.c_array() == c.c);
    CHECK(g.diameter() == ps.rank());
    for (const auto& m : ps.maximals()) CHECK(is_totally_singular(f, c.form, m));
  }
}

TEST_CASE("one-or-all axiom")
{
  const auto f2 = make_field(2);
  const auto f4 = make_field(4);
  const std::vector<PolarSpace> spaces{
      build_polar_space(f2, 4, support::symplectic(f2, 4)),
      build_polar_space(f2, 5, support::parabolic_or_hyperbolic(5)),
      build_polar_space(f4, 4, support::unitary(4)),
      build_polar_space(f2, 6, support::symplectic(f2, 6)),
  };
  for (const auto& ps : spaces) {
    for (const auto& l : ps.lines()) {
      std::vector<const Subspace*> on_line;
      for (const auto& p : ps.points())
        if (contains(ps.field(), l, p)) on_line.push_back(&p);
      CHECK(on_line.size() == ps.field().q() + 1);
      for (const auto& p : ps.points()) {
        std::size_t hits = 0;
        for (const auto* r : on_line) hits += collinear(ps, p, *r);
        CHECK((hits == 1 || hits == on_line.size()));
      }
    }
  }
}

TEST_CASE("rank 3 symplectic space")
{
  const auto f2 = make_field(2);
  const auto ps = build_polar_space(f2, 6, support::symplectic(f2, 6));
  CHECK(ps.rank() == 3);
  CHECK(ps.points().size() == 63);
  CHECK(ps.maximals().size() == 135);
  const auto g = dual_polar_graph(ps);
  const auto in = intersection_numbers(g);
  CHECK(in.b_array() == std::vector<unsigned>{14, 12, 8});
  CHECK(in.c_array() == std::vector<unsigned>{1, 3, 7});
}

TEST_CASE("point stars induce connected subgraphs")
{
  const auto f2 = make_field(2);
  for (const auto& ps : {build_polar_space(f2, 6, support::symplectic(f2, 6)),
                         build_polar_space(f2, 5, support::parabolic_or_hyperbolic(5))}) {
    const auto g = dual_polar_graph(ps);
    for (const auto& p : ps.points()) {
      const auto st = point_star(ps, p);
      CHECK(!st.empty());
      for (auto m : st) CHECK(contains(f2, ps.maximals()[m], p));
      CHECK(induced_subgraph(g, st).connected());
    }
    for (const auto& l : ps.lines()) CHECK(induced_subgraph(g, point_star(ps, l)).connected());
  }
  const auto w = build_polar_space(f2, 4, support::symplectic(f2, 4));
  CHECK(code_of([&] { point_star(w, Subspace::full(4)); }) == ErrorCode::NotSingular);
}

TEST_CASE("rank one gives a complete graph")
{
  const auto f3 = make_field(3);
  const auto ps = build_polar_space(f3, 2, support::symplectic(f3, 2));
  CHECK(ps.rank() == 1);
  CHECK(ps.maximals().size() == 4);
  const auto g = dual_polar_graph(ps);
  CHECK(g.edge_count() == 6);
  CHECK(g.diameter() == 1);
}

TEST_CASE("form inside a larger ambient space")
{
  const auto f2 = make_field(2);
  const auto ps = build_polar_space(f2, 5, support::symplectic(f2, 4));
  CHECK(ps.ambient_dim() == 5);
  CHECK(ps.form_support().dim() == 4);
  CHECK(ps.points().size() == 15);
  for (const auto& p : ps.points()) CHECK(contains(f2, ps.form_support(), p));
  CHECK(point_index(ps, ps.points()[7]) == 7);
  CHECK(code_of([&] { point_index(ps, span(f2, 5, std::vector<Vector>{unit(5, 4)})); }) == ErrorCode::BadIndex);
}

TEST_CASE("anisotropic form has rank zero")
{
  const auto f2 = make_field(2);
  FormSpec q;
  q.kind = FormKind::quadratic;
  q.form_dim = 2;
  q.quad = Matrix(2, 2);
  q.quad.at(0, 0) = 1;
  q.quad.at(0, 1) = 1;
  q.quad.at(1, 1) = 1;  // x^2 + xy + y^2 is irreducible over GF(2)
  CHECK(code_of([&] { build_polar_space(f2, 2, q); }) == ErrorCode::RankZero);
}

TEST_CASE("serial and parallel dual polar graphs agree")
{
  const auto f2 = make_field(2);
  const auto ps = build_polar_space(f2, 6, support::symplectic(f2, 6));
  const auto a = dual_polar_graph(ps);
  const auto b = dual_polar_graph(ps, Parallelism{4});
  CHECK(a.adjacency() == b.adjacency());
}
