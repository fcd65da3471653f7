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

// Small fixtures shared by the test executables.

#pragma once

#include <doctest.h>

#include <functional>

#include "qgeom/error.hpp"
#include "qgeom/polar.hpp"

namespace support {

using namespace qgeom;

inline Field make_field(unsigned q)
{
  if (q == 2 || q == 3 || q == 5 || q == 7) return Field::build({q, 1, {}});
  return Field::build(gf::default_spec(q));
}

inline ErrorCode code_of(const std::function<void()>& fn)
{
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

inline Vector unit(std::size_t n, std::size_t i)
{
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

/// Alternating form pairing (e1,e2), (e3,e4), ... on the first d coordinates.
inline FormSpec symplectic(const Field& f, std::size_t d)
{
  FormSpec s;
  s.kind = FormKind::alternating;
  s.form_dim = d;
  s.gram = Matrix(d, d);
  for (std::size_t i = 0; i + 1 < d; i += 2) {
    s.gram.at(i, i + 1) = 1;
    s.gram.at(i + 1, i) = f.neg(1);
  }
  return s;
}

/// x1 x2 + x3 x4 + ... (+ x_d^2 when d is odd).
inline FormSpec parabolic_or_hyperbolic(std::size_t d)
{
  FormSpec s;
  s.kind = FormKind::quadratic;
  s.form_dim = d;
  s.quad = Matrix(d, d);
  for (std::size_t i = 0; i + 1 < d; i += 2) s.quad.at(i, i + 1) = 1;
  if (d % 2) s.quad.at(d - 1, d - 1) = 1;
  return s;
}

/// Hermitian form with identity Gram matrix.
inline FormSpec unitary(std::size_t d)
{
  FormSpec s;
  s.kind = FormKind::hermitian;
  s.form_dim = d;
  s.gram = Matrix::identity(d);
  return s;
}

}  // namespace support
