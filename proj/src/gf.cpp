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

#include "qgeom/gf.hpp"

#include <algorithm>
#include <string>

namespace qgeom::gf {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inverse_mod_p(unsigned a, unsigned p)
{
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

// Remainder of a modulo a monic-or-not nonzero divisor, coefficients mod p.
Poly poly_mod(Poly a, const Poly& divisor, unsigned p)
{
  trim(a);
  Poly d = divisor;
  trim(d);
  const unsigned lead_inv = inverse_mod_p(d.back(), p);
  while (a.size() >= d.size() && !a.empty()) {
    const std::size_t shift = a.size() - d.size();
    const unsigned factor = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i < d.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - factor * d[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p)
{
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

}  // namespace

bool is_prime(unsigned p) noexcept
{
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly)
{
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Every monic candidate of degree d is enumerated by its d low coefficients.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::size_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec default_spec(unsigned q)
{
  switch (q) {
    case 2: return {2, 1, {}};
    case 3: return {3, 1, {}};
    case 4: return {2, 2, {1, 1, 1}};
    case 5: return {5, 1, {}};
    case 7: return {7, 1, {}};
    case 8: return {2, 3, {1, 1, 0, 1}};
    case 9: return {3, 2, {1, 0, 1}};
    case 16: return {2, 4, {1, 1, 0, 0, 1}};
    default: raise(ErrorCode::InvalidArgument, "no default modulus for q = " + std::to_string(q));
  }
}

Field Field::build(const FieldSpec& spec, unsigned cap)
{
  if (!is_prime(spec.p)) raise(ErrorCode::NotPrime, std::to_string(spec.p) + " is not prime");
  if (spec.e == 0) raise(ErrorCode::InvalidArgument, "extension degree must be >= 1");

  unsigned long long q = 1;
  for (unsigned i = 0; i < spec.e; ++i) {
    q *= spec.p;
    if (q > kMaxFieldOrder || q > cap) break;
  }
  if (q > cap || q > kMaxFieldOrder)
    raise(ErrorCode::FieldTooLarge,
          "p^e exceeds cap " + std::to_string(std::min<unsigned>(cap, kMaxFieldOrder)));

  Field field;
  field.spec_ = spec;
  field.q_ = static_cast<unsigned>(q);
  if (spec.e == 1) {
    field.spec_.modulus = {0, 1};
  } else {
    if (spec.modulus.size() != spec.e + 1)
      raise(ErrorCode::InvalidArgument, "modulus must have e+1 coefficients");
    for (unsigned c : spec.modulus)
      if (c >= spec.p) raise(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    if (spec.modulus.back() != 1) raise(ErrorCode::InvalidArgument, "modulus must be monic");
    if (!is_irreducible(spec.p, spec.modulus))
      raise(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(spec.p) + ")");
  }

  const unsigned qq = field.q_;
  const unsigned p = spec.p;
  const unsigned e = spec.e;
  std::vector<Poly> polys(qq);
  for (unsigned a = 0; a < qq; ++a) {
    polys[a] = field.coeffs_of(static_cast<Elem>(a));
    trim(polys[a]);
  }
  auto encode = [&](Poly poly) {
    poly.resize(e, 0);
    unsigned code = 0;
    for (unsigned i = e; i-- > 0;) code = code * p + poly[i];
    return static_cast<Elem>(code);
  };

  field.add_.resize(qq * qq);
  field.mul_.resize(qq * qq);
  field.neg_.resize(qq);
  field.inv_.assign(qq, 0);
  const Poly modulus(field.spec_.modulus.begin(), field.spec_.modulus.end());
  for (unsigned a = 0; a < qq; ++a) {
    const Poly pa = field.coeffs_of(static_cast<Elem>(a));
    Poly na(e);
    for (unsigned i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    field.neg_[a] = encode(na);
    for (unsigned b = 0; b < qq; ++b) {
      const Poly pb = field.coeffs_of(static_cast<Elem>(b));
      Poly s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
      field.add_[a * qq + b] = encode(s);
      field.mul_[a * qq + b] = encode(poly_mod(poly_mul(polys[a], polys[b], p), modulus, p));
    }
  }
  for (unsigned a = 1; a < qq; ++a)
    for (unsigned b = 1; b < qq; ++b)
      if (field.mul_[a * qq + b] == 1) {
        field.inv_[a] = static_cast<Elem>(b);
        break;
      }

  field.frob_.resize(e * qq);
  for (unsigned a = 0; a < qq; ++a) {
    Elem x = static_cast<Elem>(a);
    for (unsigned t = 0; t < e; ++t) {
      field.frob_[t * qq + a] = x;
      Elem y = 1;
      for (unsigned i = 0; i < p; ++i) y = field.mul(y, x);
      x = y;
    }
  }
  return field;
}

std::vector<unsigned> Field::coeffs_of(Elem a) const
{
  std::vector<unsigned> out(spec_.e, 0);
  unsigned rest = a;
  for (unsigned i = 0; i < spec_.e; ++i) {
    out[i] = rest % spec_.p;
    rest /= spec_.p;
  }
  return out;
}

Elem Field::code_of(std::span<const unsigned> coeffs) const
{
  if (coeffs.size() != spec_.e) raise(ErrorCode::InvalidArgument, "expected e coefficients");
  unsigned code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= spec_.p) raise(ErrorCode::InvalidArgument, "coefficient out of range");
    code = code * spec_.p + coeffs[i];
  }
  return static_cast<Elem>(code);
}

std::vector<unsigned> FieldElement::coeffs() const
{
  if (field_ == nullptr) return {};
  return field_->coeffs_of(code_);
}

FieldElement Field::element(unsigned code) const
{
  if (code >= q_) raise(ErrorCode::InvalidArgument, "element code out of range");
  return FieldElement(this, static_cast<Elem>(code));
}

FieldElement Field::from_coeffs(std::span<const unsigned> coeffs) const { return FieldElement(this, code_of(coeffs)); }

std::vector<FieldElement> Field::elements() const
{
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (unsigned a = 0; a < q_; ++a) out.push_back(FieldElement(this, static_cast<Elem>(a)));
  return out;
}

void Field::check_member(const FieldElement& a) const
{
  if (a.field_ == nullptr || !(a.field_ == this || a.field_->same_as(*this)))
    raise(ErrorCode::FieldMismatch, "element belongs to a different field");
}

FieldElement Field::add(FieldElement a, FieldElement b) const
{
  check_member(a);
  check_member(b);
  return FieldElement(this, add(a.code_, b.code_));
}

FieldElement Field::sub(FieldElement a, FieldElement b) const
{
  check_member(a);
  check_member(b);
  return FieldElement(this, sub(a.code_, b.code_));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const
{
  check_member(a);
  check_member(b);
  return FieldElement(this, mul(a.code_, b.code_));
}

FieldElement Field::inv(FieldElement a) const
{
  check_member(a);
  if (a.code_ == 0) raise(ErrorCode::DivisionByZero, "zero has no inverse");
  return FieldElement(this, inv(a.code_));
}

FieldElement Field::conj(FieldElement a) const
{
  check_member(a);
  if (!has_conjugation())
    raise(ErrorCode::NoConjugation, "GF(" + std::to_string(q_) + ") has odd extension degree");
  return FieldElement(this, conj(a.code_));
}

}  // namespace qgeom::gf
