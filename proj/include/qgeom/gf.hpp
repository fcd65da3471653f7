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
 * @file gf.hpp
 * @brief Small finite fields GF(p^e).
 *
 * An element is a polynomial of degree < e over GF(p) reduced modulo a
 * user-supplied monic irreducible polynomial. Internally every element is
 * identified with its integer code sum_i coeffs[i] * p^i, so 0 and 1 keep
 * their usual encodings and element enumeration is ordered by code. Addition,
 * multiplication, inversion and Frobenius powers are tabulated once at build
 * time; the tables are filled by plain polynomial arithmetic.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgeom/error.hpp"

namespace qgeom::gf {

/// Raw element code in [0, q). This is what matrices store.
using Elem = std::uint8_t;

inline constexpr unsigned kDefaultFieldCap = 16;
inline constexpr unsigned kMaxFieldOrder = 256;

struct FieldSpec {
  unsigned p = 2;
  unsigned e = 1;
  /// Little-endian coefficients of a monic degree-e polynomial; ignored for e = 1.
  std::vector<unsigned> modulus;

  bool operator==(const FieldSpec&) const = default;
};

class Field;

/// Checked element handle. Holds a pointer to its field, which must outlive it.
class FieldElement {
 public:
  FieldElement() = default;

  const Field* field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }
  std::vector<unsigned> coeffs() const;

  bool operator==(const FieldElement& other) const noexcept { return code_ == other.code_; }

 private:
  friend class Field;
  FieldElement(const Field* field, Elem code) : field_(field), code_(code) {}

  const Field* field_ = nullptr;
  Elem code_ = 0;
};

class Field {
 public:
  /// Validates the spec (primality, irreducibility, size cap) and tabulates arithmetic.
  static Field build(const FieldSpec& spec, unsigned cap = kDefaultFieldCap);

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned p() const noexcept { return spec_.p; }
  unsigned e() const noexcept { return spec_.e; }
  unsigned q() const noexcept { return q_; }
  bool same_as(const Field& other) const noexcept { return spec_ == other.spec_; }

  // Raw arithmetic on codes. No bounds checks; the hot paths of the linear algebra live here.
  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  /// Inverse of a nonzero code; inv(0) is 0 and must not be relied on.
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  /// a^(p^power), power taken modulo e.
  Elem frobenius(Elem a, unsigned power) const noexcept { return frob_[(power % spec_.e) * q_ + a]; }
  bool has_conjugation() const noexcept { return spec_.e % 2 == 0; }
  /// a^(sqrt q). Only meaningful when e is even.
  Elem conj(Elem a) const noexcept { return frobenius(a, spec_.e / 2); }

  // Checked element API.
  FieldElement element(unsigned code) const;
  FieldElement from_coeffs(std::span<const unsigned> coeffs) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  /// All q elements ordered by code.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement conj(FieldElement a) const;

  std::vector<unsigned> coeffs_of(Elem a) const;
  Elem code_of(std::span<const unsigned> coeffs) const;

 private:
  Field() = default;
  void check_member(const FieldElement& a) const;

  FieldSpec spec_;
  unsigned q_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<Elem> frob_;
};

bool is_prime(unsigned p) noexcept;

/// Brute force: looks for a monic factor of degree 1..deg/2.
bool is_irreducible(unsigned p, std::span<const unsigned> poly);

/// Documented default moduli for the small extension fields used in the bundled configs.
FieldSpec default_spec(unsigned q);

}  // namespace qgeom::gf
