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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeom {

enum class ErrorCode {
  // gf
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  NoConjugation,
  // subspace / grassmann / graph
  AmbientMismatch,
  DimensionMismatch,
  TooLarge,
  BadIndex,
  NotDistanceRegular,
  Disconnected,
  // polar
  OutsideSupport,
  KindMismatch,
  DegenerateForm,
  RankZero,
  NonUniformMaximals,
  NotSingular,
  // embed
  NotInjective,
  DistanceViolation,
  NoValidU,
  RankTooSmall,
  LemmaViolation,
  StarViolation,
  EmptyIntersection,
  ContainmentViolation,
  PartialLine,
  NotEquivalent,
  NoEmbedding,
  SearchBudgetExceeded,
  // configuration
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Outcomes that the underlying theory rules out. Seeing one means either a
/// bug or a counterexample; they are never downgraded to warnings.
bool is_critical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qgeom
