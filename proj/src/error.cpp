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

#include "qgeom/error.hpp"

namespace qgeom {

std::string_view to_string(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoConjugation: return "NoConjugation";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::NonUniformMaximals: return "NonUniformMaximals";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::DistanceViolation: return "DistanceViolation";
    case ErrorCode::NoValidU: return "NoValidU";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::StarViolation: return "StarViolation";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::PartialLine: return "PartialLine";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_critical(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::LemmaViolation:
    case ErrorCode::EmptyIntersection:
    case ErrorCode::PartialLine:
    case ErrorCode::NotEquivalent: return true;
    default: return false;
  }
}

}  // namespace qgeom
