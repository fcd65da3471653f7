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

#include <cstddef>

namespace qgeom {

/// Worker budget for the OpenMP kernels. One worker selects the serial
/// reference path; results never depend on the count.
struct Parallelism {
  unsigned workers = 1;

  bool serial() const noexcept { return workers <= 1; }
};

/// Global enumeration cap: 10^6 unless QGEOM_CAP is set.
std::size_t enumeration_cap();

inline constexpr std::size_t kDistanceTableCap = 5000;

}  // namespace qgeom
