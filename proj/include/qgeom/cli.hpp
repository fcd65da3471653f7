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

#include <iosfwd>

namespace qgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitConfig = 65;

/// Runs one command line. The summary goes to `out`, diagnostics to `err`;
/// machine-readable outputs only go to files named on the command line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgeom::cli
