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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qgeom/parallel.hpp"

namespace qgeom {

using VertexId = std::uint32_t;
using AdjacencyLists = std::vector<std::vector<VertexId>>;

inline constexpr std::uint8_t kUnreachable = 0xff;

/// Immutable simple graph. Neighbor lists are sorted; all-pairs distances are
/// cached when the order is at most the table cap.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(AdjacencyLists adjacency, Parallelism par = {}, std::size_t table_cap = kDistanceTableCap);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  std::span<const VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  const AdjacencyLists& adjacency() const noexcept { return adjacency_; }

  bool has_distance_table() const noexcept { return !distances_.empty() || adjacency_.empty(); }
  /// Row-major order x order table, kUnreachable for disconnected pairs.
  std::span<const std::uint8_t> distance_table() const noexcept { return distances_; }
  /// Cached lookup when available, BFS otherwise; nullopt when unreachable.
  std::optional<unsigned> distance(VertexId u, VertexId v) const;

  bool connected() const;
  unsigned diameter() const;

 private:
  AdjacencyLists adjacency_;
  std::vector<std::uint8_t> distances_;
};

/// Plain BFS, independent of any cached table. Throws BadIndex.
std::optional<unsigned> bfs_distance(const FiniteGraph& g, VertexId a, VertexId b);
/// Distances from one source; kUnreachable where not reached.
std::vector<std::uint8_t> bfs_from(const AdjacencyLists& adjacency, VertexId source);

FiniteGraph induced_subgraph(const FiniteGraph& g, std::span<const VertexId> vertices);

struct IntersectionTriple {
  unsigned c = 0;
  unsigned a = 0;
  unsigned b = 0;
  bool operator==(const IntersectionTriple&) const = default;
};

struct IntersectionNumbers {
  unsigned degree = 0;
  unsigned diameter = 0;
  /// Keyed by distance i >= 1.
  std::map<unsigned, IntersectionTriple> table;

  /// {b_0, ..., b_{d-1}; c_1, ..., c_d}
  std::vector<unsigned> b_array() const;
  std::vector<unsigned> c_array() const;
};

/// Empirical intersection numbers. Throws Disconnected or NotDistanceRegular
/// (naming the first pair, in vertex order, whose counts disagree).
IntersectionNumbers intersection_numbers(const FiniteGraph& g, Parallelism par = {});

namespace kernels {

// Serial references and OpenMP variants. The dispatching wrappers pick one by
// Parallelism::serial(); both produce identical output.

std::vector<std::uint8_t> all_pairs_distances_serial(const AdjacencyLists& adjacency);
std::vector<std::uint8_t> all_pairs_distances_omp(const AdjacencyLists& adjacency, unsigned workers);
std::vector<std::uint8_t> all_pairs_distances(const AdjacencyLists& adjacency, Parallelism par);

/// Counts seen from one source u: by_distance[i] holds the (c, a, b) counts of
/// the first vertex at distance i; conflict names the first later vertex at
/// the same distance whose counts differ.
struct SourceProfile {
  std::vector<IntersectionTriple> by_distance;
  std::optional<VertexId> conflict;
  bool operator==(const SourceProfile&) const = default;
};

SourceProfile source_profile(const FiniteGraph& g, VertexId u);
std::vector<SourceProfile> distance_profiles_serial(const FiniteGraph& g);
std::vector<SourceProfile> distance_profiles_omp(const FiniteGraph& g, unsigned workers);

}  // namespace kernels

}  // namespace qgeom
