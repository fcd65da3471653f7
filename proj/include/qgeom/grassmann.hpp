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
#include <optional>
#include <vector>

#include "qgeom/graph.hpp"
#include "qgeom/subspace.hpp"

namespace qgeom {

/// Version tag of the vertex ordering used in every exported report.
inline constexpr const char* kOrderingVersion = "rref-lex-1";

/// Number of k-dimensional subspaces of GF(q)^n; throws TooLarge on 64-bit overflow.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

/// All k-subspaces of GF(q)^n in canonical (lexicographic RREF) order, built
/// from pivot patterns. Throws TooLarge when the count exceeds the cap.
std::vector<Subspace> enum_grassmannian(const Field& field, std::size_t n, std::size_t k,
                                        std::size_t cap = enumeration_cap());

/// Every k-subspace containing U, via the quotient V/U. Canonical order.
std::vector<Subspace> star(const Field& field, const Subspace& u, std::size_t k,
                           std::size_t cap = enumeration_cap());

/// k - dim(A ∩ B). Throws DimensionMismatch unless dim A = dim B.
unsigned grassmann_distance(const Field& field, const Subspace& a, const Subspace& b);

/// Annihilator map V -> V*; sends k-subspaces to (n-k)-subspaces.
Subspace duality_map(const Field& field, const Subspace& a);

namespace kernels {

/// Adjacency where two vertices are joined iff their intersection has the given dimension.
AdjacencyLists intersection_adjacency_serial(const Field& field, const std::vector<Subspace>& vertices,
                                             std::size_t meet_dim);
AdjacencyLists intersection_adjacency_omp(const Field& field, const std::vector<Subspace>& vertices,
                                          std::size_t meet_dim, unsigned workers);
AdjacencyLists intersection_adjacency(const Field& field, const std::vector<Subspace>& vertices,
                                      std::size_t meet_dim, Parallelism par);

}  // namespace kernels

struct GrassmannOptions {
  /// Build Γ_k(V) even when k ∈ {0, 1, n-1, n}.
  bool allow_trivial = false;
  Parallelism par;
  std::size_t cap = enumeration_cap();
};

/// Γ_k(V): vertices in canonical order, adjacency = (k-1)-dimensional meet.
class GrassmannGraph {
 public:
  GrassmannGraph(const Field& field, std::size_t n, std::size_t k, GrassmannOptions options = {});

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Subspace>& vertices() const noexcept { return vertices_; }
  const FiniteGraph& graph() const noexcept { return graph_; }
  /// Position of a k-subspace in the vertex order.
  std::optional<VertexId> index_of(const Subspace& s) const;

 private:
  Field field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Subspace> vertices_;
  FiniteGraph graph_;
};

/// Index map Γ_k(V) -> Γ_{n-k}(V*) induced by duality_map.
std::vector<VertexId> duality_vertex_map(const GrassmannGraph& from, const GrassmannGraph& to);

}  // namespace qgeom
