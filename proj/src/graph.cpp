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

#include "qgeom/graph.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "qgeom/error.hpp"

namespace qgeom {

std::size_t enumeration_cap()
{
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("QGEOM_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return cap;
}

std::vector<std::uint8_t> bfs_from(const AdjacencyLists& adjacency, VertexId source)
{
  std::vector<std::uint8_t> dist(adjacency.size(), kUnreachable);
  std::vector<VertexId> frontier{source};
  dist[source] = 0;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<VertexId> next;
    ++level;
    for (VertexId v : frontier)
      for (VertexId w : adjacency[v])
        if (dist[w] == kUnreachable) {
          dist[w] = level;
          next.push_back(w);
        }
    frontier.swap(next);
  }
  return dist;
}

namespace kernels {

std::vector<std::uint8_t> all_pairs_distances_serial(const AdjacencyLists& adjacency)
{
  const std::size_t n = adjacency.size();
  std::vector<std::uint8_t> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto row = bfs_from(adjacency, static_cast<VertexId>(u));
    std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(u * n));
  }
  return table;
}

std::vector<std::uint8_t> all_pairs_distances_omp(const AdjacencyLists& adjacency, unsigned workers)
{
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(adjacency.size());
  std::vector<std::uint8_t> table(adjacency.size() * adjacency.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    const auto row = bfs_from(adjacency, static_cast<VertexId>(u));
    std::copy(row.begin(), row.end(), table.begin() + u * n);
  }
  return table;
}

std::vector<std::uint8_t> all_pairs_distances(const AdjacencyLists& adjacency, Parallelism par)
{
  return par.serial() ? all_pairs_distances_serial(adjacency) : all_pairs_distances_omp(adjacency, par.workers);
}

SourceProfile source_profile(const FiniteGraph& g, VertexId u)
{
  std::vector<std::uint8_t> owned;
  std::span<const std::uint8_t> dist;
  const std::size_t n = g.order();
  if (g.has_distance_table()) {
    dist = g.distance_table().subspan(u * n, n);
  } else {
    owned = bfs_from(g.adjacency(), u);
    dist = owned;
  }
  SourceProfile out;
  std::vector<bool> seen;
  for (std::size_t v = 0; v < n; ++v) {
    const unsigned i = dist[v];
    if (i == kUnreachable) {
      if (!out.conflict) out.conflict = static_cast<VertexId>(v);
      continue;
    }
    IntersectionTriple t;
    for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
      const unsigned j = dist[w];
      if (j + 1 == i) ++t.c;
      else if (j == i) ++t.a;
      else if (j == i + 1) ++t.b;
    }
    if (i >= out.by_distance.size()) {
      out.by_distance.resize(i + 1);
      seen.resize(i + 1, false);
    }
    if (!seen[i]) {
      seen[i] = true;
      out.by_distance[i] = t;
    } else if (!(out.by_distance[i] == t) && !out.conflict) {
      out.conflict = static_cast<VertexId>(v);
    }
  }
  return out;
}

std::vector<SourceProfile> distance_profiles_serial(const FiniteGraph& g)
{
  std::vector<SourceProfile> out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) out[u] = source_profile(g, static_cast<VertexId>(u));
  return out;
}

std::vector<SourceProfile> distance_profiles_omp(const FiniteGraph& g, unsigned workers)
{
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.order());
  std::vector<SourceProfile> out(g.order());
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
  for (std::ptrdiff_t u = 0; u < n; ++u) out[static_cast<std::size_t>(u)] = source_profile(g, static_cast<VertexId>(u));
  return out;
}

}  // namespace kernels

FiniteGraph::FiniteGraph(AdjacencyLists adjacency, Parallelism par, std::size_t table_cap)
    : adjacency_(std::move(adjacency))
{
  const std::size_t n = adjacency_.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (VertexId w : list) {
      if (w >= n) raise(ErrorCode::BadIndex, "neighbor index out of range");
      if (w == v) raise(ErrorCode::InvalidArgument, "loops are not allowed");
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : adjacency_[v])
      if (!std::binary_search(adjacency_[w].begin(), adjacency_[w].end(), static_cast<VertexId>(v)))
        raise(ErrorCode::InvalidArgument, "adjacency is not symmetric");
  if (n <= table_cap && n > 0) distances_ = kernels::all_pairs_distances(adjacency_, par);
}

std::size_t FiniteGraph::edge_count() const noexcept
{
  std::size_t twice = 0;
  for (const auto& l : adjacency_) twice += l.size();
  return twice / 2;
}

std::span<const VertexId> FiniteGraph::neighbors(VertexId v) const
{
  if (v >= order()) raise(ErrorCode::BadIndex, "vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

bool FiniteGraph::adjacent(VertexId u, VertexId v) const
{
  const auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::optional<unsigned> FiniteGraph::distance(VertexId u, VertexId v) const
{
  if (u >= order() || v >= order()) raise(ErrorCode::BadIndex, "vertex index out of range");
  if (!distances_.empty()) {
    const auto d = distances_[u * order() + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  return bfs_distance(*this, u, v);
}

bool FiniteGraph::connected() const
{
  if (order() == 0) return true;
  const auto d = bfs_from(adjacency_, 0);
  return std::none_of(d.begin(), d.end(), [](std::uint8_t x) { return x == kUnreachable; });
}

unsigned FiniteGraph::diameter() const
{
  if (!connected()) raise(ErrorCode::Disconnected, "diameter of a disconnected graph");
  unsigned best = 0;
  if (!distances_.empty()) {
    for (auto d : distances_) best = std::max<unsigned>(best, d);
    return best;
  }
  for (std::size_t u = 0; u < order(); ++u) {
    const auto d = bfs_from(adjacency_, static_cast<VertexId>(u));
    best = std::max<unsigned>(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

std::optional<unsigned> bfs_distance(const FiniteGraph& g, VertexId a, VertexId b)
{
  if (a >= g.order() || b >= g.order()) raise(ErrorCode::BadIndex, "vertex index out of range");
  if (a == b) return 0u;
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::deque<std::pair<VertexId, unsigned>> queue{{a, 0}};
  seen[a] = 1;
  while (!queue.empty()) {
    const auto [v, d] = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      if (w == b) return d + 1;
      seen[w] = 1;
      queue.emplace_back(w, d + 1);
    }
  }
  return std::nullopt;
}

FiniteGraph induced_subgraph(const FiniteGraph& g, std::span<const VertexId> vertices)
{
  AdjacencyLists adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (VertexId w : g.neighbors(vertices[i])) {
      auto it = std::find(vertices.begin(), vertices.end(), w);
      if (it != vertices.end()) adj[i].push_back(static_cast<VertexId>(it - vertices.begin()));
    }
  return FiniteGraph(std::move(adj));
}

std::vector<unsigned> IntersectionNumbers::b_array() const
{
  std::vector<unsigned> out{degree};
  for (const auto& [i, t] : table)
    if (i < diameter) out.push_back(t.b);
  return out;
}

std::vector<unsigned> IntersectionNumbers::c_array() const
{
  std::vector<unsigned> out;
  for (const auto& [i, t] : table) out.push_back(t.c);
  return out;
}

IntersectionNumbers intersection_numbers(const FiniteGraph& g, Parallelism par)
{
  if (!g.connected()) raise(ErrorCode::Disconnected, "intersection numbers need a connected graph");
  IntersectionNumbers out;
  if (g.order() == 0) return out;
  const auto profiles =
      par.serial() ? kernels::distance_profiles_serial(g) : kernels::distance_profiles_omp(g, par.workers);
  const auto& reference = profiles.front().by_distance;
  out.degree = reference[0].b;
  out.diameter = static_cast<unsigned>(reference.size() - 1);
  for (std::size_t u = 0; u < profiles.size(); ++u) {
    const auto& prof = profiles[u];
    if (prof.conflict)
      raise(ErrorCode::NotDistanceRegular,
            "counts differ within source " + std::to_string(u) + " at vertex " + std::to_string(*prof.conflict));
    if (prof.by_distance != reference) {
      std::size_t i = 0;
      while (i < reference.size() && i < prof.by_distance.size() && reference[i] == prof.by_distance[i]) ++i;
      raise(ErrorCode::NotDistanceRegular,
            "counts at distance " + std::to_string(i) + " differ between sources 0 and " + std::to_string(u));
    }
  }
  for (std::size_t i = 1; i < reference.size(); ++i) out.table.emplace(static_cast<unsigned>(i), reference[i]);
  return out;
}

}  // namespace qgeom
