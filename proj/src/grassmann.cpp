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

#include "qgeom/grassmann.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

namespace qgeom {

namespace {

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b)
{
  if (a != 0 && b > (~static_cast<u128>(0)) / a) raise(ErrorCode::TooLarge, "Gaussian binomial overflows");
  return a * b;
}

u128 power(u128 base, unsigned exp)
{
  u128 out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Fills the free entries of one pivot pattern in every possible way.
void fill_pattern(const Field& field, std::size_t n, const std::vector<std::size_t>& pivots,
                  std::vector<Subspace>& out)
{
  const std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_slots;  // flat positions r * n + c
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_slots.push_back(r * n + c);

  Matrix base(k, n);
  for (std::size_t r = 0; r < k; ++r) base.at(r, pivots[r]) = 1;
  std::vector<Elem> digits(free_slots.size(), 0);
  const Elem q = static_cast<Elem>(field.q() - 1);
  while (true) {
    Matrix m = base;
    for (std::size_t i = 0; i < free_slots.size(); ++i) m.data[free_slots[i]] = digits[i];
    out.push_back(Subspace::from_rref(n, std::move(m)));
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
}

}  // namespace

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q)
{
  if (k > n) return 0;
  u128 value = 1;
  for (unsigned i = 0; i < k; ++i) {
    const u128 num = power(q, n - i) - 1;
    const u128 den = power(q, i + 1) - 1;
    value = checked_mul(value, num) / den;
  }
  if (value > static_cast<u128>(UINT64_MAX)) raise(ErrorCode::TooLarge, "Gaussian binomial exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

std::vector<Subspace> enum_grassmannian(const Field& field, std::size_t n, std::size_t k, std::size_t cap)
{
  if (k > n) raise(ErrorCode::DimensionMismatch, "k exceeds n");
  const auto count = gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k), field.q());
  if (count > cap)
    raise(ErrorCode::TooLarge, std::to_string(count) + " subspaces exceed the cap of " + std::to_string(cap));
  std::vector<Subspace> out;
  out.reserve(count);
  if (k == 0) {
    out.push_back(Subspace::zero(n));
    return out;
  }
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    fill_pattern(field, n, pivots, out);
    std::size_t i = k;
    while (i-- > 0 && pivots[i] == n - k + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++pivots[i];
    for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> star(const Field& field, const Subspace& u, std::size_t k, std::size_t cap)
{
  const std::size_t n = u.ambient_dim();
  if (u.dim() >= k || k > n)
    raise(ErrorCode::DimensionMismatch, "star needs dim U < k <= n (dim U = " + std::to_string(u.dim()) +
                                            ", k = " + std::to_string(k) + ")");
  const QuotientSpace w(field, n, u);
  std::vector<Subspace> out;
  for (const auto& t : enum_grassmannian(field, w.dim(), k - u.dim(), cap)) out.push_back(w.lift(field, t));
  std::sort(out.begin(), out.end());
  return out;
}

unsigned grassmann_distance(const Field& field, const Subspace& a, const Subspace& b)
{
  if (a.dim() != b.dim())
    raise(ErrorCode::DimensionMismatch, "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  return static_cast<unsigned>(a.dim() - intersection_dim(field, a, b));
}

Subspace duality_map(const Field& field, const Subspace& a) { return annihilator(field, a); }

namespace kernels {

AdjacencyLists intersection_adjacency_serial(const Field& field, const std::vector<Subspace>& vertices,
                                             std::size_t meet_dim)
{
  AdjacencyLists adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (intersection_dim(field, vertices[i], vertices[j]) == meet_dim) {
        adj[i].push_back(static_cast<VertexId>(j));
        adj[j].push_back(static_cast<VertexId>(i));
      }
  return adj;
}

AdjacencyLists intersection_adjacency_omp(const Field& field, const std::vector<Subspace>& vertices,
                                          std::size_t meet_dim, unsigned workers)
{
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(vertices.size());
  AdjacencyLists adj(vertices.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& row = adj[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t j = 0; j < n; ++j)
      if (j != i && intersection_dim(field, vertices[static_cast<std::size_t>(i)],
                                     vertices[static_cast<std::size_t>(j)]) == meet_dim)
        row.push_back(static_cast<VertexId>(j));
  }
  return adj;
}

AdjacencyLists intersection_adjacency(const Field& field, const std::vector<Subspace>& vertices,
                                      std::size_t meet_dim, Parallelism par)
{
  return par.serial() ? intersection_adjacency_serial(field, vertices, meet_dim)
                      : intersection_adjacency_omp(field, vertices, meet_dim, par.workers);
}

}  // namespace kernels

GrassmannGraph::GrassmannGraph(const Field& field, std::size_t n, std::size_t k, GrassmannOptions options)
    : field_(field), n_(n), k_(k)
{
  if (k > n) raise(ErrorCode::DimensionMismatch, "k exceeds n");
  if (!options.allow_trivial && !(1 < k && k + 1 < n))
    raise(ErrorCode::InvalidArgument, "Grassmann graphs need 1 < k < n-1; pass allow_trivial to override");
  vertices_ = enum_grassmannian(field_, n, k, options.cap);
  const std::size_t meet = k == 0 ? 0 : k - 1;
  auto adj = k == 0 ? AdjacencyLists(vertices_.size())
                    : kernels::intersection_adjacency(field_, vertices_, meet, options.par);
  graph_ = FiniteGraph(std::move(adj), options.par);
}

std::optional<VertexId> GrassmannGraph::index_of(const Subspace& s) const
{
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it == vertices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::vector<VertexId> duality_vertex_map(const GrassmannGraph& from, const GrassmannGraph& to)
{
  if (from.n() != to.n() || from.k() + to.k() != from.n())
    raise(ErrorCode::DimensionMismatch, "duality maps Γ_k(V) to Γ_{n-k}(V*)");
  std::vector<VertexId> out;
  out.reserve(from.vertices().size());
  for (const auto& v : from.vertices()) {
    const auto idx = to.index_of(duality_map(from.field(), v));
    if (!idx) raise(ErrorCode::DimensionMismatch, "annihilator left the target Grassmannian");
    out.push_back(*idx);
  }
  return out;
}

}  // namespace qgeom
