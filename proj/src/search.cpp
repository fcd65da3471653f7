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

#include <omp.h>

#include <atomic>
#include <string>

#include "qgeom/embed.hpp"

namespace qgeom {

namespace {

// Depth-first assignment of maximals 0, 1, ... with forward checking: after
// each assignment every later domain keeps only targets at the right distance.
class Backtracker {
 public:
  Backtracker(std::span<const std::uint8_t> source, std::span<const std::uint8_t> target, std::size_t n_source,
              std::size_t n_target, std::uint64_t budget, std::size_t cap, std::atomic<std::uint64_t>& nodes,
              std::atomic<std::size_t>& found, std::atomic<bool>& stop)
      : ds_(source),
        dt_(target),
        ns_(n_source),
        nt_(n_target),
        budget_(budget),
        cap_(cap),
        nodes_(nodes),
        found_(found),
        stop_(stop)
  {
  }

  using Domains = std::vector<std::vector<VertexId>>;

  /// Domains for every position given a fixed prefix; empty optional when a domain dies.
  std::optional<Domains> restrict(const std::vector<VertexId>& prefix) const
  {
    Domains dom(ns_);
    std::vector<VertexId> all(nt_);
    for (std::size_t t = 0; t < nt_; ++t) all[t] = static_cast<VertexId>(t);
    for (std::size_t i = prefix.size(); i < ns_; ++i) {
      for (VertexId t : all) {
        bool ok = true;
        for (std::size_t j = 0; j < prefix.size() && ok; ++j)
          ok = dt_[t * nt_ + prefix[j]] == ds_[i * ns_ + j];
        if (ok) dom[i].push_back(t);
      }
      if (dom[i].empty()) return std::nullopt;
    }
    return dom;
  }

  bool consistent(const std::vector<VertexId>& prefix) const
  {
    for (std::size_t i = 0; i < prefix.size(); ++i)
      for (std::size_t j = i + 1; j < prefix.size(); ++j)
        if (dt_[prefix[i] * nt_ + prefix[j]] != ds_[i * ns_ + j]) return false;
    return true;
  }

  void run(std::vector<VertexId>& assignment, const Domains& dom, std::vector<std::vector<VertexId>>& out)
  {
    const std::size_t depth = assignment.size();
    if (depth == ns_) {
      if (found_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) {
        stop_.store(true);
        return;
      }
      out.push_back(assignment);
      return;
    }
    for (VertexId t : dom[depth]) {
      if (stop_.load(std::memory_order_relaxed)) return;
      const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
      if (budget_ != 0 && count > budget_) {
        stop_.store(true);
        return;
      }
      Domains next(ns_);
      bool alive = true;
      for (std::size_t i = depth + 1; i < ns_ && alive; ++i) {
        const std::uint8_t want = ds_[depth * ns_ + i];
        for (VertexId x : dom[i])
          if (dt_[t * nt_ + x] == want) next[i].push_back(x);
        alive = !next[i].empty();
      }
      if (!alive) continue;
      assignment.push_back(t);
      run(assignment, next, out);
      assignment.pop_back();
    }
  }

 private:
  std::span<const std::uint8_t> ds_;
  std::span<const std::uint8_t> dt_;
  std::size_t ns_;
  std::size_t nt_;
  std::uint64_t budget_;
  std::size_t cap_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<std::size_t>& found_;
  std::atomic<bool>& stop_;
};

}  // namespace

Embedding SearchResult::embedding(const GrassmannGraph& target, std::size_t i) const
{
  Embedding e;
  e.n = target.n();
  e.k = target.k();
  for (VertexId v : tables.at(i)) e.images.push_back(target.vertices()[v]);
  return e;
}

SearchResult search_embeddings(const PolarSpace& ps, const FiniteGraph& source, const GrassmannGraph& target,
                               const SearchOptions& options)
{
  if (target.k() < ps.rank())
    raise(ErrorCode::RankTooSmall, "k = " + std::to_string(target.k()) + " is below the rank");
  if (target.n() != ps.ambient_dim()) raise(ErrorCode::DimensionMismatch, "target lives in another space");
  if (source.order() != ps.maximals().size()) raise(ErrorCode::DimensionMismatch, "source graph mismatch");
  if (!target.graph().has_distance_table() || !source.has_distance_table())
    raise(ErrorCode::TooLarge, "search needs cached distance tables (at most " + std::to_string(kDistanceTableCap) +
                                   " vertices)");

  const std::size_t ns = source.order();
  const std::size_t nt = target.graph().order();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> found{0};
  std::atomic<bool> stop{false};
  const std::size_t cap = options.cap;
  Backtracker bt(source.distance_table(), target.graph().distance_table(), ns, nt, options.budget, cap, nodes, found,
                 stop);

  SearchResult result;
  result.anchored = options.anchor;
  std::vector<std::vector<VertexId>> prefixes;
  if (options.anchor) {
    VertexId anchor = 0;
    result.anchor_source = "first target vertex";
    try {
      const auto canon = canonical_embedding(ps, target.k());
      anchor = target.index_of(canon.embedding.images.front()).value();
      result.anchor_source = "canonical embedding";
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoValidU) throw;
    }
    result.anchor_vertex = anchor;
    if (ns == 1) {
      prefixes.push_back({anchor});
    } else {
      for (std::size_t t = 0; t < nt; ++t)
        if (source.distance_table()[1] == target.graph().distance_table()[anchor * nt + t])
          prefixes.push_back({anchor, static_cast<VertexId>(t)});
    }
  } else {
    for (std::size_t t = 0; t < nt; ++t) prefixes.push_back({static_cast<VertexId>(t)});
  }

  std::vector<std::vector<std::vector<VertexId>>> per_branch(prefixes.size());
  auto explore = [&](std::size_t b) {
    auto prefix = prefixes[b];
    if (!bt.consistent(prefix)) return;
    const auto dom = bt.restrict(prefix);
    if (!dom) return;
    bt.run(prefix, *dom, per_branch[b]);
  };
  const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(prefixes.size());
  if (options.par.serial()) {
    for (std::ptrdiff_t b = 0; b < nb; ++b) explore(static_cast<std::size_t>(b));
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.par.workers)
    for (std::ptrdiff_t b = 0; b < nb; ++b) explore(static_cast<std::size_t>(b));
  }
  if (found.load() > cap)
    raise(ErrorCode::TooLarge, "more than " + std::to_string(cap) + " embeddings; raise QGEOM_CAP or anchor the search");
  if (stop.load())
    raise(ErrorCode::SearchBudgetExceeded, "explored more than " + std::to_string(options.budget) + " nodes");
  for (auto& branch : per_branch)
    for (auto& t : branch) result.tables.push_back(std::move(t));
  result.nodes = nodes.load();
  return result;
}

Matrix transitivity_witness(const Field& field, const Subspace& a, const Subspace& b)
{
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim())
    raise(ErrorCode::DimensionMismatch, "transitivity needs subspaces of equal dimension");
  const std::size_t n = a.ambient_dim();
  auto extend = [&](const Subspace& s) {
    std::vector<Vector> rows = s.rows();
    Subspace cur = s;
    for (std::size_t i = 0; i < n && rows.size() < n; ++i) {
      Vector e(n, 0);
      e[i] = 1;
      if (contains_vector(field, cur, e)) continue;
      rows.push_back(e);
      cur = span(field, n, rows);
    }
    return transpose(Matrix::from_rows(n, rows));
  };
  const Matrix from = extend(a);
  const Matrix to = extend(b);
  return multiply(field, to, inverse(field, from));
}

}  // namespace qgeom
