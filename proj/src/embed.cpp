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

#include "qgeom/embed.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace qgeom {

namespace {

std::string pair_text(VertexId a, VertexId b)
{
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void check_table(const PolarSpace& ps, const Embedding& e)
{
  if (e.images.size() != ps.maximals().size())
    raise(ErrorCode::DimensionMismatch, "embedding table has " + std::to_string(e.images.size()) +
                                            " entries for " + std::to_string(ps.maximals().size()) + " maximals");
  for (const auto& s : e.images)
    if (s.ambient_dim() != e.n || s.dim() != e.k)
      raise(ErrorCode::DimensionMismatch, "embedding image is not a " + std::to_string(e.k) + "-subspace of GF(q)^" +
                                              std::to_string(e.n));
}

std::optional<PairViolation> row_violation(const Field& field, const std::vector<Subspace>& source, std::size_t m,
                                           const std::vector<Subspace>& target, std::size_t k, std::size_t i)
{
  for (std::size_t j = i + 1; j < source.size(); ++j) {
    const auto expected = static_cast<unsigned>(m - intersection_dim(field, source[i], source[j]));
    const auto got = static_cast<unsigned>(k - intersection_dim(field, target[i], target[j]));
    if (expected != got)
      return PairViolation{ErrorCode::DistanceViolation, static_cast<VertexId>(i), static_cast<VertexId>(j), expected,
                           got};
  }
  return std::nullopt;
}

}  // namespace

namespace kernels {

std::optional<PairViolation> distance_pairs_serial(const Field& field, const std::vector<Subspace>& source,
                                                   std::size_t m, const std::vector<Subspace>& target, std::size_t k)
{
  for (std::size_t i = 0; i < source.size(); ++i)
    if (auto v = row_violation(field, source, m, target, k, i)) return v;
  return std::nullopt;
}

std::optional<PairViolation> distance_pairs_omp(const Field& field, const std::vector<Subspace>& source,
                                                std::size_t m, const std::vector<Subspace>& target, std::size_t k,
                                                unsigned workers)
{
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(source.size());
  std::vector<std::optional<PairViolation>> rows(source.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = row_violation(field, source, m, target, k, static_cast<std::size_t>(i));
  for (auto& r : rows)
    if (r) return r;
  return std::nullopt;
}

}  // namespace kernels

VerifyReport verify_isometric(const PolarSpace& ps, const Embedding& e, const VerifyOptions& options)
{
  check_table(ps, e);
  const Field& field = ps.field();
  const auto& source = ps.maximals();
  const std::size_t m = ps.rank();
  VerifyReport report;
  report.pairs_checked = source.size() * (source.size() - 1) / 2;

  std::map<Subspace, VertexId> seen;
  for (std::size_t j = 0; j < e.images.size(); ++j) {
    auto [it, inserted] = seen.emplace(e.images[j], static_cast<VertexId>(j));
    if (!inserted) {
      report.violation = PairViolation{ErrorCode::NotInjective, it->second, static_cast<VertexId>(j), 0, 0};
      return report;
    }
  }

  report.violation = options.par.serial()
                         ? kernels::distance_pairs_serial(field, source, m, e.images, e.k)
                         : kernels::distance_pairs_omp(field, source, m, e.images, e.k, options.par.workers);
  if (!report.ok()) return report;

  if (options.source_graph != nullptr) {
    const auto& g = *options.source_graph;
    if (g.order() != source.size()) raise(ErrorCode::DimensionMismatch, "source graph order differs from the table");
    for (std::size_t i = 0; i < source.size() && report.ok(); ++i)
      for (std::size_t j = i + 1; j < source.size(); ++j) {
        const auto formula = static_cast<unsigned>(m - intersection_dim(field, source[i], source[j]));
        const auto bfs = g.distance(static_cast<VertexId>(i), static_cast<VertexId>(j));
        if (!bfs || *bfs != formula) {
          report.violation = PairViolation{ErrorCode::DistanceViolation, static_cast<VertexId>(i),
                                           static_cast<VertexId>(j), formula, bfs.value_or(kUnreachable)};
          break;
        }
      }
    report.source_bfs_checked = true;
  }
  if (options.target_graph != nullptr && report.ok()) {
    const auto& t = *options.target_graph;
    if (t.n() != e.n || t.k() != e.k) raise(ErrorCode::DimensionMismatch, "target graph does not match the table");
    std::vector<VertexId> idx;
    for (const auto& s : e.images) idx.push_back(t.index_of(s).value());
    for (std::size_t i = 0; i < idx.size() && report.ok(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const auto formula = grassmann_distance(field, e.images[i], e.images[j]);
        const auto bfs = t.graph().distance(idx[i], idx[j]);
        if (!bfs || *bfs != formula) {
          report.violation = PairViolation{ErrorCode::DistanceViolation, static_cast<VertexId>(i),
                                           static_cast<VertexId>(j), formula, bfs.value_or(kUnreachable)};
          break;
        }
      }
    report.target_bfs_checked = true;
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct TransversalSearch {
  const Field& field;
  std::size_t n;
  std::size_t need;
  std::vector<Subspace> sums;
  std::vector<Vector> candidates;
  bool stop_at_first = true;
  std::set<Subspace> found;

  bool avoids_all(const Subspace& u) const
  {
    for (const auto& s : sums)
      if (sum_dim(field, s, u) != s.dim() + u.dim()) return false;
    return true;
  }

  bool run(std::size_t start, std::vector<Vector>& chosen)
  {
    if (chosen.size() == need) {
      found.insert(span(field, n, chosen));
      return stop_at_first;
    }
    for (std::size_t c = start; c < candidates.size(); ++c) {
      chosen.push_back(candidates[c]);
      if (avoids_all(span(field, n, chosen)) && run(c + 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

TransversalSearch make_transversal_search(const PolarSpace& ps, std::size_t k)
{
  const std::size_t n = ps.ambient_dim();
  const std::size_t m = ps.rank();
  if (k < m) raise(ErrorCode::RankTooSmall, "k = " + std::to_string(k) + " is below the rank m = " + std::to_string(m));
  if (k > n) raise(ErrorCode::DimensionMismatch, "k exceeds n");
  const Field& field = ps.field();
  TransversalSearch search{field, n, k - m, {}, {}, true, {}};
  const auto& maxs = ps.maximals();
  std::set<Subspace> sums(maxs.begin(), maxs.end());
  for (std::size_t i = 0; i < maxs.size(); ++i)
    for (std::size_t j = i + 1; j < maxs.size(); ++j) sums.insert(sum(field, maxs[i], maxs[j]));
  // Only the maximal elements of the family matter.
  for (const auto& s : sums) {
    bool dominated = false;
    for (const auto& t : sums)
      if (t.dim() > s.dim() && contains(field, t, s)) {
        dominated = true;
        break;
      }
    if (!dominated) search.sums.push_back(s);
  }
  for (const auto& p : enum_grassmannian(field, n, 1)) search.candidates.emplace_back(p.row(0).begin(), p.row(0).end());
  return search;
}

}  // namespace

CanonicalEmbedding canonical_embedding(const PolarSpace& ps, std::size_t k)
{
  auto search = make_transversal_search(ps, k);
  std::vector<Vector> chosen;
  search.run(0, chosen);
  if (search.found.empty())
    raise(ErrorCode::NoValidU, "no " + std::to_string(search.need) +
                                   "-dimensional subspace meets every M1 + M2 trivially");
  CanonicalEmbedding out;
  out.star = *search.found.begin();
  out.embedding.n = ps.ambient_dim();
  out.embedding.k = k;
  for (const auto& m : ps.maximals()) out.embedding.images.push_back(sum(ps.field(), m, out.star));
  return out;
}

std::vector<Subspace> all_valid_star_subspaces(const PolarSpace& ps, std::size_t k)
{
  auto search = make_transversal_search(ps, k);
  search.stop_at_first = false;
  std::vector<Vector> chosen;
  search.run(0, chosen);
  return {search.found.begin(), search.found.end()};
}

// ---------------------------------------------------------------------------

StarSubspace extract_star_subspace(const PolarSpace& ps, const Embedding& e)
{
  check_table(ps, e);
  const Field& field = ps.field();
  Subspace u = e.images.front();
  for (const auto& s : e.images) u = intersect(field, u, s);
  const std::size_t expected = e.k - ps.rank();
  if (u.dim() < expected)
    raise(ErrorCode::LemmaViolation, "the images meet in dimension " + std::to_string(u.dim()) + " < k - m = " +
                                         std::to_string(expected));
  return {u, u.dim() > expected};
}

QuotientEmbedding reduce_to_quotient(const PolarSpace& ps, const Embedding& e, const Subspace& u)
{
  check_table(ps, e);
  const Field& field = ps.field();
  for (std::size_t i = 0; i < e.images.size(); ++i)
    if (!contains(field, e.images[i], u))
      raise(ErrorCode::StarViolation, "image of maximal " + std::to_string(i) + " does not contain U");
  QuotientSpace w(field, e.n, u);
  Embedding g;
  g.n = w.dim();
  g.k = e.k - u.dim();
  for (const auto& s : e.images) g.images.push_back(w.project(field, s));
  return {std::move(w), std::move(g)};
}

PointMap induce_point_map(const PolarSpace& ps, const Embedding& g)
{
  check_table(ps, g);
  const Field& field = ps.field();
  PointMap out;
  std::map<Subspace, VertexId> seen;
  for (std::size_t p = 0; p < ps.points().size(); ++p) {
    const auto members = point_star(ps, ps.points()[p]);
    Subspace meet = Subspace::full(g.n);
    for (auto mi : members) meet = intersect(field, meet, g.images[mi]);
    if (meet.dim() == 0)
      raise(ErrorCode::EmptyIntersection, "images of the maximals through point " + std::to_string(p) +
                                              " meet trivially");
    if (meet.dim() > 1) out.anomalies.push_back(static_cast<VertexId>(p));
    auto [it, inserted] = seen.emplace(meet, static_cast<VertexId>(p));
    if (!inserted)
      raise(ErrorCode::NotInjective, "points " + pair_text(it->second, static_cast<VertexId>(p)) +
                                         " have the same image");
    out.images.push_back(std::move(meet));
  }
  return out;
}

LineReport check_line_images(const PolarSpace& ps, const Embedding& g, const PointMap& q)
{
  check_table(ps, g);
  const Field& field = ps.field();
  if (q.images.size() != ps.points().size()) raise(ErrorCode::DimensionMismatch, "point map is not total");
  LineReport report;
  std::vector<bool> anomalous(ps.points().size(), false);
  for (auto a : q.anomalies) anomalous[a] = true;

  for (std::size_t li = 0; li < ps.lines().size(); ++li) {
    const auto& line = ps.lines()[li];
    std::vector<VertexId> on_line;
    for (std::size_t p = 0; p < ps.points().size(); ++p)
      if (contains(field, line, ps.points()[p])) on_line.push_back(static_cast<VertexId>(p));
    const auto through = point_star(ps, line);

    for (std::size_t a = 0; a < on_line.size(); ++a)
      for (std::size_t b = a + 1; b < on_line.size(); ++b) {
        const auto p = on_line[a];
        const auto r = on_line[b];
        const Subspace joined = sum(field, q.images[p], q.images[r]);
        for (auto mi : through)
          if (!contains(field, g.images[mi], joined)) {
            report.violation = LineViolation{ErrorCode::ContainmentViolation, p, r, mi};
            return report;
          }
        ++report.pairs_checked;
      }

    if (std::any_of(on_line.begin(), on_line.end(), [&](VertexId p) { return anomalous[p]; })) continue;
    const Subspace target = sum(field, q.images[on_line[0]], q.images[on_line[1]]);
    for (auto p : on_line)
      if (!contains(field, target, q.images[p])) {
        report.violation = LineViolation{ErrorCode::ContainmentViolation, on_line[0], p, static_cast<VertexId>(li)};
        return report;
      }
    std::set<Subspace> distinct;
    for (auto p : on_line) distinct.insert(q.images[p]);
    if (target.dim() != 2 || distinct.size() != field.q() + 1) {
      report.violation = LineViolation{ErrorCode::PartialLine, on_line[0], on_line[1], static_cast<VertexId>(li)};
      return report;
    }
    ++report.lines_checked;
  }
  return report;
}

Subspace polar_span(const PolarSpace& ps)
{
  std::vector<Vector> rows;
  for (const auto& p : ps.points()) rows.emplace_back(p.row(0).begin(), p.row(0).end());
  return span(ps.field(), ps.ambient_dim(), rows);
}

StructureReport analyze_embedding(const PolarSpace& ps, const Embedding& e)
{
  StructureReport report;
  report.v_prime = polar_span(ps);
  report.star = extract_star_subspace(ps, e);
  if (report.star.anomaly) return report;
  auto reduced = reduce_to_quotient(ps, e, report.star.u);
  report.g = std::move(reduced.g);
  report.quotient.emplace(std::move(reduced.space));
  report.q = induce_point_map(ps, report.g);
  report.lines = check_line_images(ps, report.g, report.q);
  std::vector<Vector> rows;
  for (const auto& s : report.q.images)
    for (auto& r : s.rows()) rows.push_back(std::move(r));
  report.w_prime = span(ps.field(), report.g.n, rows);
  return report;
}

}  // namespace qgeom
