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

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>

#include "qgeom/embed.hpp"

namespace qgeom {

Subspace apply_witness(const Field& field, const EquivalenceWitness& w, const Subspace& s)
{
  if (w.duality) return image(field, w.matrix, w.field_auto, annihilator(field, s));
  return image(field, w.matrix, w.field_auto, s);
}

Embedding apply_witness(const Field& field, const EquivalenceWitness& w, const Embedding& e)
{
  Embedding out;
  out.n = e.n;
  out.k = w.duality ? e.n - e.k : e.k;
  for (const auto& s : e.images) out.images.push_back(apply_witness(field, w, s));
  return out;
}

namespace {

using Variant = PreparedEmbedding::Variant;

Variant make_variant(const PolarSpace& ps, Embedding table, bool duality)
{
  const Field& field = ps.field();
  Variant v;
  v.duality = duality;
  v.table = std::move(table);

  Subspace u = v.table.images.front();
  for (const auto& s : v.table.images) u = intersect(field, u, s);
  v.quotient.emplace(field, v.table.n, u);
  const auto& w = *v.quotient;
  for (const auto& s : v.table.images) v.g.push_back(w.project(field, s));

  const std::size_t wd = w.dim();
  v.has_point_map = true;
  for (const auto& p : ps.points()) {
    Subspace meet = Subspace::full(wd);
    for (auto mi : point_star(ps, p)) meet = intersect(field, meet, v.g[mi]);
    if (meet.dim() != 1) {
      v.has_point_map = false;
      v.point_reps.clear();
      break;
    }
    v.point_reps.emplace_back(meet.row(0).begin(), meet.row(0).end());
  }

  std::vector<Vector> rows;
  if (v.has_point_map) {
    Subspace cur = Subspace::zero(wd);
    for (std::size_t p = 0; p < v.point_reps.size(); ++p) {
      if (contains_vector(field, cur, v.point_reps[p])) continue;
      v.frame.push_back(static_cast<VertexId>(p));
      rows.push_back(v.point_reps[p]);
      cur = span(field, wd, rows);
    }
    v.inside_frame_span =
        std::all_of(v.g.begin(), v.g.end(), [&](const Subspace& s) { return contains(field, cur, s); });
  }
  {
    Subspace cur = span(field, wd, rows);
    for (std::size_t i = 0; i < wd && rows.size() < wd; ++i) {
      Vector e(wd, 0);
      e[i] = 1;
      if (contains_vector(field, cur, e)) continue;
      rows.push_back(e);
      cur = span(field, wd, rows);
    }
  }
  v.basis = Matrix::from_rows(wd, rows);
  if (v.has_point_map) {
    const Matrix inv = inverse(field, v.basis);
    for (const auto& rep : v.point_reps) {
      Vector c(wd, 0);
      std::size_t level = 0;
      for (std::size_t j = 0; j < wd; ++j) {
        Elem acc = 0;
        for (std::size_t l = 0; l < wd; ++l) acc = field.add(acc, field.mul(rep[l], inv.at(l, j)));
        c[j] = acc;
        if (acc != 0) level = j;
      }
      v.point_coords.push_back(std::move(c));
      v.point_level.push_back(level);
    }
  }
  return v;
}

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
  void tick()
  {
    if (budget_ != 0 && ++used_ > budget_)
      raise(ErrorCode::SearchBudgetExceeded, "automorphism search exceeded " + std::to_string(budget_) + " nodes");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

// Invariants any semilinear map between the two frames must respect.
bool compatible(const Variant& a, const Variant& b)
{
  if (a.table.k != b.table.k) return false;
  if (a.quotient->dim() != b.quotient->dim()) return false;
  if (a.has_point_map != b.has_point_map) return false;
  if (a.has_point_map && (a.frame.size() != b.frame.size() || a.inside_frame_span != b.inside_frame_span ||
                          a.point_level != b.point_level))
    return false;
  return true;
}

// Semilinear s̄: W1 -> W2 given by the images of v1.basis rows; lifted to V
// as x -> A frob^power(x) and checked on the whole table.
class PairSearch {
 public:
  PairSearch(const Field& field, const Variant& v1, const Variant& v2, unsigned power, BudgetCounter& budget)
      : f_(field), v1_(v1), v2_(v2), power_(power), budget_(budget)
  {
  }

  std::optional<Matrix> run()
  {
    images_.assign(v1_.quotient->dim(), Vector());
    if (v1_.has_point_map) return assign_frame(0);
    return assign_free(0, false);
  }

 private:
  std::optional<Matrix> assign_frame(std::size_t j)
  {
    if (j == v1_.frame.size()) return assign_free(j, v1_.inside_frame_span);
    const Vector& rep = v2_.point_reps[v1_.frame[j]];
    // Scaling the whole map does not move any subspace, so the first scalar is 1.
    const unsigned last = j == 0 ? 2 : f_.q();
    for (unsigned c = 1; c < last; ++c) {
      budget_.tick();
      Vector img(rep.size());
      for (std::size_t i = 0; i < rep.size(); ++i) img[i] = f_.mul(static_cast<Elem>(c), rep[i]);
      images_[j] = std::move(img);
      if (!points_consistent(j)) continue;
      if (auto a = assign_frame(j + 1)) return a;
    }
    return std::nullopt;
  }

  bool points_consistent(std::size_t level) const
  {
    const std::size_t wd = images_.size();
    for (std::size_t p = 0; p < v1_.point_coords.size(); ++p) {
      if (v1_.point_level[p] != level) continue;
      Vector img(wd, 0);
      for (std::size_t l = 0; l <= level; ++l) {
        const Elem c = f_.frobenius(v1_.point_coords[p][l], power_);
        if (c == 0) continue;
        for (std::size_t i = 0; i < wd; ++i) img[i] = f_.add(img[i], f_.mul(c, images_[l][i]));
      }
      if (is_zero(img) || normalized(f_, img) != v2_.point_reps[p]) return false;
    }
    return true;
  }

  // Positions from j on are unconstrained by points. When forced, the first
  // completion is taken; otherwise all independent choices are enumerated.
  std::optional<Matrix> assign_free(std::size_t j, bool forced)
  {
    const std::size_t wd = images_.size();
    if (j == wd) return leaf();
    std::vector<Vector> taken(images_.begin(), images_.begin() + static_cast<std::ptrdiff_t>(j));
    const Subspace cur = span(f_, wd, taken);
    if (forced) {
      for (std::size_t i = 0; i < wd; ++i) {
        Vector e(wd, 0);
        e[i] = 1;
        if (contains_vector(f_, cur, e)) continue;
        images_[j] = e;
        return assign_free(j + 1, true);
      }
      return std::nullopt;
    }
    for (const auto& cand : vectors_of(f_, Subspace::full(wd))) {
      if (is_zero(cand) || contains_vector(f_, cur, cand)) continue;
      budget_.tick();
      images_[j] = cand;
      if (auto a = assign_free(j + 1, false)) return a;
    }
    return std::nullopt;
  }

  std::optional<Matrix> leaf()
  {
    budget_.tick();
    const std::size_t n = v1_.table.n;
    const auto& w1 = *v1_.quotient;
    const auto& w2 = *v2_.quotient;
    std::vector<Vector> from;
    std::vector<Vector> to;
    for (std::size_t j = 0; j < images_.size(); ++j) {
      from.push_back(w1.lift_vector(v1_.basis.row(j)));
      to.push_back(w2.lift_vector(images_[j]));
    }
    for (const auto& r : w1.mod_out().rows()) from.push_back(r);
    for (const auto& r : w2.mod_out().rows()) to.push_back(r);
    const Matrix x = frobenius(f_, transpose(Matrix::from_rows(n, from)), power_);
    const Matrix y = transpose(Matrix::from_rows(n, to));
    if (!is_invertible(f_, y)) return std::nullopt;
    Matrix a = multiply(f_, y, inverse(f_, x));
    for (std::size_t i = 0; i < v1_.table.images.size(); ++i)
      if (image(f_, a, power_, v1_.table.images[i]) != v2_.table.images[i]) return std::nullopt;
    return a;
  }

  const Field& f_;
  const Variant& v1_;
  const Variant& v2_;
  unsigned power_;
  BudgetCounter& budget_;
  std::vector<Vector> images_;
};

// x -> A frob(x) maps S onto T iff x -> A^{-T} frob(x) maps S° onto T°.
Matrix adjoint_inverse(const Field& field, const Matrix& a) { return inverse(field, transpose(a)); }

struct FramePair {
  const Variant* from;
  const Variant* to;
  bool transpose_back;
};

std::optional<EquivalenceWitness> search_kind(const Field& field, std::vector<FramePair> frames, bool duality,
                                              BudgetCounter& counter)
{
  // Each frame is exhaustive on its own, so one compatible frame decides the
  // question; a failed invariant in any frame already rules the kind out.
  for (const auto& fp : frames)
    if (!compatible(*fp.from, *fp.to)) return std::nullopt;
  const FramePair* chosen = &frames.front();
  for (const auto& fp : frames)
    if (fp.from->has_point_map) {
      chosen = &fp;
      break;
    }
  for (unsigned t = 0; t < field.e(); ++t) {
    PairSearch search(field, *chosen->from, *chosen->to, t, counter);
    if (auto a = search.run()) {
      EquivalenceWitness w;
      w.matrix = chosen->transpose_back ? adjoint_inverse(field, *a) : std::move(*a);
      w.field_auto = t;
      w.duality = duality;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

PreparedEmbedding::PreparedEmbedding(const PolarSpace& ps, Embedding e) : e_(std::move(e))
{
  if (e_.images.empty()) raise(ErrorCode::InvalidArgument, "empty embedding table");
  primal_ = make_variant(ps, e_, false);
  Embedding dual_table;
  dual_table.n = e_.n;
  dual_table.k = e_.n - e_.k;
  for (const auto& s : e_.images) dual_table.images.push_back(annihilator(ps.field(), s));
  dual_ = make_variant(ps, std::move(dual_table), true);
}

EquivalenceWitness connecting_automorphism(const PolarSpace& ps, const PreparedEmbedding& f1,
                                           const PreparedEmbedding& f2, std::uint64_t budget)
{
  const auto& a = f1.embedding();
  const auto& b = f2.embedding();
  if (a.n != b.n || a.k != b.k || a.images.size() != b.images.size())
    raise(ErrorCode::DimensionMismatch, "embeddings have different source or target");
  const Field& field = ps.field();
  BudgetCounter counter(budget);
  if (auto w = search_kind(field, {{&f1.primal(), &f2.primal(), false}, {&f1.dual(), &f2.dual(), true}}, false,
                           counter))
    return *w;
  if (a.n == 2 * a.k)
    if (auto w = search_kind(field, {{&f1.dual(), &f2.primal(), false}, {&f1.primal(), &f2.dual(), true}}, true,
                             counter))
      return *w;
  raise(ErrorCode::NotEquivalent, "no automorphism of the Grassmann graph carries one table onto the other");
}

EquivalenceWitness connecting_automorphism(const PolarSpace& ps, const Embedding& f1, const Embedding& f2,
                                           std::uint64_t budget)
{
  return connecting_automorphism(ps, PreparedEmbedding(ps, f1), PreparedEmbedding(ps, f2), budget);
}

namespace kernels {

namespace {

PairOutcome certify_one(const PolarSpace& ps, const PreparedEmbedding& reference, const Embedding& e,
                        std::uint64_t budget)
{
  PairOutcome out;
  try {
    const auto w = connecting_automorphism(ps, reference, PreparedEmbedding(ps, e), budget);
    out.equivalent = true;
    out.duality = w.duality;
    out.linear = !w.duality && w.field_auto == 0;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::SearchBudgetExceeded) out.budget_exceeded = true;
    else if (err.code() != ErrorCode::NotEquivalent) throw;
  }
  return out;
}

}  // namespace

std::vector<PairOutcome> certify_against_serial(const PolarSpace& ps, const PreparedEmbedding& reference,
                                                const std::vector<Embedding>& embeddings,
                                                const std::vector<std::size_t>& candidates, std::uint64_t budget)
{
  std::vector<PairOutcome> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    out[i] = certify_one(ps, reference, embeddings[candidates[i]], budget);
  return out;
}

std::vector<PairOutcome> certify_against_omp(const PolarSpace& ps, const PreparedEmbedding& reference,
                                             const std::vector<Embedding>& embeddings,
                                             const std::vector<std::size_t>& candidates, std::uint64_t budget,
                                             unsigned workers)
{
  std::vector<PairOutcome> out(candidates.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(candidates.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = certify_one(ps, reference, embeddings[candidates[idx]], budget);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace kernels

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void tally(ClassificationReport& report, const std::vector<kernels::PairOutcome>& outcomes)
{
  for (const auto& o : outcomes) {
    if (o.budget_exceeded) raise(ErrorCode::SearchBudgetExceeded, "a pair certification ran out of budget");
    ++report.pairs_checked;
    if (!o.equivalent) ++report.pairs_failed;
    else if (o.duality) ++report.duality_witnesses;
    else if (o.linear) ++report.linear_witnesses;
    else ++report.semilinear_witnesses;
  }
}

}  // namespace

ClassificationReport classify_embeddings(const PolarSpace& ps, const std::vector<Embedding>& embeddings,
                                         std::uint64_t budget, Parallelism par, ClassifyMode mode)
{
  const std::size_t n = embeddings.size();
  ClassificationReport report;
  report.mode = mode;
  report.embeddings = n;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto certify = [&](const PreparedEmbedding& ref, const std::vector<std::size_t>& candidates) {
    auto outcomes = par.serial() ? kernels::certify_against_serial(ps, ref, embeddings, candidates, budget)
                                 : kernels::certify_against_omp(ps, ref, embeddings, candidates, budget, par.workers);
    tally(report, outcomes);
    return outcomes;
  };

  if (mode == ClassifyMode::all_pairs) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<std::size_t> rest(n - i - 1);
      std::iota(rest.begin(), rest.end(), i + 1);
      const auto outcomes = certify(PreparedEmbedding(ps, embeddings[i]), rest);
      for (std::size_t c = 0; c < rest.size(); ++c) {
        if (!outcomes[c].equivalent) continue;
        const auto a = find_root(parent, i);
        const auto b = find_root(parent, rest[c]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  } else {
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    while (!remaining.empty()) {
      const std::size_t rep = remaining.front();
      std::vector<std::size_t> rest(remaining.begin() + 1, remaining.end());
      const auto outcomes = certify(PreparedEmbedding(ps, embeddings[rep]), rest);
      remaining.clear();
      for (std::size_t c = 0; c < rest.size(); ++c) {
        if (outcomes[c].equivalent) parent[rest[c]] = rep;
        else remaining.push_back(rest[c]);
      }
    }
  }

  report.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.class_of[i] = find_root(parent, i);
    if (report.class_of[i] == i) report.representatives.push_back(i);
  }
  report.classes = report.representatives.size();
  for (std::size_t r : report.representatives)
    report.class_sizes.push_back(
        static_cast<std::size_t>(std::count(report.class_of.begin(), report.class_of.end(), r)));
  return report;
}

}  // namespace qgeom
