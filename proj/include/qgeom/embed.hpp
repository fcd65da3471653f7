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

/**
 * @file embed.hpp
 * @brief Isometric embeddings of a dual polar graph Γ(Π) into Γ_k(V).
 *
 * An embedding is a table pairing each maximal singular subspace M (in the
 * canonical order of PolarSpace::maximals()) with a k-subspace f(M). The
 * structural chain is:
 *
 *   extract_star_subspace   U = ∩ f(M), expected of dimension k - m
 *   reduce_to_quotient      g(M) = (f(M) + U) / U inside W = V / U
 *   induce_point_map        q(P) = ∩_{M ⊇ P} g(M), expected 1-dimensional
 *   check_line_images       q maps each singular line onto a full line of W
 *
 * connecting_automorphism uses that chain to restrict the search for a
 * semilinear map (optionally composed with duality when n = 2k) carrying one
 * embedding onto another.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgeom/grassmann.hpp"
#include "qgeom/polar.hpp"

namespace qgeom {

struct Embedding {
  std::size_t n = 0;
  std::size_t k = 0;
  /// images[i] = f(maximals[i])
  std::vector<Subspace> images;

  bool operator==(const Embedding&) const = default;
};

// ---------------------------------------------------------------------------
// Verification

struct PairViolation {
  ErrorCode code = ErrorCode::DistanceViolation;
  VertexId first = 0;
  VertexId second = 0;
  unsigned expected = 0;
  unsigned got = 0;
};

struct VerifyReport {
  std::size_t pairs_checked = 0;
  bool source_bfs_checked = false;
  bool target_bfs_checked = false;
  std::optional<PairViolation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

struct VerifyOptions {
  /// When given, distances are cross-checked against their BFS tables.
  const FiniteGraph* source_graph = nullptr;
  const GrassmannGraph* target_graph = nullptr;
  Parallelism par;
};

/// Checks dimensions, injectivity and m - dim(M1∩M2) = k - dim(f(M1)∩f(M2))
/// on every pair. Reports the first violation in pair order.
VerifyReport verify_isometric(const PolarSpace& ps, const Embedding& e, const VerifyOptions& options = {});

namespace kernels {
std::optional<PairViolation> distance_pairs_serial(const Field& field, const std::vector<Subspace>& source,
                                                   std::size_t m, const std::vector<Subspace>& target,
                                                   std::size_t k);
std::optional<PairViolation> distance_pairs_omp(const Field& field, const std::vector<Subspace>& source,
                                                std::size_t m, const std::vector<Subspace>& target, std::size_t k,
                                                unsigned workers);
}  // namespace kernels

// ---------------------------------------------------------------------------
// Construction

struct CanonicalEmbedding {
  Embedding embedding;
  Subspace star;  ///< the transversal U, dim k - m
};

/// M -> M + U for the first (k-m)-subspace U, in lexicographic vector order,
/// meeting every M1 + M2 trivially. Throws RankTooSmall, NoValidU.
CanonicalEmbedding canonical_embedding(const PolarSpace& ps, std::size_t k);

/// Every valid transversal U (deduplicated, canonical order).
std::vector<Subspace> all_valid_star_subspaces(const PolarSpace& ps, std::size_t k);

// ---------------------------------------------------------------------------
// Structure

struct StarSubspace {
  Subspace u;
  /// dim U > k - m; surfaced for inspection, not an error.
  bool anomaly = false;
};

/// U = ∩ f(M). Throws LemmaViolation when dim U < k - m.
StarSubspace extract_star_subspace(const PolarSpace& ps, const Embedding& e);

struct QuotientEmbedding {
  QuotientSpace space;
  Embedding g;
};

/// g(M) = project(f(M)) in W = V / U. Throws StarViolation when some f(M) does not contain U.
QuotientEmbedding reduce_to_quotient(const PolarSpace& ps, const Embedding& e, const Subspace& u);

struct PointMap {
  /// Indexed like ps.points(); ∩_{M ⊇ P} g(M), normally 1-dimensional.
  std::vector<Subspace> images;
  /// Points whose intersection has dimension > 1.
  std::vector<VertexId> anomalies;
};

/// Throws EmptyIntersection, NotInjective.
PointMap induce_point_map(const PolarSpace& ps, const Embedding& g);

struct LineViolation {
  ErrorCode code = ErrorCode::ContainmentViolation;
  VertexId point_p = 0;
  VertexId point_q = 0;
  /// Maximal index for ContainmentViolation, line index for PartialLine.
  VertexId witness = 0;
};

struct LineReport {
  std::size_t pairs_checked = 0;
  std::size_t lines_checked = 0;
  std::optional<LineViolation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

/// For collinear P, Q: every M ⊇ P + Q has g(M) ⊇ q(P) + q(Q); every line of Π
/// maps onto all q+1 points of a line of W.
LineReport check_line_images(const PolarSpace& ps, const Embedding& g, const PointMap& q);

/// Span of all points of Π.
Subspace polar_span(const PolarSpace& ps);

struct StructureReport {
  StarSubspace star;
  std::optional<QuotientSpace> quotient;
  Embedding g;
  PointMap q;
  LineReport lines;
  Subspace w_prime;
  Subspace v_prime;

  bool clean() const noexcept { return !star.anomaly && q.anomalies.empty() && lines.ok(); }
};

/// Runs the whole chain. Critical failures propagate as exceptions.
StructureReport analyze_embedding(const PolarSpace& ps, const Embedding& e);

// ---------------------------------------------------------------------------
// Search

struct SearchOptions {
  bool anchor = true;
  /// Maximum number of partial assignments explored; 0 means unlimited.
  std::uint64_t budget = 0;
  /// Maximum number of embeddings kept; TooLarge beyond it.
  std::size_t cap = enumeration_cap();
  Parallelism par;
};

struct SearchResult {
  /// Target vertex indices, one row per embedding, lexicographic order.
  std::vector<std::vector<VertexId>> tables;
  bool anchored = false;
  std::optional<VertexId> anchor_vertex;
  std::string anchor_source;
  std::uint64_t nodes = 0;

  Embedding embedding(const GrassmannGraph& target, std::size_t i) const;
};

/// Backtracking over the maximals in canonical order with pairwise distance
/// pruning. Throws TooLarge (no distance table, or more results than the cap),
/// RankTooSmall, SearchBudgetExceeded.
SearchResult search_embeddings(const PolarSpace& ps, const FiniteGraph& source, const GrassmannGraph& target,
                               const SearchOptions& options = {});

/// An invertible matrix sending A onto B (same dimension); used to spot-check
/// vertex transitivity of Γ_k(V).
Matrix transitivity_witness(const Field& field, const Subspace& a, const Subspace& b);

// ---------------------------------------------------------------------------
// Equivalence

/// x -> matrix * frob^field_auto(x), applied after the annihilator when duality is set.
struct EquivalenceWitness {
  Matrix matrix;
  unsigned field_auto = 0;
  bool duality = false;
};

Subspace apply_witness(const Field& field, const EquivalenceWitness& w, const Subspace& s);
Embedding apply_witness(const Field& field, const EquivalenceWitness& w, const Embedding& e);

/// Structure data of one embedding reused across many pair certifications.
/// Two frames are kept: the table itself and its annihilator table in V*.
class PreparedEmbedding {
 public:
  PreparedEmbedding(const PolarSpace& ps, Embedding e);

  const Embedding& embedding() const noexcept { return e_; }

  struct Variant {
    bool duality = false;
    Embedding table;  // f, or annihilator ∘ f
    std::optional<QuotientSpace> quotient;  // W = V / ∩ table
    std::vector<Subspace> g;
    bool has_point_map = false;
    std::vector<Vector> point_reps;  // normalized generator of q(P) in W coordinates
    std::vector<VertexId> frame;     // point indices whose reps start the basis
    Matrix basis;                    // w x w, rows: frame reps then unit completions
    std::vector<Vector> point_coords;
    std::vector<std::size_t> point_level;
    bool inside_frame_span = false;  // every g(M) lies in the span of the frame
  };

  const Variant& primal() const noexcept { return primal_; }
  const Variant& dual() const noexcept { return dual_; }

 private:
  Embedding e_;
  Variant primal_;
  Variant dual_;
};

/// Throws NotEquivalent (after exhausting the constrained space) or
/// SearchBudgetExceeded. budget 0 = unlimited. Any semilinear witness must
/// carry ∩ f1(M) onto ∩ f2(M) and point intersections onto point
/// intersections, in either frame; the search is exhaustive under those
/// constraints.
EquivalenceWitness connecting_automorphism(const PolarSpace& ps, const Embedding& f1, const Embedding& f2,
                                           std::uint64_t budget = 0);
EquivalenceWitness connecting_automorphism(const PolarSpace& ps, const PreparedEmbedding& f1,
                                           const PreparedEmbedding& f2, std::uint64_t budget = 0);

enum class ClassifyMode {
  /// Each embedding is certified against class representatives; equivalence
  /// with every other member follows by composing witnesses.
  representatives,
  /// Every unordered pair is certified directly.
  all_pairs,
};

struct ClassificationReport {
  ClassifyMode mode = ClassifyMode::representatives;
  std::size_t embeddings = 0;
  std::size_t classes = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_failed = 0;
  std::uint64_t linear_witnesses = 0;
  std::uint64_t semilinear_witnesses = 0;
  std::uint64_t duality_witnesses = 0;
  /// Class label (smallest member index) per embedding.
  std::vector<std::size_t> class_of;
  /// Smallest member of each class, ascending.
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> class_sizes;
};

namespace kernels {
/// Outcome of certifying one embedding against a fixed reference.
struct PairOutcome {
  bool equivalent = false;
  bool budget_exceeded = false;
  bool linear = false;
  bool duality = false;
};

std::vector<PairOutcome> certify_against_serial(const PolarSpace& ps, const PreparedEmbedding& reference,
                                                const std::vector<Embedding>& embeddings,
                                                const std::vector<std::size_t>& candidates, std::uint64_t budget);
std::vector<PairOutcome> certify_against_omp(const PolarSpace& ps, const PreparedEmbedding& reference,
                                             const std::vector<Embedding>& embeddings,
                                             const std::vector<std::size_t>& candidates, std::uint64_t budget,
                                             unsigned workers);
}  // namespace kernels

/// Partitions the embeddings into equivalence classes under automorphisms of
/// Γ_k(V). Throws SearchBudgetExceeded if any certification runs out of budget.
ClassificationReport classify_embeddings(const PolarSpace& ps, const std::vector<Embedding>& embeddings,
                                         std::uint64_t budget = 0, Parallelism par = {},
                                         ClassifyMode mode = ClassifyMode::representatives);

}  // namespace qgeom
