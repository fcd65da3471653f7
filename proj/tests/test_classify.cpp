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

// Full classification of the isometric embeddings of the dual polar graph of
// the symplectic quadrangle over GF(2) into the Grassmann graph of 3-spaces of
// GF(2)^5. Takes several seconds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qgeom/embed.hpp"
#include "support.hpp"

using namespace qgeom;
using support::code_of;

namespace {

struct Fixture {
  PolarSpace ps;
  FiniteGraph source;
  GrassmannGraph target;
  std::vector<Embedding> embs;
  ClassificationReport report;

  Fixture()
      : ps(build_polar_space(support::make_field(2), 5, support::symplectic(support::make_field(2), 4))),
        source(dual_polar_graph(ps)),
        target(ps.field(), 5, 3)
  {
    const auto res = search_embeddings(ps, source, target);
    for (std::size_t i = 0; i < res.tables.size(); ++i) embs.push_back(res.embedding(target, i));
    report = classify_embeddings(ps, embs, 0, Parallelism{4});
  }
};

const Fixture& fixture()
{
  static const Fixture f;
  return f;
}

Embedding annihilated(const Field& f, const Embedding& e)
{
  Embedding out{e.n, e.n - e.k, {}};
  for (const auto& s : e.images) out.images.push_back(annihilator(f, s));
  return out;
}

std::size_t meet_dim(const Field& f, const Embedding& e)
{
  Subspace meet = e.images.front();
  for (const auto& s : e.images) meet = intersect(f, meet, s);
  return meet.dim();
}

std::size_t star_representative()
{
  const auto& fx = fixture();
  for (auto r : fx.report.representatives)
    if (meet_dim(fx.ps.field(), fx.embs[r]) == 1) return r;
  return fx.report.representatives.front();
}

std::size_t exotic_representative()
{
  const auto& fx = fixture();
  for (auto r : fx.report.representatives)
    if (meet_dim(fx.ps.field(), fx.embs[r]) == 0) return r;
  return fx.report.representatives.back();
}

}  // namespace

TEST_CASE("anchored search size")
{
  CHECK(fixture().embs.size() == 68544);
}

TEST_CASE("two classes: star type and the exotic type")
{
  const auto& fx = fixture();
  const auto& r = fx.report;
  CHECK(r.classes == 2);
  REQUIRE(r.representatives.size() == 2);
  std::vector<std::size_t> sizes = r.class_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{4032, 64512});
  const auto& f = fx.ps.field();
  // the class label is determined by whether the images share a common point
  std::map<std::size_t, std::set<std::size_t>> meet_dims;
  std::size_t star_type = 0;
  for (std::size_t i = 0; i < fx.embs.size(); ++i) {
    const auto d = meet_dim(f, fx.embs[i]);
    meet_dims[r.class_of[i]].insert(d);
    star_type += d == 1;
  }
  CHECK(star_type == 4032);
  REQUIRE(meet_dims.size() == 2);
  for (const auto& [label, dims] : meet_dims) CHECK(dims.size() == 1);
  CHECK(meet_dims[star_representative()] == std::set<std::size_t>{1});
  CHECK(meet_dims[exotic_representative()] == std::set<std::size_t>{0});
}

TEST_CASE("the exotic class is a genuine obstruction")
{
  const auto& fx = fixture();
  const auto& f = fx.ps.field();
  const auto& star = fx.embs[star_representative()];
  const auto& exotic = fx.embs[exotic_representative()];
  CHECK(verify_isometric(fx.ps, exotic).ok());
  CHECK(code_of([&] { connecting_automorphism(fx.ps, star, exotic); }) == ErrorCode::NotEquivalent);
  CHECK(code_of([&] { analyze_embedding(fx.ps, exotic); }) == ErrorCode::LemmaViolation);

  // In V* the exotic table becomes a table of planes meeting in 0 with k = m,
  // and the point map lands on 5 independent directions while V' has only 4.
  const auto dual = annihilated(f, exotic);
  CHECK(verify_isometric(fx.ps, dual).ok());
  const auto r = analyze_embedding(fx.ps, dual);
  CHECK(r.clean());
  CHECK(r.star.u.dim() == 0);
  CHECK(r.v_prime.dim() == 4);
  CHECK(r.w_prime.dim() == 5);

  // the star-type class analyzes cleanly in the primal frame
  const auto s = analyze_embedding(fx.ps, star);
  CHECK(s.clean());
  CHECK(s.w_prime.dim() == s.v_prime.dim());
}

TEST_CASE("certification kernels agree")
{
  const auto& fx = fixture();
  const PreparedEmbedding ref(fx.ps, fx.embs[exotic_representative()]);
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < fx.embs.size(); i += 997) cand.push_back(i);
  const auto a = kernels::certify_against_serial(fx.ps, ref, fx.embs, cand, 0);
  const auto b = kernels::certify_against_omp(fx.ps, ref, fx.embs, cand, 0, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].equivalent == b[i].equivalent);
    CHECK(a[i].equivalent == (fx.report.class_of[cand[i]] == exotic_representative()));
  }
}
