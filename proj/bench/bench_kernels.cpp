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

// Serial reference kernels against their OpenMP counterparts. The second
// argument of each benchmark is the worker count; 1 selects the serial path.

#include <benchmark/benchmark.h>

#include "qgeom/embed.hpp"

using namespace qgeom;

namespace {

Field gf2() { return Field::build({2, 1, {}}); }

FormSpec symplectic(std::size_t d)
{
  FormSpec s;
  s.kind = FormKind::alternating;
  s.form_dim = d;
  s.gram = Matrix(d, d);
  for (std::size_t i = 0; i + 1 < d; i += 2) s.gram.at(i, i + 1) = s.gram.at(i + 1, i) = 1;
  return s;
}

const std::vector<Subspace>& g63()
{
  static const auto v = enum_grassmannian(gf2(), 6, 3);
  return v;
}

void intersection_adjacency(benchmark::State& state)
{
  const auto f = gf2();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto adj = workers == 1 ? kernels::intersection_adjacency_serial(f, g63(), 2)
                            : kernels::intersection_adjacency_omp(f, g63(), 2, workers);
    benchmark::DoNotOptimize(adj);
  }
}

void all_pairs_distances(benchmark::State& state)
{
  static const auto adj = kernels::intersection_adjacency_serial(gf2(), g63(), 2);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto d = workers == 1 ? kernels::all_pairs_distances_serial(adj) : kernels::all_pairs_distances_omp(adj, workers);
    benchmark::DoNotOptimize(d);
  }
}

void distance_profiles(benchmark::State& state)
{
  static const FiniteGraph g(kernels::intersection_adjacency_serial(gf2(), g63(), 2));
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto p = workers == 1 ? kernels::distance_profiles_serial(g) : kernels::distance_profiles_omp(g, workers);
    benchmark::DoNotOptimize(p);
  }
}

void verify_pairs(benchmark::State& state)
{
  static const auto ps = build_polar_space(gf2(), 7, symplectic(6));
  static const auto e = canonical_embedding(ps, 4).embedding;
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto v = workers == 1 ? kernels::distance_pairs_serial(ps.field(), ps.maximals(), 3, e.images, 4)
                          : kernels::distance_pairs_omp(ps.field(), ps.maximals(), 3, e.images, 4, workers);
    benchmark::DoNotOptimize(v);
  }
}

void search(benchmark::State& state)
{
  static const auto ps = build_polar_space(gf2(), 4, symplectic(4));
  static const auto source = dual_polar_graph(ps);
  static const GrassmannGraph target(ps.field(), 4, 2);
  SearchOptions opt;
  opt.anchor = false;
  opt.par.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_embeddings(ps, source, target, opt));
}

void certify(benchmark::State& state)
{
  static const auto ps = build_polar_space(gf2(), 4, symplectic(4));
  static const auto source = dual_polar_graph(ps);
  static const GrassmannGraph target(ps.field(), 4, 2);
  static const auto res = search_embeddings(ps, source, target);
  static std::vector<Embedding> embs;
  static std::vector<std::size_t> cand;
  if (embs.empty())
    for (std::size_t i = 0; i < res.tables.size(); ++i) {
      embs.push_back(res.embedding(target, i));
      cand.push_back(i);
    }
  const PreparedEmbedding ref(ps, embs.front());
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto out = workers == 1 ? kernels::certify_against_serial(ps, ref, embs, cand, 0)
                            : kernels::certify_against_omp(ps, ref, embs, cand, 0, workers);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(intersection_adjacency)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(all_pairs_distances)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(distance_profiles)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_pairs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(search)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(certify)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
