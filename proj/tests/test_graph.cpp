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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qgeom/grassmann.hpp"
#include "qgeom/io.hpp"
#include "support.hpp"

using namespace qgeom;
using support::code_of;

namespace {

FiniteGraph complete(std::size_t n)
{
  AdjacencyLists adj(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) adj[u].push_back(v);
  return FiniteGraph(adj);
}

FiniteGraph path(std::size_t n)
{
  AdjacencyLists adj(n);
  for (VertexId u = 0; u + 1 < n; ++u) {
    adj[u].push_back(u + 1);
    adj[u + 1].push_back(u);
  }
  return FiniteGraph(adj);
}

FiniteGraph cycle(std::size_t n)
{
  AdjacencyLists adj(n);
  for (VertexId u = 0; u < n; ++u) {
    adj[u].push_back(static_cast<VertexId>((u + 1) % n));
    adj[(u + 1) % n].push_back(u);
  }
  return FiniteGraph(adj);
}

FiniteGraph petersen()
{
  // 2-subsets of {0..4}, adjacent when disjoint
  std::vector<std::pair<int, int>> v;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) v.emplace_back(a, b);
  AdjacencyLists adj(v.size());
  for (VertexId i = 0; i < v.size(); ++i)
    for (VertexId j = 0; j < v.size(); ++j)
      if (v[i].first != v[j].first && v[i].first != v[j].second && v[i].second != v[j].first &&
          v[i].second != v[j].second)
        adj[i].push_back(j);
  return FiniteGraph(adj);
}

FiniteGraph random_graph(std::size_t n, double p, unsigned seed)
{
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  AdjacencyLists adj(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
  return FiniteGraph(adj);
}

}  // namespace

TEST_CASE("complete graph K4")
{
  const auto g = complete(4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.diameter() == 1);
  const auto in = intersection_numbers(g);
  CHECK(in.degree == 3);
  CHECK(in.b_array() == std::vector<unsigned>{3});
  CHECK(in.c_array() == std::vector<unsigned>{1});
  CHECK(in.table.at(1) == IntersectionTriple{1, 2, 0});
}

TEST_CASE("known distance-regular graphs")
{
  const auto c = cycle(7);
  auto in = intersection_numbers(c);
  CHECK(in.b_array() == std::vector<unsigned>{2, 1, 1});
  CHECK(in.c_array() == std::vector<unsigned>{1, 1, 1});

  in = intersection_numbers(petersen());
  CHECK(in.b_array() == std::vector<unsigned>{3, 2});
  CHECK(in.c_array() == std::vector<unsigned>{1, 1});
}

TEST_CASE("path and disconnected graphs are rejected")
{
  CHECK(code_of([] { intersection_numbers(path(4)); }) == ErrorCode::NotDistanceRegular);
  AdjacencyLists two(2);
  const FiniteGraph g(two);
  CHECK_FALSE(g.connected());
  CHECK_FALSE(g.distance(0, 1).has_value());
  CHECK(code_of([&] { g.diameter(); }) == ErrorCode::Disconnected);
  CHECK(code_of([&] { intersection_numbers(g); }) == ErrorCode::Disconnected);
}

TEST_CASE("malformed adjacency is rejected")
{
  CHECK(code_of([] { FiniteGraph(AdjacencyLists{{1}, {}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { FiniteGraph(AdjacencyLists{{0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { FiniteGraph(AdjacencyLists{{5}}); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { path(3).neighbors(3); }) == ErrorCode::BadIndex);
}

TEST_CASE("distances agree with an independent BFS")
{
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const auto g = random_graph(40, 0.08, seed);
    REQUIRE(g.has_distance_table());
    const auto table = g.distance_table();
    for (VertexId u = 0; u < g.order(); ++u) {
      const auto ref = oracle::bfs(g.adjacency(), u);
      for (VertexId v = 0; v < g.order(); ++v) {
        const auto d = g.distance(u, v);
        if (ref[v] < 0) {
          CHECK_FALSE(d.has_value());
          CHECK(table[u * g.order() + v] == kUnreachable);
        } else {
          REQUIRE(d.has_value());
          CHECK(*d == static_cast<unsigned>(ref[v]));
          CHECK(bfs_distance(g, u, v) == d);
        }
      }
    }
  }
}

TEST_CASE("graphs above the table cap fall back to BFS")
{
  const FiniteGraph g(path(30).adjacency(), {}, 10);
  CHECK_FALSE(g.has_distance_table());
  CHECK(g.distance(0, 29) == 29U);
  CHECK(g.diameter() == 29);
}

TEST_CASE("serial and parallel kernels agree")
{
  for (unsigned seed = 1; seed <= 3; ++seed) {
    const auto g = random_graph(120, 0.05, seed);
    const auto serial = kernels::all_pairs_distances_serial(g.adjacency());
    for (unsigned w : {2U, 4U}) CHECK(kernels::all_pairs_distances_omp(g.adjacency(), w) == serial);
    const auto prof = kernels::distance_profiles_serial(g);
    CHECK(kernels::distance_profiles_omp(g, 4) == prof);
  }
}

TEST_CASE("induced subgraph")
{
  const auto g = cycle(6);
  const std::vector<VertexId> keep{0, 1, 2};
  const auto h = induced_subgraph(g, keep);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.adjacent(0, 1));
  CHECK_FALSE(h.adjacent(0, 2));
}

TEST_CASE("graph6 export decodes to the same graph")
{
  const auto f = support::make_field(2);
  const GrassmannGraph gr(f, 4, 2);
  std::vector<FiniteGraph> graphs{complete(4), petersen(), path(1), gr.graph(), random_graph(70, 0.1, 9)};
  for (const auto& g : graphs) {
    const auto text = io::to_graph6(g);
    CHECK(text.back() == '\n');
    const auto adj = oracle::decode_graph6(text);
    REQUIRE(adj.size() == g.order());
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = 0; v < g.order(); ++v) CHECK(adj[u][v] == g.adjacent(u, v));
  }
  // fixed reference strings from the format description
  CHECK(io::to_graph6(complete(4)) == "C~\n");
  CHECK(io::to_graph6(petersen()).size() == 1 + 8 + 1);
}

TEST_CASE("CSV edge list")
{
  const auto csv = io::to_csv(path(3));
  CHECK(csv == "0,1\n1,2\n");
}
