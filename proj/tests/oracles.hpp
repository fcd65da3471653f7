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

// Independent reference computations for the tests. Nothing here calls into
// the library's arithmetic tables or elimination routines: field operations
// are plain polynomial arithmetic, subspaces are explicit sets of vectors and
// graph distances come from a separate BFS.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<unsigned>;

/// GF(p^e) by schoolbook polynomial arithmetic; elements are coefficient
/// vectors packed into the integer code sum c_i p^i.
struct PolyField {
  unsigned p;
  unsigned e;
  std::vector<unsigned> modulus;  // little-endian, monic, length e + 1

  unsigned q() const
  {
    unsigned r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
  }

  Vec unpack(unsigned a) const
  {
    Vec c(e);
    for (unsigned i = 0; i < e; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }

  unsigned pack(const Vec& c) const
  {
    unsigned a = 0;
    for (unsigned i = e; i-- > 0;) a = a * p + c[i];
    return a;
  }

  unsigned add(unsigned a, unsigned b) const
  {
    Vec x = unpack(a), y = unpack(b);
    for (unsigned i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }

  unsigned neg(unsigned a) const
  {
    Vec x = unpack(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }

  unsigned mul(unsigned a, unsigned b) const
  {
    Vec x = unpack(a), y = unpack(b);
    std::vector<unsigned> prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    if (e > 1)
      for (unsigned d = 2 * e - 1; d >= e; --d) {
        const unsigned c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * modulus[i]) % p;
      }
    Vec r(prod.begin(), prod.begin() + e);
    return pack(r);
  }

  unsigned inv(unsigned a) const
  {
    for (unsigned b = 1; b < q(); ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }

  unsigned pow(unsigned a, unsigned k) const
  {
    unsigned r = 1;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
};

inline PolyField prime_field(unsigned p) { return {p, 1, {0, 1}}; }

/// All vectors of GF(q)^n, ordered lexicographically.
inline std::vector<Vec> all_vectors(unsigned q, std::size_t n)
{
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<Vec> out;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v(n);
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<unsigned>(c % q);
      c /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// The set of all linear combinations of the given rows.
inline std::set<Vec> span_set(const PolyField& f, std::size_t n, const std::vector<Vec>& rows)
{
  std::set<Vec> out{Vec(n, 0)};
  for (const auto& r : rows) {
    std::set<Vec> next;
    for (const auto& v : out)
      for (unsigned c = 0; c < f.q(); ++c) {
        Vec w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(c, r[i]));
        next.insert(w);
      }
    out = std::move(next);
  }
  return out;
}

/// log_q of a subspace's cardinality.
inline std::size_t dim_of_size(unsigned q, std::size_t size)
{
  std::size_t d = 0;
  while (size > 1) {
    size /= q;
    ++d;
  }
  return d;
}

inline std::size_t intersection_dim(unsigned q, const std::set<Vec>& a, const std::set<Vec>& b)
{
  std::size_t common = 0;
  for (const auto& v : a) common += b.count(v);
  return dim_of_size(q, common);
}

/// Gaussian binomial by the q-Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
inline std::uint64_t gaussian_recurrence(unsigned n, unsigned k, std::uint64_t q)
{
  if (k > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    t[i][0] = 1;
    std::uint64_t qk = 1;
    for (unsigned j = 1; j <= i; ++j) {
      qk *= q;
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? qk * t[i - 1][j] : 0);
    }
  }
  return t[n][k];
}

/// Number of distinct k-dimensional subspaces, counted as distinct span sets
/// of k-tuples of vectors.
inline std::size_t naive_grassmannian_count(const PolyField& f, std::size_t n, std::size_t k)
{
  const auto vecs = all_vectors(f.q(), n);
  std::set<std::set<Vec>> seen;
  std::vector<std::size_t> idx(k, 1);
  const std::size_t total = vecs.size();
  if (k == 0) return 1;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == k) {
      std::vector<Vec> rows;
      for (auto i : idx) rows.push_back(vecs[i]);
      auto s = span_set(f, n, rows);
      if (dim_of_size(f.q(), s.size()) == k) seen.insert(std::move(s));
      return;
    }
    for (std::size_t i = start; i < total; ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 1);
  return seen.size();
}

/// Breadth-first distances from one source; -1 when unreachable.
inline std::vector<int> bfs(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t src)
{
  std::vector<int> d(adj.size(), -1);
  std::deque<std::size_t> queue{src};
  d[src] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto w : adj[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
  }
  return d;
}

/// Decodes graph6 following the published format description.
inline std::vector<std::vector<bool>> decode_graph6(const std::string& text)
{
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(s[0]) != 126) {
    n = static_cast<unsigned char>(s[0]) - 63;
    pos = 1;
  } else if (static_cast<unsigned char>(s[1]) != 126) {
    for (int i = 1; i <= 3; ++i) n = n * 64 + (static_cast<unsigned char>(s[i]) - 63);
    pos = 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = n * 64 + (static_cast<unsigned char>(s[i]) - 63);
    pos = 8;
  }
  std::vector<bool> bits;
  for (; pos < s.size(); ++pos) {
    const unsigned v = static_cast<unsigned char>(s[pos]) - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1U);
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) adj[i][j] = adj[j][i] = bits.at(k);
  return adj;
}

}  // namespace oracle
