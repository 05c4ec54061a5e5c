// Test-only oracles. Nothing here calls the search engine; the brute-force
// dimension routines enumerate candidates directly and check them with the
// representation-uniqueness definition.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "bdim/broadcast.hpp"
#include "bdim/graph.hpp"

namespace bdim::testing {

/// Graph on n vertices whose edges are the set bits of `mask` over the pairs
/// (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Calls fn on every connected labeled graph on n vertices.
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  const std::uint32_t masks = 1u << pair_count(n);
  for (std::uint32_t m = 0; m < masks; ++m) {
    Graph g = graph_from_mask(n, m);
    if (is_connected(g)) fn(g);
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

/// Floyd-Warshall with a large finite stand-in for infinity.
inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const long inf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Resolving by definition: all representations distinct. Uses Floyd-Warshall
/// distances and its own truncation.
inline bool resolving_by_definition(const Graph& g, const std::vector<int>& f) {
  const auto d = floyd_warshall(g);
  std::set<std::vector<long>> reps;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<long> rep;
    for (int z = 0; z < g.order(); ++z)
      if (f[z] > 0) rep.push_back(std::min<long>(d[v][z], f[z] + 1));
    if (!reps.insert(rep).second) return false;
  }
  return true;
}

inline bool reaches_all_by_definition(const Graph& g, const std::vector<int>& f) {
  const auto d = floyd_warshall(g);
  for (int v = 0; v < g.order(); ++v) {
    bool hit = false;
    for (int z = 0; z < g.order(); ++z) hit = hit || (f[z] > 0 && f[z] >= d[v][z]);
    if (!hit) return false;
  }
  return true;
}

/// Minimum cost over all value vectors with entries in 0..n-1 (distances never
/// exceed n-1, so larger values are never needed).
inline long brute_force_bdim(const Graph& g, bool full_reach = false) {
  const int n = g.order();
  const int top = std::max(1, n - 1);
  long best = -1;
  std::vector<int> f(n, 0);
  std::function<void(int, long)> rec = [&](int pos, long cost) {
    if (best >= 0 && cost >= best) return;
    if (pos == n) {
      if (resolving_by_definition(g, f) && (!full_reach || reaches_all_by_definition(g, f)))
        best = cost;
      return;
    }
    for (int t = 0; t <= top; ++t) {
      f[pos] = t;
      rec(pos + 1, cost + t);
    }
    f[pos] = 0;
  };
  rec(0, 0);
  return best;
}

/// Smallest set size; `adjacency` truncates distances at 1.
inline long brute_force_set_dim(const Graph& g, bool adjacency) {
  const int n = g.order();
  const auto d = floyd_warshall(g);
  long best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const long size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::set<std::vector<long>> reps;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      std::vector<long> rep;
      for (int z = 0; z < n; ++z)
        if (mask >> z & 1u) rep.push_back(adjacency ? std::min<long>(d[v][z], 2) : d[v][z]);
      ok = reps.insert(rep).second;
    }
    if (ok) best = size;
  }
  return best;
}

/// One sampled configuration for the tree reach-geometry property: a tree,
/// a broadcast, distinct support vertices a, b, v and any vertex x.
struct ReachGeometryCase {
  Graph tree;
  std::vector<int> f;
  Vertex a = 0, b = 0, v = 0, x = 0;
  bool overlap = false;  // some vertex is reached by both b and v
  bool holds = true;     // every such vertex is also reached by a
};

/// Rejection-samples until the three hypothesis inequalities hold. The tree
/// comes from `make_tree(n, seed)` so the caller supplies the generator.
template <class MakeTree>
ReachGeometryCase sample_reach_geometry(std::mt19937_64& rng, MakeTree make_tree,
                                        int max_order = 40) {
  std::uniform_int_distribution<int> order(3, max_order);
  for (;;) {
    const int n = order(rng);
    Graph t = make_tree(n, rng());
    const auto d = floyd_warshall(t);
    std::vector<int> f(n, 0);
    std::uniform_int_distribution<int> value(1, std::max(1, n / 2));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Vertex> supp;
    const int want = 3 + static_cast<int>(rng() % 3);
    while (static_cast<int>(supp.size()) < std::min(want, n)) {
      const Vertex z = pick(rng);
      if (f[z] == 0) {
        f[z] = value(rng);
        supp.push_back(z);
      }
    }
    std::shuffle(supp.begin(), supp.end(), rng);
    const Vertex a = supp[0], b = supp[1], v = supp[2], x = pick(rng);
    const long fa = f[a], fb = f[b], fv = f[v];
    if (!(fa - d[a][x] >= fv - d[v][x])) continue;
    if (!(fb - d[b][x] >= fv - d[v][x])) continue;
    if (!(fa - d[a][v] >= fb - d[b][v])) continue;
    ReachGeometryCase c{std::move(t), f, a, b, v, x};
    for (int w = 0; w < n; ++w) {
      if (fb >= d[b][w] && fv >= d[v][w]) {
        c.overlap = true;
        if (fa < d[a][w]) c.holds = false;
      }
    }
    return c;
  }
}

}  // namespace bdim::testing
