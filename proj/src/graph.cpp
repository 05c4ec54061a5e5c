#include "bdim/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>

namespace bdim {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int DistanceMatrix::eccentricity(Vertex v) const {
  int ecc = 0;
  for (int d : row(v))
    if (d != kUnreachable) ecc = std::max(ecc, d);
  return ecc;
}

int DistanceMatrix::diameter() const {
  int diam = 0;
  for (int d : d_) {
    if (d == kUnreachable) return kUnreachable;
    diam = std::max(diam, d);
  }
  return diam;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == DistanceMatrix::kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  auto id = [nh](Vertex a, Vertex b) { return a * nh + b; };
  std::vector<Edge> edges;
  edges.reserve(g.size() * nh + h.size() * ng);
  for (Vertex a = 0; a < ng; ++a)
    for (auto [b1, b2] : h.edges()) edges.emplace_back(id(a, b1), id(a, b2));
  for (auto [a1, a2] : g.edges())
    for (Vertex b = 0; b < nh; ++b) edges.emplace_back(id(a1, b), id(a2, b));
  return Graph(ng * nh, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges(g.edges());
  const int shift = g.order();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g.order() + h.order(), edges);
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw InvalidInput("(" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not an edge");
  }
  const Edge target{std::min(u, v), std::max(u, v)};
  std::vector<Edge> edges;
  edges.reserve(g.size() - 1);
  for (const Edge& e : g.edges())
    if (e != target) edges.push_back(e);
  return Graph(g.order(), edges);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  return Graph(g.order() - 1, edges);
}

namespace {

std::vector<std::vector<Vertex>> classes_by_neighborhood(const Graph& g, bool closed) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> key(nb.begin(), nb.end());
    if (closed) key.insert(std::lower_bound(key.begin(), key.end(), v), v);
    by_nbhd[std::move(key)].push_back(v);
  }
  std::vector<std::vector<Vertex>> classes;
  for (auto& [key, members] : by_nbhd)
    if (members.size() >= 2) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  return classes_by_neighborhood(g, true);
}

std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g) {
  return classes_by_neighborhood(g, false);
}

std::vector<Edge> twin_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  for (const auto& cls : twin_classes(g))
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        pairs.emplace_back(cls[i], cls[j]);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

int count_reachable(const Graph& g, Vertex start, const Edge* skip) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (skip && ((u == skip->first && w == skip->second) ||
                   (u == skip->second && w == skip->first)))
        continue;
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return count_reachable(g, 0, nullptr) == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) &&
         g.size() == static_cast<std::size_t>(g.order() - 1);
}

bool is_bridge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw InvalidInput("(" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not an edge");
  }
  const Edge e{u, v};
  return count_reachable(g, u, &e) != count_reachable(g, u, nullptr);
}

std::vector<Vertex> leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

Graph random_tree(int n, unsigned long long seed) {
  if (n < 1) throw InvalidInput("random_tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);

  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaf_heap;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaf_heap.push(v);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int c : code) {
    int leaf = leaf_heap.top();
    leaf_heap.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaf_heap.push(c);
  }
  int a = leaf_heap.top();
  leaf_heap.pop();
  edges.emplace_back(a, leaf_heap.top());
  return Graph(n, edges);
}

}  // namespace bdim
