#include "bdim/constructions.hpp"

#include <algorithm>

#include "bdim/families.hpp"
#include "bdim/solver.hpp"

namespace bdim {

BroadcastFn construct_path_pattern(int n) {
  if (n < 4) throw InvalidInput("path pattern needs n >= 4");
  BroadcastFn f(n);
  if (n == 4) {
    f.set(1, 1);
    f.set(2, 1);
    return f;
  }
  for (int i = 1; i <= n; ++i)
    if (i % 5 == 2 || i % 5 == 4) f.set(i - 1, 1);
  if (n % 5 == 3) {
    f.set(n - 2, 0);
    f.set(n - 1, 1);
  }
  return f;
}

BroadcastFn construct_F_endpoints(int k) {
  if (k < 1) throw InvalidInput("F_k endpoint broadcast needs k >= 1");
  BroadcastFn f(f_graph(k).order());
  f.set(0, 2 * k);
  f.set(k, 2 * k);
  return f;
}

BroadcastFn construct_F_cheap(int k) {
  if (k < 1) throw InvalidInput("F_k broadcast needs k >= 1");
  BroadcastFn f(f_graph(k).order());
  f.set(0, 2 * k);
  f.set(k, k);
  return f;
}

BroadcastFn construct_X(int k) {
  if (k < 0) throw InvalidInput("X_k broadcast needs k >= 0");
  const int n = x_apex(k, k + 1) + 1;
  BroadcastFn f(n);
  f.set(x_apex(k, 1), 3);
  for (int j = 2; j <= k + 1; ++j) f.set(x_apex(k, j), 2);
  return f;
}

BroadcastFn construct_grid_corners(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("grid needs m, n >= 1");
  BroadcastFn f(m * n);
  f.set(0, m + n);
  f.set(n - 1, m + n);
  return f;
}

namespace {

// Vertices of a path (from its lowest-index end) or cycle (from 0 towards
// its lower neighbor) in traversal order. Empty if g is neither.
std::vector<Vertex> traversal(const Graph& g, bool& is_cycle) {
  const int n = g.order();
  is_cycle = false;
  if (n == 0 || !is_connected(g)) return {};
  if (n == 1) return {0};
  const auto e = g.size();
  Vertex start = 0;
  if (e == static_cast<std::size_t>(n - 1)) {
    const auto ends = leaves(g);
    if (ends.size() != 2) return {};
    start = ends.front();
  } else if (e == static_cast<std::size_t>(n) && n >= 3) {
    is_cycle = true;
  } else {
    return {};
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return {};
  std::vector<Vertex> seq{start};
  Vertex prev = -1, cur = start;
  while (static_cast<int>(seq.size()) < n) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev && (seq.size() < 2 || w != seq.front())) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
    seq.push_back(cur);
  }
  return seq;
}

}  // namespace

BroadcastFn flatten_path_cycle(const Graph& g, const BroadcastFn& f) {
  bool cycle = false;
  const std::vector<Vertex> seq = traversal(g, cycle);
  if (seq.empty()) throw InvalidInput("flatten needs a path or a cycle");
  if (f.order() != g.order()) throw InvalidInput("broadcast order does not match graph");
  const DistanceMatrix d = all_pairs_distances(g);
  if (!is_resolving_broadcast(d, f)) throw InvalidInput("broadcast is not resolving");
  const long best = solve_bdim(g).value;
  if (f.cost() != best)
    throw ContractViolation("broadcast of cost " + std::to_string(f.cost()) +
                            " is not optimal (bdim = " + std::to_string(best) + ")");

  const int n = g.order();
  // Work on traversal positions.
  std::vector<int> val(n);
  for (int p = 0; p < n; ++p) val[p] = f[seq[p]];
  auto lift = [&](int p) { val[p] = std::max(val[p], 1); };

  for (;;) {
    const auto it = std::find_if(val.begin(), val.end(), [](int x) { return x > 1; });
    if (it == val.end()) break;
    const int j = static_cast<int>(it - val.begin());
    const int x = *it;
    const bool end_vertex = !cycle && (j == 0 || j == n - 1);
    if (end_vertex && x == 2) {
      val[j] = 1;
      lift(j == 0 ? 1 : n - 2);
      continue;
    }
    val[j] = x - 2;
    int up = j + x - 1, down = j - x + 1;
    if (cycle) {
      up = ((up % n) + n) % n;
      down = ((down % n) + n) % n;
    } else {
      up = std::min(up, n - 1);
      down = std::max(down, 0);
    }
    // A clamped target can land on j itself; it then keeps max(x - 2, 1).
    lift(up);
    lift(down);
  }

  BroadcastFn out(n);
  for (int p = 0; p < n; ++p) out.set(seq[p], val[p]);
  return out;
}

BroadcastFn repair_after_edge_deletion(const Graph& g, const BroadcastFn& f, Vertex u,
                                       Vertex v) {
  if (!g.has_edge(u, v)) throw InvalidInput("repair needs an edge of the graph");
  if (f.order() != g.order()) throw InvalidInput("broadcast order does not match graph");
  if (!is_resolving_broadcast(all_pairs_distances(g), f))
    throw InvalidInput("broadcast does not resolve the graph");
  BroadcastFn out = f;
  const int b = f.max_value();
  out.set(u, b);
  out.set(v, b);
  return out;
}

BroadcastFn prune_leaf(const Graph& t, const BroadcastFn& f, Vertex leaf) {
  if (!is_tree(t)) throw InvalidInput("prune_leaf needs a tree");
  if (leaf < 0 || leaf >= t.order() || t.degree(leaf) != 1)
    throw InvalidInput("vertex " + std::to_string(leaf) + " is not a leaf");
  if (f.order() != t.order()) throw InvalidInput("broadcast order does not match graph");
  if (!is_resolving_broadcast(all_pairs_distances(t), f))
    throw InvalidInput("broadcast does not resolve the tree");

  const Vertex parent = t.neighbors(leaf).front();
  std::vector<int> values(f.values().begin(), f.values().end());
  // The floor of 1 covers f(leaf) = 1 with the parent outside the support.
  if (values[leaf] > 0) values[parent] = std::max({values[leaf] - 1, values[parent], 1});
  values.erase(values.begin() + leaf);
  return BroadcastFn(std::move(values));
}

}  // namespace bdim
