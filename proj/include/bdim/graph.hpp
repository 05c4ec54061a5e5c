#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed arguments: out-of-range vertices, self-loops,
/// family parameters outside their valid range, unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a caller violates a precondition that can only be checked
/// by expensive recomputation (e.g. handing a non-optimal broadcast to a
/// procedure defined for optimal ones).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v), sorted and deduplicated. Adjacency
/// lists are sorted. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on an endpoint >= n or a self-loop. Duplicate
  /// edges (in either orientation) collapse to one.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

/// All-pairs shortest path lengths. Cross-component pairs hold
/// kUnreachable, which compares greater than every finite distance.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const int> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

  /// Largest finite distance from v (eccentricity within v's component).
  int eccentricity(Vertex v) const;
  /// kUnreachable when the graph is disconnected; 0 for n <= 1.
  int diameter() const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// One BFS per vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);
/// Removes v and shifts every larger index down by one.
Graph delete_vertex(const Graph& g, Vertex v);

/// Closed-neighborhood twin classes (N[u] = N[v]) of size >= 2, each sorted,
/// ordered by smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);
/// Every unordered twin pair (u < v), lexicographically sorted.
std::vector<Edge> twin_pairs(const Graph& g);
/// Open-neighborhood classes (N(u) = N(v)), same ordering. Members are pairwise
/// nonadjacent and, like closed twins, equidistant from every other vertex.
std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// True when deleting uv disconnects the component containing it.
bool is_bridge(const Graph& g, Vertex u, Vertex v);
std::vector<Vertex> leaves(const Graph& g);

/// Uniform labeled tree on n vertices by decoding a random Pruefer sequence.
Graph random_tree(int n, unsigned long long seed);

}  // namespace bdim
