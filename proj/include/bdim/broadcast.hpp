#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "bdim/graph.hpp"

namespace bdim {

/// Nonnegative integer range per vertex of a host graph.
class BroadcastFn {
 public:
  BroadcastFn() = default;
  explicit BroadcastFn(int n) : values_(n, 0) {}
  /// Throws InvalidInput on a negative entry.
  explicit BroadcastFn(std::vector<int> values);

  int order() const { return static_cast<int>(values_.size()); }
  int operator[](Vertex v) const { return values_[v]; }
  void set(Vertex v, int value);
  std::span<const int> values() const { return values_; }

  long cost() const;
  int max_value() const;
  /// Vertices with a positive value, ascending.
  std::vector<Vertex> support() const;
  bool in_support(Vertex v) const { return values_[v] > 0; }

  /// Lexicographic on the value vector.
  friend auto operator<=>(const BroadcastFn&, const BroadcastFn&) = default;

 private:
  std::vector<int> values_;
};

/// Indicator broadcast: value `value` on each member of `set`.
BroadcastFn indicator(int n, std::span<const Vertex> set, int value = 1);

/// Truncated distances to the support vertices, ascending by vertex index.
using Representation = std::vector<int>;

/// min(d, k+1); kUnreachable truncates to k+1.
constexpr int truncated_distance(int d, int k) { return d < k + 1 ? d : k + 1; }

/// Outcome of a resolving check; on failure carries the lexicographically
/// least unresolved pair (x < y), or for reach checks an unreached vertex.
struct Verdict {
  std::optional<Edge> witness;
  std::optional<Vertex> unreached;

  bool ok() const { return !witness && !unreached; }
  explicit operator bool() const { return ok(); }
};

Representation representation(const DistanceMatrix& d, const BroadcastFn& f, Vertex v);

/// Whether support vertex z separates x and y under its truncated distance.
/// Throws InvalidInput when z is not in the support.
bool resolves(const DistanceMatrix& d, const BroadcastFn& f, Vertex z, Vertex x,
              Vertex y);

Verdict is_resolving_broadcast(const DistanceMatrix& d, const BroadcastFn& f);
Verdict is_resolving_set(const DistanceMatrix& d, std::span<const Vertex> set);
Verdict is_adjacency_resolving_set(const DistanceMatrix& d, std::span<const Vertex> set);

/// f(z) >= d(v, z). Throws InvalidInput when z is not in the support.
bool reaches(const DistanceMatrix& d, const BroadcastFn& f, Vertex z, Vertex v);
/// Vertices reached by at least one support vertex, ascending.
std::vector<Vertex> reached_set(const DistanceMatrix& d, const BroadcastFn& f);
bool is_fully_reaching(const DistanceMatrix& d, const BroadcastFn& f);

/// Number of distinct broadcast representations over all vertices.
int count_representations(const DistanceMatrix& d, const BroadcastFn& f);

}  // namespace bdim
