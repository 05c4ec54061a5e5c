#include "bdim/broadcast.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bdim {

BroadcastFn::BroadcastFn(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_)
    if (v < 0) throw InvalidInput("broadcast values must be nonnegative");
}

void BroadcastFn::set(Vertex v, int value) {
  if (value < 0) throw InvalidInput("broadcast values must be nonnegative");
  values_.at(v) = value;
}

long BroadcastFn::cost() const {
  return std::accumulate(values_.begin(), values_.end(), 0L);
}

int BroadcastFn::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::vector<Vertex> BroadcastFn::support() const {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < order(); ++v)
    if (values_[v] > 0) s.push_back(v);
  return s;
}

BroadcastFn indicator(int n, std::span<const Vertex> set, int value) {
  BroadcastFn f(n);
  for (Vertex v : set) f.set(v, value);
  return f;
}

Representation representation(const DistanceMatrix& d, const BroadcastFn& f, Vertex v) {
  Representation rep;
  for (Vertex z = 0; z < f.order(); ++z)
    if (f[z] > 0) rep.push_back(truncated_distance(d(v, z), f[z]));
  return rep;
}

namespace {

void require_support(const BroadcastFn& f, Vertex z) {
  if (z < 0 || z >= f.order() || !f.in_support(z))
    throw InvalidInput("vertex " + std::to_string(z) + " is not in the support");
}

// Scans pairs in lexicographic order; `ranges` gives the truncation per
// resolving vertex and `members` the resolving vertices.
Verdict first_unresolved(const DistanceMatrix& d, std::span<const Vertex> members,
                         std::span<const int> ranges) {
  const int n = d.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      bool separated = false;
      for (std::size_t i = 0; i < members.size() && !separated; ++i) {
        const Vertex z = members[i];
        separated = truncated_distance(d(x, z), ranges[i]) !=
                    truncated_distance(d(y, z), ranges[i]);
      }
      if (!separated) return Verdict{Edge{x, y}, std::nullopt};
    }
  }
  return Verdict{};
}

}  // namespace

bool resolves(const DistanceMatrix& d, const BroadcastFn& f, Vertex z, Vertex x,
              Vertex y) {
  require_support(f, z);
  return truncated_distance(d(x, z), f[z]) != truncated_distance(d(y, z), f[z]);
}

Verdict is_resolving_broadcast(const DistanceMatrix& d, const BroadcastFn& f) {
  if (f.order() != d.order()) throw InvalidInput("broadcast order does not match graph");
  const std::vector<Vertex> supp = f.support();
  std::vector<int> ranges;
  for (Vertex z : supp) ranges.push_back(f[z]);
  return first_unresolved(d, supp, ranges);
}

namespace {

std::vector<Vertex> checked_set(const DistanceMatrix& d, std::span<const Vertex> set) {
  std::vector<Vertex> s(set.begin(), set.end());
  for (Vertex v : s)
    if (v < 0 || v >= d.order()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Verdict is_resolving_set(const DistanceMatrix& d, std::span<const Vertex> set) {
  const std::vector<Vertex> s = checked_set(d, set);
  // Truncating just below kUnreachable leaves every finite distance intact.
  std::vector<int> ranges(s.size(), DistanceMatrix::kUnreachable - 2);
  return first_unresolved(d, s, ranges);
}

Verdict is_adjacency_resolving_set(const DistanceMatrix& d, std::span<const Vertex> set) {
  const std::vector<Vertex> s = checked_set(d, set);
  std::vector<int> ranges(s.size(), 1);
  return first_unresolved(d, s, ranges);
}

bool reaches(const DistanceMatrix& d, const BroadcastFn& f, Vertex z, Vertex v) {
  require_support(f, z);
  return d(v, z) != DistanceMatrix::kUnreachable && f[z] >= d(v, z);
}

std::vector<Vertex> reached_set(const DistanceMatrix& d, const BroadcastFn& f) {
  std::vector<Vertex> out;
  const std::vector<Vertex> supp = f.support();
  for (Vertex v = 0; v < d.order(); ++v) {
    if (std::any_of(supp.begin(), supp.end(), [&](Vertex z) {
          return d(v, z) != DistanceMatrix::kUnreachable && f[z] >= d(v, z);
        }))
      out.push_back(v);
  }
  return out;
}

bool is_fully_reaching(const DistanceMatrix& d, const BroadcastFn& f) {
  return static_cast<int>(reached_set(d, f).size()) == d.order();
}

int count_representations(const DistanceMatrix& d, const BroadcastFn& f) {
  std::set<Representation> reps;
  for (Vertex v = 0; v < d.order(); ++v) reps.insert(representation(d, f, v));
  return static_cast<int>(reps.size());
}

}  // namespace bdim
