#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bdim/broadcast.hpp"
#include "bdim/graph.hpp"

namespace bdim {

enum class DimensionKind {
  metric,      // dim: smallest resolving set
  adjacency,   // adim: smallest adjacency resolving set
  broadcast,   // bdim: cheapest resolving broadcast
  full_reach,  // hat-bdim: cheapest resolving broadcast reaching every vertex
};

enum class SolveStatus { optimal, budget_exceeded, timeout };

std::string to_string(DimensionKind kind);
std::string to_string(SolveStatus status);
/// Accepts "dim", "adim", "bdim", "hat-bdim". Throws InvalidInput otherwise.
DimensionKind parse_dimension_kind(const std::string& name);

struct SolveLimits {
  /// Largest total cost tried. Defaults to the vertex count, which always
  /// admits a solution.
  std::optional<long> budget;
  /// Zero means no limit.
  std::chrono::milliseconds time_limit{0};
  /// Worker threads for the infeasibility sweeps. Certificates do not depend
  /// on this; node counts do.
  int threads = 1;
};

struct SolveResult {
  DimensionKind kind = DimensionKind::broadcast;
  SolveStatus status = SolveStatus::optimal;
  /// The dimension when optimal, otherwise equal to lower_bound.
  long value = 0;
  long lower_bound = 0;
  /// For the set kinds this is the 0/1 indicator of the set. Among all
  /// optimal certificates it is the lexicographically least value vector.
  BroadcastFn certificate;
  long long nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  bool optimal() const { return status == SolveStatus::optimal; }
  std::vector<Vertex> certificate_set() const { return certificate.support(); }
};

SolveResult solve(const Graph& g, DimensionKind kind, const SolveLimits& limits = {});
SolveResult solve_dim(const Graph& g, const SolveLimits& limits = {});
SolveResult solve_adim(const Graph& g, const SolveLimits& limits = {});
SolveResult solve_bdim(const Graph& g, const SolveLimits& limits = {});
SolveResult solve_hat_bdim(const Graph& g, const SolveLimits& limits = {});

/// Checks a certificate with the kernel predicate matching `kind`.
Verdict verify_certificate(const DistanceMatrix& d, DimensionKind kind,
                           const BroadcastFn& certificate);

struct BroadcastEnumeration {
  std::vector<BroadcastFn> broadcasts;  // lexicographic order
  bool overflow = false;                // stopped at the cap
};

/// Every resolving broadcast of total cost exactly `cost` whose values stay
/// within each vertex's eccentricity (at least 1). When cost = bdim(g) this is
/// every optimal resolving broadcast, since larger values never help.
BroadcastEnumeration enumerate_optimal_broadcasts(const Graph& g, long cost,
                                                  std::size_t cap = 1'000'000);

/// Sum of (class size - 1) over closed twin classes and over open-neighborhood
/// twin classes. The two kinds of class never overlap.
long lower_bound_twin(const Graph& g);

enum class PathCycleFormula { dim_path, dim_cycle, bdim, adim, hat_bdim };

/// Closed forms for paths and cycles. Throws InvalidInput for n below the
/// formula's range (n >= 4 for bdim/adim/hat-bdim, n >= 3 for dim of a
/// cycle, n >= 1 for dim of a path).
long formula_path_cycle(int n, PathCycleFormula which);

}  // namespace bdim
