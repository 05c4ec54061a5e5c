#pragma once

#include "bdim/broadcast.hpp"
#include "bdim/graph.hpp"

namespace bdim {

// Explicit resolving broadcasts for the generated families. Each is bound to
// the canonical numbering of the matching generator in families.hpp.

/// 0/1 broadcast on P_n or C_n with value 1 at 1-based positions i with
/// i = 2 or 4 (mod 5). That rule leaves a tie when n = 3 (mod 5), so there the
/// last support vertex moves from n-1 to n; on n = 4 the support is {2, 3}
/// (the rule's {2, 4} is antipodal on C_4). Resolving on both P_n and C_n with
/// cost floor((2n+2)/5). n >= 4.
BroadcastFn construct_path_pattern(int n);

/// 2k on both ends of the spine of F_k. k >= 1.
BroadcastFn construct_F_endpoints(int k);

/// 2k on v_0 and k on v_k of F_k. k >= 1.
BroadcastFn construct_F_cheap(int k);

/// 3 on the apex of the first coordinate of X_k, 2 on every other apex. k >= 0.
BroadcastFn construct_X(int k);

/// m+n on (x_1, y_1) and on (x_1, y_n) of the m-by-n grid. When n = 1 the two
/// corners coincide and the single value is m+1.
BroadcastFn construct_grid_corners(int m, int n);

/// Rewrites an optimal resolving broadcast of a path or cycle into one with
/// every value <= 1, the same cost, and a reached set that only grows.
///
/// Repeatedly takes the first vertex (in traversal order) with value x > 1.
/// An end vertex of a path with x = 2 drops to 1 and lifts its neighbor to at
/// least 1. Otherwise the vertex drops to x - 2 and the two vertices x - 1
/// steps away on either side are lifted to at least 1; on a cycle the steps
/// wrap around, on a path they are clamped to the ends.
///
/// Throws InvalidInput if g is not a path or cycle or f is not resolving, and
/// ContractViolation if cost(f) exceeds bdim(g).
BroadcastFn flatten_path_cycle(const Graph& g, const BroadcastFn& f);

/// Given a resolving broadcast f of g and an edge uv, returns f with both u
/// and v raised to b = max f. The result lives on g - uv (same vertex ids).
/// Throws InvalidInput when uv is not an edge or f does not resolve g.
BroadcastFn repair_after_edge_deletion(const Graph& g, const BroadcastFn& f, Vertex u,
                                       Vertex v);

/// Restricts a resolving broadcast of tree t to t - leaf (ids above the leaf
/// shift down by one). When the leaf is in the support its neighbor gets
/// max(f(leaf) - 1, f(neighbor), 1).
/// Throws InvalidInput when t is not a tree, leaf is not a leaf, or f does
/// not resolve t.
BroadcastFn prune_leaf(const Graph& t, const BroadcastFn& f, Vertex leaf);

}  // namespace bdim
