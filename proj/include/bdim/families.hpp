#pragma once

#include <span>
#include <string>
#include <vector>

#include "bdim/graph.hpp"

namespace bdim {

// Canonical vertex numbering of every generator is part of its contract;
// certificates written against these graphs depend on it.

/// v_0 .. v_{n-1} in traversal order.
Graph path_graph(int n);
/// v_0 .. v_{n-1} in traversal order, n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);

struct SpiderLegs {
  int length;  // vertices per leg
  int count;
};
/// Center 0, then each leg from the center outwards, legs in argument order.
Graph spider_graph(std::span<const SpiderLegs> legs);

/// Spine v_0..v_k (ids 0..k), then for i = 1..k a pendant path of i vertices
/// hanging off v_i, listed outward from the spine.
Graph f_graph(int k);

/// 3^(k+1) product vertices, coordinate tuples (c_1, ..., c_{k+1}) in
/// lexicographic order with c_1 most significant (a=0, b=1, c=2); c_1 ranges
/// over the path a-b-c, the other coordinates over the graph {a,b,c} with the
/// single edge ab. Then the apexes s_1..s_{k+1}: s_j is adjacent to every
/// product vertex whose j-th coordinate is a.
Graph x_graph(int k);
int x_product_vertex(int k, std::span<const int> coords);
int x_apex(int k, int j);  // j in 1..k+1

/// P_m box P_n, vertex (i, j) at i*n + j.
Graph grid_graph(int m, int n);

/// Layout of the edge-deletion family H_k (k >= 2).
struct HLayout {
  int k = 0;
  int spine_last = 0;  // 3k-2; spine vertex v_j has id j
  int cut = 0;         // i = floor((3k-2)/2); the distinguished edge is v_i v_{i+1}
  int cycle_length = 0;
  int order = 0;
};
HLayout h_layout(int k);

/// Spine v_0..v_{3k-2}; pendant paths P_j at v_j for 1 <= j <= i-1 and
/// P_{3k-2-j} at v_j for i+2 <= j <= 3k-3; a cycle through the edge v_i v_{i+1}
/// closed by a path of new vertices; spiders SP(3k^(6k)) centered at v_0 and
/// at v_{3k-2}. Ids: spine, pendant paths in spine order, cycle vertices,
/// spider at v_0, spider at v_{3k-2}.
Graph h_graph(int k);

Graph plus_isolated(const Graph& g);

enum class Family {
  path,
  cycle,
  complete,
  spider,
  f,
  x,
  grid,
  h,
  product,
  disjoint_union,
  plus_isolated,
};

/// Parameterized description of a family member. Composite families
/// (product, disjoint_union, plus_isolated) carry their operands.
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;
  std::vector<SpiderLegs> legs;
  std::vector<FamilySpec> operands;

  std::string describe() const;
};

/// Throws InvalidInput when parameters are out of the family's range.
Graph generate(const FamilySpec& spec);

/// Parses whitespace-separated tokens, e.g. "path 10", "F 3", "grid 3 4",
/// "spider 3x6 1x2", "product path 2 cycle 3", "union path 3 path 2",
/// "plus-isolated cycle 5". Throws InvalidInput on malformed input.
FamilySpec parse_family(std::span<const std::string> tokens);
FamilySpec parse_family(const std::string& text);

}  // namespace bdim
