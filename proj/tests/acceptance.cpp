// Acceptance suite: one PASS/FAIL line per criterion. Expected values come
// from closed forms or from oracles written here; limits are pinned below.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownFailures, and each of those still fails in the documented way.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bdim/constructions.hpp"
#include "bdim/families.hpp"
#include "bdim/solver.hpp"
#include "test_support.hpp"

using namespace bdim;
namespace bt = bdim::testing;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock ceilings, seconds.
constexpr double kFormulaSeconds = 300;
constexpr double kEnumerationSeconds = 120;
constexpr double kConstructionSeconds = 60;
constexpr double kExhaustiveSeconds = 1800;

constexpr int kTreesPerOrder = 500;
constexpr int kGeometryInstances = 10000;
constexpr int kGeometryMinOverlapping = 1000;  // instances where b and v share a vertex

// The stated full-reach closed form floor((2n+3)/5) is one short at
// n = 3 (mod 5); criterion 2 is expected to fail at exactly these orders.
const std::set<int> kKnownFailures = {2};
const std::vector<int> kFullReachFormulaMisses = {8, 13};

struct Report {
  int id;
  bool pass;
  std::string title;
  std::string detail;
};

std::vector<Report> reports;
// Known failures that failed differently from the documented way.
std::set<int> unexpected_pattern;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

void record(int id, bool pass, std::string title, std::string detail) {
  std::printf("[%s] criterion %2d  %s  (%s)\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  reports.push_back({id, pass, std::move(title), std::move(detail)});
}

bool resolves(const Graph& g, const BroadcastFn& f) {
  return is_resolving_broadcast(all_pairs_distances(g), f).ok();
}

long path_cycle_formula(int n) { return (2L * n + 2) / 5; }

// Every connected labeled graph on at most 6 vertices, keyed by (n, mask).
struct Corpus {
  struct Entry {
    int n;
    std::uint32_t mask;
    Graph g;
  };
  std::vector<Entry> graphs;
};

Corpus build_corpus() {
  Corpus c;
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t masks = 1u << bt::pair_count(n);
    for (std::uint32_t m = 0; m < masks; ++m) {
      Graph g = bt::graph_from_mask(n, m);
      if (is_connected(g)) c.graphs.push_back({n, m, std::move(g)});
    }
  }
  return c;
}

int mask_bit(int n, Vertex u, Vertex v) {
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++bit)
      if (a == u && b == v) return bit;
  return -1;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  const auto t0 = Clock::now();
  int rows = 0, bad = 0;
  std::string first_bad;
  for (int n = 4; n <= 14; ++n) {
    for (const Graph& g : {path_graph(n), cycle_graph(n)}) {
      for (auto kind : {DimensionKind::broadcast, DimensionKind::adjacency}) {
        const SolveResult r = solve(g, kind);
        ++rows;
        if (!r.optimal() || r.value != path_cycle_formula(n)) {
          if (bad++ == 0)
            first_bad = "n=" + std::to_string(n) + " " + to_string(kind) + " got " +
                        std::to_string(r.value);
        }
      }
    }
  }
  const double s = seconds_since(t0);
  record(1, bad == 0 && s < kFormulaSeconds, "bdim and adim of P_n, C_n equal floor((2n+2)/5), 4<=n<=14",
         std::to_string(rows) + " rows, " + std::to_string(bad) + " mismatches" +
             (bad ? ", first " + first_bad : "") + ", " + fmt_seconds(s));
}

void criterion_2() {
  const auto t0 = Clock::now();
  std::vector<int> formula_miss;
  std::vector<int> gap_miss;
  int union_miss = 0, rows = 0;
  for (int n = 4; n <= 14; ++n) {
    for (const Graph& g : {path_graph(n), cycle_graph(n)}) {
      ++rows;
      const long hat = solve_hat_bdim(g).value;
      const long bdim = solve_bdim(g).value;
      const long stated = (2L * n + 3) / 5;
      if (hat != stated) formula_miss.push_back(n);
      const long expected_gap = n % 5 == 1 ? 1 : 0;
      if (hat - bdim != expected_gap) gap_miss.push_back(n);
      if (hat != solve_bdim(plus_isolated(g)).value) ++union_miss;
    }
  }
  auto list = [](const std::vector<int>& v) {
    std::set<int> uniq(v.begin(), v.end());
    std::string s;
    for (int n : uniq) s += (s.empty() ? "" : ",") + std::to_string(n);
    return s.empty() ? std::string("none") : s;
  };
  const bool pass = formula_miss.empty() && gap_miss.empty() && union_miss == 0;
  std::set<int> fm(formula_miss.begin(), formula_miss.end());
  const bool documented = !pass && union_miss == 0 &&
                          fm == std::set<int>(kFullReachFormulaMisses.begin(),
                                              kFullReachFormulaMisses.end()) &&
                          std::set<int>(gap_miss.begin(), gap_miss.end()) == fm;
  record(2, pass, "hat-bdim of P_n, C_n equals floor((2n+3)/5), gap only at n=1 mod 5, equals bdim(G+K_1)",
         std::to_string(rows) + " rows; formula misses at n=" + list(formula_miss) +
             "; gap misses at n=" + list(gap_miss) + "; union mismatches " +
             std::to_string(union_miss) +
             (documented ? "; measured hat-bdim = floor((2n+4)/5) at every n, stated form is one short "
                           "when n = 3 mod 5"
                         : "") +
             ", " + fmt_seconds(seconds_since(t0)));
  if (!pass && !documented) {
    reports.back().detail += "; UNEXPECTED failure pattern";
    unexpected_pattern.insert(2);
  }
}

void criterion_3() {
  const auto t0 = Clock::now();
  std::size_t total = 0;
  int bad = 0, overflow = 0, with_two = 0;
  for (int n = 4; n <= 12; ++n) {
    for (const Graph& g : {path_graph(n), cycle_graph(n)}) {
      const long opt = solve_bdim(g).value;
      const BroadcastEnumeration e = enumerate_optimal_broadcasts(g, opt);
      overflow += e.overflow;
      total += e.broadcasts.size();
      const DistanceMatrix d = all_pairs_distances(g);
      for (const auto& f : e.broadcasts) {
        if (f.max_value() > 2 || f.cost() != opt || !is_resolving_broadcast(d, f).ok()) ++bad;
        with_two += f.max_value() == 2;
      }
    }
  }
  const double s = seconds_since(t0);
  record(3, bad == 0 && overflow == 0 && s < kEnumerationSeconds,
         "every optimal broadcast of P_n, C_n (4<=n<=12) has max value <= 2",
         std::to_string(total) + " optimal broadcasts, " + std::to_string(with_two) +
             " use a 2, " + std::to_string(bad) + " violations, " + std::to_string(overflow) +
             " overflows, " + fmt_seconds(s));
}

void criterion_4() {
  const auto t0 = Clock::now();
  int checked = 0, bad = 0;
  std::string first_bad;
  auto check = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad++ == 0) first_bad = what;
  };
  for (int n = 4; n <= 60; ++n) {
    const BroadcastFn f = construct_path_pattern(n);
    check(f.cost() == path_cycle_formula(n) && resolves(path_graph(n), f) &&
              resolves(cycle_graph(n), f),
          "pattern n=" + std::to_string(n));
  }
  for (int k = 1; k <= 8; ++k) {
    const Graph g = f_graph(k);
    const BroadcastFn wide = construct_F_endpoints(k);
    const BroadcastFn cheap = construct_F_cheap(k);
    check(wide.cost() == 4 * k && resolves(g, wide), "F endpoints k=" + std::to_string(k));
    check(cheap.cost() == 3 * k && resolves(g, cheap), "F cheap k=" + std::to_string(k));
  }
  for (int k = 0; k <= 4; ++k) {
    const BroadcastFn f = construct_X(k);
    check(f.cost() == 3 + 2 * k && resolves(x_graph(k), f), "X k=" + std::to_string(k));
  }
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      const BroadcastFn f = construct_grid_corners(m, n);
      // With one column both corners are the same vertex.
      const bool cost_ok = n >= 2 ? f.cost() == 2 * m + 2 * n : f.cost() <= 2 * m + 2 * n;
      check(cost_ok && resolves(grid_graph(m, n), f),
            "grid " + std::to_string(m) + "x" + std::to_string(n));
    }
  const double s = seconds_since(t0);
  record(4, bad == 0 && s < kConstructionSeconds,
         "constructions resolve their host graphs at the stated costs",
         std::to_string(checked) + " constructions, " + std::to_string(bad) + " failures" +
             (bad ? ", first " + first_bad : "") + ", " + fmt_seconds(s));
}

struct CorpusValues {
  std::vector<long> dim, bdim, adim;
  std::unordered_map<std::uint64_t, long> bdim_by_key;
};

std::uint64_t key(int n, std::uint32_t mask) { return (std::uint64_t(n) << 32) | mask; }

void criterion_5(const Corpus& c, CorpusValues& v) {
  const auto t0 = Clock::now();
  int chain_bad = 0, collapse_bad = 0, diam2 = 0;
  for (const auto& e : c.graphs) {
    const long dim = solve_dim(e.g).value;
    const long bdim = solve_bdim(e.g).value;
    const long adim = solve_adim(e.g).value;
    v.dim.push_back(dim);
    v.bdim.push_back(bdim);
    v.adim.push_back(adim);
    v.bdim_by_key[key(e.n, e.mask)] = bdim;
    if (!(dim <= bdim && bdim <= adim)) ++chain_bad;
    if (all_pairs_distances(e.g).diameter() <= 2) {
      ++diam2;
      if (!(dim == bdim && bdim == adim)) ++collapse_bad;
    }
  }
  const double s = seconds_since(t0);
  record(5, chain_bad == 0 && collapse_bad == 0 && s < kExhaustiveSeconds,
         "dim <= bdim <= adim on all connected graphs n<=6, equality when diam<=2",
         std::to_string(c.graphs.size()) + " graphs, " + std::to_string(diam2) +
             " of diameter <= 2, " + std::to_string(chain_bad) + " chain and " +
             std::to_string(collapse_bad) + " collapse violations, " + fmt_seconds(s));
}

void criterion_6(const Corpus& c, const CorpusValues& v) {
  const auto t0 = Clock::now();
  long long tried = 0;
  int resolving_avoiders = 0, pairs = 0, bound_bad = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const Graph& g = c.graphs[i].g;
    const int n = g.order();
    const long lb = lower_bound_twin(g);
    if (v.dim[i] < lb || v.bdim[i] < lb || v.adim[i] < lb) ++bound_bad;

    std::vector<Edge> twins = twin_pairs(g);
    for (const auto& cls : false_twin_classes(g))
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) twins.emplace_back(cls[a], cls[b]);
    if (twins.empty()) continue;
    const DistanceMatrix d = all_pairs_distances(g);
    // Values at or above the diameter all truncate the same way, so values
    // 0..diam cover every broadcast up to equivalence.
    const int top = std::max(1, d.diameter());
    for (auto [x, y] : twins) {
      ++pairs;
      std::vector<int> vals(n, 0);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
          ++tried;
          if (is_resolving_broadcast(d, BroadcastFn(vals)).ok()) ++resolving_avoiders;
          return;
        }
        const int hi = (pos == x || pos == y) ? 0 : top;
        for (int t = 0; t <= hi; ++t) {
          vals[pos] = t;
          rec(pos + 1);
        }
        vals[pos] = 0;
      };
      rec(0);
    }
  }
  const double s = seconds_since(t0);
  record(6, resolving_avoiders == 0 && bound_bad == 0 && s < kExhaustiveSeconds,
         "broadcasts avoiding a twin pair never resolve; optima respect the twin bound",
         std::to_string(pairs) + " twin pairs, " + std::to_string(tried) +
             " avoiding broadcasts checked, " + std::to_string(resolving_avoiders) +
             " resolve, " + std::to_string(bound_bad) + " bound violations, " + fmt_seconds(s));
}

long ceil_sqrt_n_over_6(int n) {
  long b = 0;
  while (6 * b * b < n) ++b;
  return b;
}

void criterion_7() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240607);
  int trees = 0, bound_bad = 0, mono_bad = 0, prune_bad = 0, leaves_checked = 0;
  for (int n = 5; n <= 12; ++n) {
    for (int i = 0; i < kTreesPerOrder; ++i) {
      const Graph t = random_tree(n, rng());
      ++trees;
      const SolveResult r = solve_bdim(t);
      const long dim = solve_dim(t).value;
      const long adim = solve_adim(t).value;
      if (r.value < ceil_sqrt_n_over_6(n) || adim < ceil_sqrt_n_over_6(n)) ++bound_bad;
      for (Vertex leaf : leaves(t)) {
        ++leaves_checked;
        const Graph smaller = delete_vertex(t, leaf);
        if (solve_bdim(smaller).value > r.value || solve_dim(smaller).value > dim ||
            solve_adim(smaller).value > adim)
          ++mono_bad;
        const BroadcastFn g = prune_leaf(t, r.certificate, leaf);
        if (g.cost() > r.value || !resolves(smaller, g)) ++prune_bad;
      }
    }
  }
  record(7, bound_bad == 0 && mono_bad == 0 && prune_bad == 0,
         "random trees n=5..12: bdim >= ceil(sqrt(n/6)) and leaf deletion never raises bdim",
         std::to_string(trees) + " trees, " + std::to_string(leaves_checked) + " leaves, " +
             std::to_string(bound_bad) + " bound, " + std::to_string(mono_bad) +
             " monotonicity, " + std::to_string(prune_bad) + " pruning violations, " +
             fmt_seconds(seconds_since(t0)));
}

void criterion_8(const Corpus& c, const CorpusValues& v) {
  const auto t0 = Clock::now();
  int edges = 0, ratio_bad = 0, repair_bad = 0, missing = 0;
  double worst = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const auto& e = c.graphs[i];
    if (e.n < 3) continue;
    const SolveResult base = solve_bdim(e.g);
    for (auto [x, y] : e.g.edges()) {
      if (is_bridge(e.g, x, y)) continue;
      ++edges;
      const std::uint32_t cut_mask = e.mask & ~(1u << mask_bit(e.n, x, y));
      const auto it = v.bdim_by_key.find(key(e.n, cut_mask));
      if (it == v.bdim_by_key.end()) {
        ++missing;
        continue;
      }
      const long after = it->second;
      worst = std::max(worst, static_cast<double>(after) / base.value);
      if (after > 3 * base.value) ++ratio_bad;
      const Graph cut = delete_edge(e.g, x, y);
      const BroadcastFn repaired = repair_after_edge_deletion(e.g, base.certificate, x, y);
      if (!resolves(cut, repaired) || repaired.cost() > 3 * base.certificate.cost()) ++repair_bad;
    }
  }
  char w[32];
  std::snprintf(w, sizeof w, "%.3f", worst);
  record(8, ratio_bad == 0 && repair_bad == 0 && missing == 0 && edges > 0,
         "non-bridge edge deletion on graphs n<=6: bdim(G-e) <= 3 bdim(G), repair verifies",
         std::to_string(edges) + " edges, worst ratio " + w + ", " + std::to_string(ratio_bad) +
             " ratio and " + std::to_string(repair_bad) + " repair violations, " +
             fmt_seconds(seconds_since(t0)));
}

void criterion_9() {
  const auto t0 = Clock::now();
  int inputs = 0, bad = 0;
  for (int n = 2; n <= 12; ++n) {
    std::vector<Graph> hosts{path_graph(n)};
    if (n >= 3) hosts.push_back(cycle_graph(n));
    for (const Graph& g : hosts) {
      const long opt = solve_bdim(g).value;
      const DistanceMatrix d = all_pairs_distances(g);
      for (const auto& f : enumerate_optimal_broadcasts(g, opt).broadcasts) {
        if (f.max_value() < 2) continue;
        ++inputs;
        const BroadcastFn out = flatten_path_cycle(g, f);
        const auto before = reached_set(d, f);
        const auto after = reached_set(d, out);
        const bool ok = out.max_value() <= 1 && out.cost() == opt &&
                        std::includes(after.begin(), after.end(), before.begin(), before.end()) &&
                        is_resolving_broadcast(d, out).ok();
        if (!ok) ++bad;
      }
    }
  }
  record(9, bad == 0 && inputs > 0,
         "flattening every optimal broadcast with a value >= 2 on P_n, C_n (n<=12)",
         std::to_string(inputs) + " inputs, " + std::to_string(bad) + " failures, " +
             fmt_seconds(seconds_since(t0)));
}

void criterion_10() {
  const auto t0 = Clock::now();
  std::ostringstream detail;
  bool ok = true;

  const long adim_x1 = solve_adim(x_graph(1)).value;
  const long adim_x2 = solve_adim(x_graph(2)).value;
  ok = ok && adim_x1 >= 2 && adim_x2 >= 4;
  detail << "adim(X_1)=" << adim_x1 << " adim(X_2)=" << adim_x2;

  for (int k = 0; k <= 2; ++k) {
    const long b = solve_bdim(x_graph(k)).value;
    ok = ok && b <= 3 + 2 * k;
    detail << " bdim(X_" << k << ")=" << b;
  }
  for (int k = 0; k <= 4; ++k)
    ok = ok && construct_X(k).cost() == 3 + 2 * k && resolves(x_graph(k), construct_X(k));

  long prev = -1;
  detail << "; F_k adim";
  for (int k = 1; k <= 4; ++k) {
    const long a = solve_adim(f_graph(k)).value;
    const long b = solve_bdim(f_graph(k)).value;
    ok = ok && a > prev && b <= 3 * k && resolves(f_graph(k), construct_F_cheap(k));
    detail << (k == 1 ? " " : ",") << a << " (bdim " << b << ")";
    prev = a;
  }
  detail << ", " << fmt_seconds(seconds_since(t0));
  record(10, ok, "small-k X_k and F_k separations", detail.str());
}

void criterion_11() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4242);
  int violations = 0, overlapping = 0, library_disagree = 0;
  for (int i = 0; i < kGeometryInstances; ++i) {
    const auto c = bt::sample_reach_geometry(
        rng, [](int n, unsigned long long s) { return random_tree(n, s); });
    overlapping += c.overlap;
    if (!c.holds) ++violations;
    // Same check through the library's reach predicate.
    const DistanceMatrix d = all_pairs_distances(c.tree);
    const BroadcastFn f(c.f);
    bool lib_holds = true;
    for (Vertex w = 0; w < c.tree.order(); ++w)
      if (reaches(d, f, c.b, w) && reaches(d, f, c.v, w) && !reaches(d, f, c.a, w))
        lib_holds = false;
    if (lib_holds != c.holds) ++library_disagree;
  }
  record(11, violations == 0 && library_disagree == 0 && overlapping >= kGeometryMinOverlapping,
         "tree reach geometry: vertices reached by b and v are reached by a",
         std::to_string(kGeometryInstances) + " instances, " + std::to_string(overlapping) +
             " with a common vertex, " + std::to_string(violations) + " violations, " +
             fmt_seconds(seconds_since(t0)));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  const Corpus corpus = build_corpus();
  CorpusValues values;
  criterion_5(corpus, values);
  criterion_6(corpus, values);
  criterion_7();
  criterion_8(corpus, values);
  criterion_9();
  criterion_10();
  criterion_11();

  int passed = 0, unexpected = 0;
  for (const auto& r : reports) {
    const int id = r.id;
    if (r.pass) {
      ++passed;
      if (kKnownFailures.count(id)) {
        std::printf("note: criterion %d was expected to fail and passed\n", id);
        ++unexpected;
      }
    } else if (!kKnownFailures.count(id) || unexpected_pattern.count(id)) {
      ++unexpected;
    }
  }
  std::printf("%d/%zu criteria pass; %zu known failure(s); %d unexpected; total %s\n", passed,
              reports.size(), kKnownFailures.size(), unexpected,
              fmt_seconds(seconds_since(t0)).c_str());
  return unexpected == 0 ? 0 : 1;
}
