#include "bdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace bdim {

std::string to_string(DimensionKind kind) {
  switch (kind) {
    case DimensionKind::metric: return "dim";
    case DimensionKind::adjacency: return "adim";
    case DimensionKind::broadcast: return "bdim";
    case DimensionKind::full_reach: return "hat-bdim";
  }
  return "?";
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::budget_exceeded: return "budget-exceeded";
    case SolveStatus::timeout: return "timeout";
  }
  return "?";
}

DimensionKind parse_dimension_kind(const std::string& name) {
  if (name == "dim") return DimensionKind::metric;
  if (name == "adim") return DimensionKind::adjacency;
  if (name == "bdim") return DimensionKind::broadcast;
  if (name == "hat-bdim") return DimensionKind::full_reach;
  throw InvalidInput("unknown dimension kind '" + name + "' (dim, adim, bdim, hat-bdim)");
}

namespace {

using Word = std::uint64_t;
using Clock = std::chrono::steady_clock;
constexpr std::uint16_t kNever = 0xFFFF;

std::size_t words_for(std::size_t bits) { return std::max<std::size_t>(1, (bits + 63) / 64); }

bool intersects(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool empty(const Word* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i]) return false;
  return true;
}

void and_not(Word* out, const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & ~b[i];
}

void set_bit(Word* a, std::size_t bit) { a[bit >> 6] |= Word{1} << (bit & 63); }

// One way of putting a vertex into the support.
struct Option {
  int value = 0;
  int cost = 0;
  std::size_t delta = 0;  // offset of the pairs newly resolved relative to the previous option
  std::size_t mask = 0;   // offset of all pairs resolved by this option
  std::size_t reach_delta = 0;
  std::size_t reach = 0;
};

// Graph-dependent, order-independent data: which pairs each (vertex, value)
// separates and which vertices it reaches. Masks for one vertex are nested
// in the value, so each option stores the increment over its predecessor.
struct Tables {
  DimensionKind kind;
  int n = 0;
  std::size_t pairs = 0, words = 0, vwords = 0;
  bool track_reach = false;
  std::vector<int> cap;
  std::vector<std::uint16_t> pair_cost;   // n x pairs: cheapest option resolving the pair
  std::vector<std::uint16_t> reach_cost;  // n x n
  std::vector<std::vector<Option>> options;
  std::vector<Word> bits;   // pair masks
  std::vector<Word> vbits;  // reach masks
  std::vector<Word> all_pairs, all_vertices;

  Tables(const DistanceMatrix& d, DimensionKind k) : kind(k), n(d.order()) {
    pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    words = words_for(pairs);
    vwords = words_for(static_cast<std::size_t>(n));
    track_reach = kind == DimensionKind::full_reach;
    cap.resize(n);
    for (Vertex z = 0; z < n; ++z) cap[z] = std::max(1, d.eccentricity(z));

    // Smallest value at z separating each pair (kNever when equidistant).
    std::vector<std::uint16_t> need(static_cast<std::size_t>(n) * pairs, kNever);
    for (Vertex z = 0; z < n; ++z) {
      auto row = d.row(z);
      std::size_t q = 0;
      std::uint16_t* out = need.data() + static_cast<std::size_t>(z) * pairs;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y, ++q)
          if (row[x] != row[y])
            out[q] = static_cast<std::uint16_t>(std::max(1, std::min(row[x], row[y])));
    }

    pair_cost.assign(need.size(), kNever);
    for (Vertex z = 0; z < n; ++z) {
      const std::uint16_t* in = need.data() + static_cast<std::size_t>(z) * pairs;
      std::uint16_t* out = pair_cost.data() + static_cast<std::size_t>(z) * pairs;
      for (std::size_t q = 0; q < pairs; ++q) {
        if (in[q] == kNever) continue;
        switch (kind) {
          case DimensionKind::metric: out[q] = 1; break;
          case DimensionKind::adjacency: out[q] = in[q] <= 1 ? 1 : kNever; break;
          default: out[q] = in[q];
        }
      }
    }
    if (track_reach) {
      reach_cost.assign(static_cast<std::size_t>(n) * n, kNever);
      for (Vertex z = 0; z < n; ++z)
        for (Vertex v = 0; v < n; ++v)
          if (d(z, v) != DistanceMatrix::kUnreachable)
            reach_cost[static_cast<std::size_t>(z) * n + v] =
                static_cast<std::uint16_t>(std::max(1, d(z, v)));
    }

    auto alloc = [](std::vector<Word>& pool, std::size_t w) {
      std::size_t off = pool.size();
      pool.resize(off + w, 0);
      return off;
    };
    options.resize(n);
    for (Vertex z = 0; z < n; ++z) {
      std::vector<std::pair<int, int>> value_threshold;  // (value, separation threshold)
      switch (kind) {
        case DimensionKind::metric: value_threshold = {{1, cap[z]}}; break;
        case DimensionKind::adjacency: value_threshold = {{1, 1}}; break;
        default:
          for (int t = 1; t <= cap[z]; ++t) value_threshold.emplace_back(t, t);
      }
      int prev_threshold = 0;
      for (auto [value, threshold] : value_threshold) {
        Option opt;
        opt.value = value;
        opt.cost = value;
        opt.mask = alloc(bits, words);
        opt.delta = alloc(bits, words);
        const std::uint16_t* in = need.data() + static_cast<std::size_t>(z) * pairs;
        for (std::size_t q = 0; q < pairs; ++q) {
          if (in[q] == kNever || in[q] > threshold) continue;
          set_bit(&bits[opt.mask], q);
          if (in[q] > prev_threshold) set_bit(&bits[opt.delta], q);
        }
        if (track_reach) {
          opt.reach = alloc(vbits, vwords);
          opt.reach_delta = alloc(vbits, vwords);
          for (Vertex v = 0; v < n; ++v) {
            const int dv = d(z, v);
            if (dv == DistanceMatrix::kUnreachable || dv > threshold) continue;
            set_bit(&vbits[opt.reach], static_cast<std::size_t>(v));
            if (dv > prev_threshold || (prev_threshold == 0 && dv == 0))
              set_bit(&vbits[opt.reach_delta], static_cast<std::size_t>(v));
          }
        }
        prev_threshold = threshold;
        options[z].push_back(opt);
      }
    }
    all_pairs.assign(words, 0);
    for (std::size_t q = 0; q < pairs; ++q) set_bit(all_pairs.data(), q);
    all_vertices.assign(vwords, 0);
    if (track_reach)
      for (Vertex v = 0; v < n; ++v) set_bit(all_vertices.data(), static_cast<std::size_t>(v));
    if (vbits.empty()) vbits.assign(vwords, 0);
  }

  const Word* pair_bits(std::size_t off) const { return bits.data() + off; }
  const Word* reach_bits(std::size_t off) const { return vbits.data() + off; }
};

// Per vertex order: for each suffix of the order, the cheapest way any
// remaining vertex can still resolve each pair (or reach each vertex), cut
// into "infeasible with r budget left" bitsets for r = 0..budget.
struct OrderTables {
  const Tables* t;
  std::vector<Vertex> order;
  std::vector<long> spend_suffix;  // total of the largest option costs from pos on
  std::vector<std::uint16_t> pair_suffix, reach_suffix;
  long built_for = -1;
  std::vector<Word> bad, bad_reach;

  OrderTables(const Tables& tables, std::vector<Vertex> ord) : t(&tables), order(std::move(ord)) {
    const int n = t->n;
    const std::size_t P = t->pairs;
    pair_suffix.assign(static_cast<std::size_t>(n + 1) * P, kNever);
    spend_suffix.assign(n + 1, 0);
    for (int pos = n - 1; pos >= 0; --pos) {
      const Vertex z = order[pos];
      const std::uint16_t* own = t->pair_cost.data() + static_cast<std::size_t>(z) * P;
      const std::uint16_t* next = pair_suffix.data() + static_cast<std::size_t>(pos + 1) * P;
      std::uint16_t* here = pair_suffix.data() + static_cast<std::size_t>(pos) * P;
      for (std::size_t q = 0; q < P; ++q) here[q] = std::min(own[q], next[q]);
      spend_suffix[pos] = spend_suffix[pos + 1] + t->options[z].back().cost;
    }
    if (t->track_reach) {
      reach_suffix.assign(static_cast<std::size_t>(n + 1) * n, kNever);
      for (int pos = n - 1; pos >= 0; --pos) {
        const Vertex z = order[pos];
        for (Vertex v = 0; v < n; ++v) {
          reach_suffix[static_cast<std::size_t>(pos) * n + v] =
              std::min(t->reach_cost[static_cast<std::size_t>(z) * n + v],
                       reach_suffix[static_cast<std::size_t>(pos + 1) * n + v]);
        }
      }
    }
  }

  void build(long budget) {
    if (budget == built_for) return;
    built_for = budget;
    const int n = t->n;
    const std::size_t W = t->words, VW = t->vwords, R = static_cast<std::size_t>(budget + 1);
    bad.assign(static_cast<std::size_t>(n + 1) * R * W, 0);
    for (int pos = 0; pos <= n; ++pos) {
      const std::uint16_t* need = pair_suffix.data() + static_cast<std::size_t>(pos) * t->pairs;
      for (std::size_t q = 0; q < t->pairs; ++q) {
        const std::size_t upto = std::min<std::size_t>(need[q], R);
        for (std::size_t r = 0; r < upto; ++r) set_bit(bad_row(pos, static_cast<long>(r)), q);
      }
    }
    if (t->track_reach) {
      bad_reach.assign(static_cast<std::size_t>(n + 1) * R * VW, 0);
      for (int pos = 0; pos <= n; ++pos) {
        for (Vertex v = 0; v < n; ++v) {
          const std::size_t upto = std::min<std::size_t>(
              reach_suffix[static_cast<std::size_t>(pos) * n + v], R);
          for (std::size_t r = 0; r < upto; ++r)
            set_bit(bad_reach_row(pos, static_cast<long>(r)), static_cast<std::size_t>(v));
        }
      }
    }
  }

  Word* bad_row(int pos, long r) {
    return bad.data() + (static_cast<std::size_t>(pos) * (built_for + 1) + r) * t->words;
  }
  const Word* bad_row(int pos, long r) const {
    return bad.data() + (static_cast<std::size_t>(pos) * (built_for + 1) + r) * t->words;
  }
  Word* bad_reach_row(int pos, long r) {
    return bad_reach.data() + (static_cast<std::size_t>(pos) * (built_for + 1) + r) * t->vwords;
  }
  const Word* bad_reach_row(int pos, long r) const {
    return bad_reach.data() + (static_cast<std::size_t>(pos) * (built_for + 1) + r) * t->vwords;
  }
};

struct Control {
  Clock::time_point deadline = Clock::time_point::max();
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
};

enum class Mode {
  first_descending,  // heuristic: larger values first
  first_ascending,   // natural order, smaller values first: lexicographically least
  enumerate,         // every solution of exactly the budget
};

// A partial assignment: positions [0, pos) of the order are decided.
struct Node {
  int pos = 0;
  long remaining = 0;
  std::vector<Word> unresolved, unreached;
  std::vector<int> values;  // by vertex
};

class Dfs {
 public:
  using Sink = std::function<bool(const std::vector<int>&)>;  // false stops

  Dfs(const OrderTables& ot, Mode mode, Control& ctl, Sink sink)
      : ot_(ot), t_(*ot.t), mode_(mode), ctl_(ctl), sink_(std::move(sink)) {
    const std::size_t depth = static_cast<std::size_t>(t_.n) + 1;
    unres_.assign(depth * t_.words, 0);
    unreach_.assign(depth * t_.vwords, 0);
  }

  // Returns true when the sink asked to stop (a solution in the first-* modes).
  bool run(const Node& start) {
    std::copy(start.unresolved.begin(), start.unresolved.end(), row(start.pos));
    std::copy(start.unreached.begin(), start.unreached.end(), rrow(start.pos));
    values_ = start.values;
    return visit(start.pos, start.remaining);
  }

  // Children of `node` that survive pruning, in search order. Returns true
  // (leaving `out` partial) if the node itself is a solution.
  bool expand(const Node& node, std::vector<Node>& out) {
    std::copy(node.unresolved.begin(), node.unresolved.end(), row(node.pos));
    std::copy(node.unreached.begin(), node.unreached.end(), rrow(node.pos));
    values_ = node.values;
    ++nodes_;
    if (solved(node.pos)) return true;
    if (pruned(node.pos, node.remaining)) return false;
    for_each_child(node.pos, node.remaining, [&](int value, int cost) {
      Node child;
      child.pos = node.pos + 1;
      child.remaining = node.remaining - cost;
      child.unresolved.assign(row(node.pos + 1), row(node.pos + 1) + t_.words);
      child.unreached.assign(rrow(node.pos + 1), rrow(node.pos + 1) + t_.vwords);
      child.values = values_;
      child.values[ot_.order[node.pos]] = value;
      out.push_back(std::move(child));
      return false;
    });
    return false;
  }

  long long nodes() const { return nodes_; }

 private:
  Word* row(int pos) { return unres_.data() + static_cast<std::size_t>(pos) * t_.words; }
  Word* rrow(int pos) { return unreach_.data() + static_cast<std::size_t>(pos) * t_.vwords; }

  bool solved(int pos) {
    return empty(row(pos), t_.words) && (!t_.track_reach || empty(rrow(pos), t_.vwords));
  }

  bool pruned(int pos, long remaining) {
    if (intersects(row(pos), ot_.bad_row(pos, remaining), t_.words)) return true;
    if (t_.track_reach && intersects(rrow(pos), ot_.bad_reach_row(pos, remaining), t_.vwords))
      return true;
    return mode_ == Mode::enumerate && remaining > ot_.spend_suffix[pos];
  }

  // Calls fn(value, cost) for each child after writing its state into row
  // pos+1; stops early when fn returns true. Value 0 is included.
  template <class Fn>
  bool for_each_child(int pos, long remaining, Fn&& fn) {
    const Vertex z = ot_.order[pos];
    const auto& opts = t_.options[z];
    const Word* U = row(pos);
    const Word* R = rrow(pos);
    auto take = [&](const Option& o) {
      and_not(row(pos + 1), U, t_.pair_bits(o.mask), t_.words);
      if (t_.track_reach) and_not(rrow(pos + 1), R, t_.reach_bits(o.reach), t_.vwords);
      return fn(o.value, o.cost);
    };
    auto useful = [&](const Option& o) {
      if (mode_ == Mode::enumerate) return true;
      // Same child state as the next smaller value at a higher cost.
      return intersects(U, t_.pair_bits(o.delta), t_.words) ||
             (t_.track_reach && intersects(R, t_.reach_bits(o.reach_delta), t_.vwords));
    };
    auto skip = [&] {
      std::copy(U, U + t_.words, row(pos + 1));
      std::copy(R, R + t_.vwords, rrow(pos + 1));
      return fn(0, 0);
    };
    if (mode_ == Mode::first_descending) {
      for (auto it = opts.rbegin(); it != opts.rend(); ++it)
        if (it->cost <= remaining && useful(*it) && take(*it)) return true;
      return skip();
    }
    if (skip()) return true;
    for (const Option& o : opts) {
      if (o.cost > remaining) break;
      if (useful(o) && take(o)) return true;
    }
    return false;
  }

  bool visit(int pos, long remaining) {
    if ((++nodes_ & 1023) == 0 && Clock::now() >= ctl_.deadline) {
      ctl_.timed_out = true;
      ctl_.stop = true;
    }
    if (ctl_.stop.load(std::memory_order_relaxed)) return true;
    const bool done = solved(pos);
    if (done && (mode_ != Mode::enumerate || remaining == 0)) {
      std::vector<int> out = values_;
      for (int p = pos; p < t_.n; ++p) out[ot_.order[p]] = 0;
      return !sink_(out);
    }
    if (pos == t_.n || pruned(pos, remaining)) return false;
    const Vertex z = ot_.order[pos];
    const bool stop = for_each_child(pos, remaining, [&](int value, int cost) {
      values_[z] = value;
      return visit(pos + 1, remaining - cost);
    });
    values_[z] = 0;
    return stop;
  }

  const OrderTables& ot_;
  const Tables& t_;
  Mode mode_;
  Control& ctl_;
  Sink sink_;
  std::vector<Word> unres_, unreach_;
  std::vector<int> values_;
  long long nodes_ = 0;
};

Node root(const Tables& t, long budget) {
  Node r;
  r.remaining = budget;
  r.unresolved = t.all_pairs;
  r.unreached = t.all_vertices;
  r.values.assign(t.n, 0);
  return r;
}

struct Feasibility {
  bool found = false;
  std::vector<int> values;
  long long nodes = 0;
};

// Is there an assignment of total cost <= budget? Heuristic order; fans the
// top of the tree out over worker threads.
Feasibility feasible(OrderTables& ot, long budget, int threads, Control& ctl, Mode mode) {
  ot.build(budget);
  Feasibility res;
  std::mutex mu;
  auto sink = [&](const std::vector<int>& v) {
    std::lock_guard lock(mu);
    if (!res.found) {
      res.found = true;
      res.values = v;
    }
    return false;
  };

  if (threads <= 1) {
    Dfs dfs(ot, mode, ctl, sink);
    dfs.run(root(*ot.t, budget));
    res.nodes = dfs.nodes();
    return res;
  }

  // Breadth-first split until there is enough work to share.
  std::vector<Node> frontier{root(*ot.t, budget)};
  Dfs splitter(ot, mode, ctl, sink);
  const std::size_t want = static_cast<std::size_t>(threads) * 8;
  for (int depth = 0; depth < 3 && !frontier.empty() && frontier.size() < want; ++depth) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      if (node.pos == ot.t->n) {
        next.push_back(node);
        continue;
      }
      if (splitter.expand(node, next)) {
        std::vector<int> v = node.values;
        for (int p = node.pos; p < ot.t->n; ++p) v[ot.order[p]] = 0;
        sink(v);
        res.nodes = splitter.nodes();
        return res;
      }
    }
    frontier = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<long long> nodes{splitter.nodes()};
  auto worker = [&] {
    Dfs dfs(ot, mode, ctl, [&](const std::vector<int>& v) {
      sink(v);
      ctl.stop = true;
      return false;
    });
    for (std::size_t i; (i = cursor++) < frontier.size() && !ctl.stop;) dfs.run(frontier[i]);
    nodes += dfs.nodes();
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  res.nodes = nodes;
  // The stop flag doubles as the "solution found" signal here.
  if (!ctl.timed_out) ctl.stop = false;
  return res;
}

std::vector<Vertex> natural_order(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order = natural_order(g.order());
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

long lower_bound_twin(const Graph& g) {
  long lb = 0;
  for (const auto& cls : twin_classes(g)) lb += static_cast<long>(cls.size()) - 1;
  for (const auto& cls : false_twin_classes(g)) lb += static_cast<long>(cls.size()) - 1;
  return lb;
}

SolveResult solve(const Graph& g, DimensionKind kind, const SolveLimits& limits) {
  const auto start = Clock::now();
  const int n = g.order();
  SolveResult result;
  result.kind = kind;
  result.certificate = BroadcastFn(n);

  Control ctl;
  if (limits.time_limit.count() > 0) ctl.deadline = start + limits.time_limit;

  const DistanceMatrix d = all_pairs_distances(g);
  const Tables tables(d, kind);
  OrderTables heuristic(tables, degree_order(g));

  const bool needs_support = n >= 2 || (kind == DimensionKind::full_reach && n >= 1);
  const long lb = std::max(lower_bound_twin(g), needs_support ? 1L : 0L);
  const long budget = limits.budget.value_or(n);
  auto finish = [&] {
    result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
  };

  for (long c = lb; c <= budget; ++c) {
    Feasibility f = feasible(heuristic, c, limits.threads, ctl, Mode::first_descending);
    result.nodes_explored += f.nodes;
    if (ctl.timed_out) {
      result.status = SolveStatus::timeout;
      result.value = result.lower_bound = c;
      return finish();
    }
    if (!f.found) continue;

    // Canonical certificate: lexicographically least value vector of cost c.
    OrderTables canonical(tables, natural_order(n));
    Feasibility lex = feasible(canonical, c, 1, ctl, Mode::first_ascending);
    result.nodes_explored += lex.nodes;
    result.status = SolveStatus::optimal;
    result.value = result.lower_bound = c;
    result.certificate = BroadcastFn(lex.found && !ctl.timed_out ? lex.values : f.values);
    return finish();
  }
  result.status = SolveStatus::budget_exceeded;
  result.value = result.lower_bound = std::max(lb, budget + 1);
  return finish();
}

SolveResult solve_dim(const Graph& g, const SolveLimits& limits) {
  return solve(g, DimensionKind::metric, limits);
}
SolveResult solve_adim(const Graph& g, const SolveLimits& limits) {
  return solve(g, DimensionKind::adjacency, limits);
}
SolveResult solve_bdim(const Graph& g, const SolveLimits& limits) {
  return solve(g, DimensionKind::broadcast, limits);
}
SolveResult solve_hat_bdim(const Graph& g, const SolveLimits& limits) {
  return solve(g, DimensionKind::full_reach, limits);
}

Verdict verify_certificate(const DistanceMatrix& d, DimensionKind kind,
                           const BroadcastFn& certificate) {
  const std::vector<Vertex> supp = certificate.support();
  switch (kind) {
    case DimensionKind::metric: return is_resolving_set(d, supp);
    case DimensionKind::adjacency: return is_adjacency_resolving_set(d, supp);
    case DimensionKind::broadcast: return is_resolving_broadcast(d, certificate);
    case DimensionKind::full_reach: {
      Verdict v = is_resolving_broadcast(d, certificate);
      if (!v.ok()) return v;
      const std::vector<Vertex> reached = reached_set(d, certificate);
      for (Vertex u = 0; u < d.order(); ++u)
        if (!std::binary_search(reached.begin(), reached.end(), u)) return Verdict{{}, u};
      return v;
    }
  }
  return Verdict{};
}

BroadcastEnumeration enumerate_optimal_broadcasts(const Graph& g, long cost, std::size_t cap) {
  BroadcastEnumeration out;
  if (cost < 0) return out;
  const DistanceMatrix d = all_pairs_distances(g);
  const Tables tables(d, DimensionKind::broadcast);
  OrderTables ot(tables, natural_order(g.order()));
  ot.build(cost);
  Control ctl;
  Dfs dfs(ot, Mode::enumerate, ctl, [&](const std::vector<int>& v) {
    if (out.broadcasts.size() == cap) {
      out.overflow = true;
      return false;
    }
    out.broadcasts.emplace_back(v);
    return true;
  });
  dfs.run(root(tables, cost));
  return out;
}

long formula_path_cycle(int n, PathCycleFormula which) {
  switch (which) {
    case PathCycleFormula::dim_path:
      if (n < 1) throw InvalidInput("dim(P_n) formula needs n >= 1");
      return n == 1 ? 0 : 1;
    case PathCycleFormula::dim_cycle:
      if (n < 3) throw InvalidInput("dim(C_n) formula needs n >= 3");
      return 2;
    case PathCycleFormula::bdim:
    case PathCycleFormula::adim:
      if (n < 4) throw InvalidInput("path/cycle formula needs n >= 4");
      return (2L * n + 2) / 5;
    case PathCycleFormula::hat_bdim:
      if (n < 4) throw InvalidInput("path/cycle formula needs n >= 4");
      return (2L * n + 3) / 5;
  }
  throw InvalidInput("unknown formula");
}

}  // namespace bdim
