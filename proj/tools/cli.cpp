#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bdim/constructions.hpp"
#include "bdim/graph_io.hpp"

namespace bdim::cli {

using nlohmann::json;

void to_json(json& j, const RunRecord& r) {
  j = json{{"command", r.command},
           {"input_digest", r.input_digest},
           {"outputs", r.outputs},
           {"millis", r.millis},
           {"version", r.version}};
}

void from_json(const json& j, RunRecord& r) {
  j.at("command").get_to(r.command);
  j.at("input_digest").get_to(r.input_digest);
  r.outputs = j.at("outputs");
  j.at("millis").get_to(r.millis);
  j.at("version").get_to(r.version);
}

std::string graph_digest(const Graph& g) {
  std::ostringstream text;
  write_graph(text, g);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

// ---- table -----------------------------------------------------------------

namespace {

PathCycleFormula formula_for(const std::string& family, DimensionKind kind) {
  switch (kind) {
    case DimensionKind::metric:
      return family == "path" ? PathCycleFormula::dim_path : PathCycleFormula::dim_cycle;
    case DimensionKind::adjacency: return PathCycleFormula::adim;
    case DimensionKind::broadcast: return PathCycleFormula::bdim;
    case DimensionKind::full_reach: return PathCycleFormula::hat_bdim;
  }
  return PathCycleFormula::bdim;
}

}  // namespace

std::vector<TableRow> run_table(const std::string& family, int from, int to,
                                const std::vector<DimensionKind>& kinds,
                                const SolveLimits& limits, const FormulaFn& formula) {
  if (family != "path" && family != "cycle")
    throw InvalidInput("table family must be 'path' or 'cycle'");
  std::vector<TableRow> rows;
  for (int n = from; n <= to; ++n) {
    const Graph g = family == "path" ? path_graph(n) : cycle_graph(n);
    for (DimensionKind kind : kinds) {
      TableRow row;
      row.family = family;
      row.n = n;
      row.kind = kind;
      row.formula = formula(n, formula_for(family, kind));
      const SolveResult r = solve(g, kind, limits);
      row.solver = r.value;
      row.status = r.status;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "family,n,kind,formula,solver,match,status\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << to_string(r.kind) << ',' << r.formula << ','
        << r.solver << ',' << (r.match() ? 1 : 0) << ',' << to_string(r.status) << '\n';
  }
}

// ---- edge scan -------------------------------------------------------------

std::vector<EdgeScanRow> run_edge_scan(const Graph& g, const SolveLimits& limits) {
  if (!is_connected(g)) throw InvalidInput("edge scan needs a connected graph");
  std::vector<EdgeScanRow> rows;
  const SolveResult before = solve_bdim(g, limits);
  for (auto [u, v] : g.edges()) {
    EdgeScanRow row;
    row.u = u;
    row.v = v;
    if (is_bridge(g, u, v)) {
      row.status = "bridge";
      rows.push_back(row);
      continue;
    }
    const Graph cut = delete_edge(g, u, v);
    const DistanceMatrix d_cut = all_pairs_distances(cut);
    row.distance_after = d_cut(u, v);
    row.bdim_before = before.value;
    const SolveResult after = solve_bdim(cut, limits);
    row.bdim_after = after.value;
    if (!before.optimal() || !after.optimal()) {
      row.status = "timeout";
      rows.push_back(row);
      continue;
    }
    const BroadcastFn repaired = repair_after_edge_deletion(g, before.certificate, u, v);
    row.repair_cost = repaired.cost();
    row.repair_ok = is_resolving_broadcast(d_cut, repaired).ok() &&
                    repaired.cost() <= 3 * before.certificate.cost();
    row.status = "ok";
    rows.push_back(row);
  }
  return rows;
}

void write_edge_scan_csv(std::ostream& out, const std::vector<EdgeScanRow>& rows) {
  out << "u,v,status,bdim_g,bdim_g_minus_e,delta,ratio,repair_cost,repair_ok,dist_after,"
         "ratio_ok\n";
  for (const auto& r : rows) {
    out << r.u << ',' << r.v << ',' << r.status;
    if (r.status == "bridge") {
      out << ",,,,,,,,\n";
      continue;
    }
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(3) << r.ratio();
    out << ',' << r.bdim_before << ',' << r.bdim_after << ',' << r.delta() << ','
        << ratio.str() << ',' << r.repair_cost << ',' << (r.repair_ok ? 1 : 0) << ','
        << r.distance_after << ',' << (r.ratio_ok() ? 1 : 0) << '\n';
  }
}

// ---- tree audit ------------------------------------------------------------

long tree_lower_bound(int n) {
  long b = 0;
  while (6 * b * b < n) ++b;
  return b;
}

unsigned long long audit_tree_seed(unsigned long long seed, int n, int index) {
  std::seed_seq seq{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32),
                    static_cast<unsigned>(n), static_cast<unsigned>(index)};
  std::mt19937_64 rng(seq);
  return rng();
}

std::vector<TreeAuditRow> run_tree_audit(int count, int min_order, int max_order,
                                         unsigned long long seed, const SolveLimits& limits) {
  if (min_order < 1 || max_order < min_order) throw InvalidInput("bad order range");
  std::vector<TreeAuditRow> rows;
  for (int n = min_order; n <= max_order; ++n) {
    for (int i = 0; i < count; ++i) {
      TreeAuditRow row;
      row.index = i;
      row.n = n;
      row.seed = audit_tree_seed(seed, n, i);
      const Graph t = random_tree(n, row.seed);
      const SolveResult r = solve_bdim(t, limits);
      row.bdim = r.value;
      row.bound = tree_lower_bound(n);
      row.status = r.optimal() ? "ok" : "timeout";
      row.bound_ok = r.value >= row.bound;
      row.prune_ok = r.optimal();
      if (row.prune_ok && n >= 2) {
        for (Vertex leaf : leaves(t)) {
          const Graph smaller = delete_vertex(t, leaf);
          const SolveResult s = solve_bdim(smaller, limits);
          const BroadcastFn pruned = prune_leaf(t, r.certificate, leaf);
          const bool ok = s.optimal() && s.value <= r.value &&
                          pruned.cost() <= r.certificate.cost() &&
                          is_resolving_broadcast(all_pairs_distances(smaller), pruned).ok();
          if (!ok) row.prune_ok = false;
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_tree_audit_csv(std::ostream& out, const std::vector<TreeAuditRow>& rows) {
  out << "n,index,seed,bdim,bound,bound_ok,prune_ok,status\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.index << ',' << r.seed << ',' << r.bdim << ',' << r.bound << ','
        << (r.bound_ok ? 1 : 0) << ',' << (r.prune_ok ? 1 : 0) << ',' << r.status << '\n';
  }
}

// ---- entry point -----------------------------------------------------------

namespace {

struct Common {
  std::string graph, out;
  long budget = -1;
  double time_limit = 0;
  int threads = 1;
  unsigned long long seed = 0;
  bool json = false;

  SolveLimits limits() const {
    SolveLimits l;
    if (budget >= 0) l.budget = budget;
    l.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
    l.threads = threads;
    return l;
  }
};

void add_limits(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Largest total cost to try (default: vertex count)");
  cmd->add_option("--time-limit", c.time_limit, "Seconds per solve (0 = none)");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
}

json certificate_json(const SolveResult& r) {
  if (r.kind == DimensionKind::metric || r.kind == DimensionKind::adjacency)
    return r.certificate_set();
  return std::vector<int>(r.certificate.values().begin(), r.certificate.values().end());
}

long long millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact metric, adjacency and broadcast dimension laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common c;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string command = join_args(argc, argv);

  auto* gen = app.add_subcommand("gen", "Write a family member as an edge-list file");
  std::vector<std::string> family_tokens;
  gen->add_option("family", family_tokens, "Family and parameters, e.g. 'F 3'")->required();
  gen->add_option("--out", c.out, "Output path (default: stdout)");
  gen->add_flag("--json", c.json);

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  std::string verify_kind, cert_path;
  verify->add_option("--graph", c.graph)->required();
  verify->add_option("--kind", verify_kind)
      ->required()
      ->check(CLI::IsMember({"set", "adjset", "broadcast", "broadcast-full-reach"}));
  verify->add_option("--cert", cert_path, "Certificate file")->required();
  verify->add_flag("--json", c.json);

  auto* solve_cmd = app.add_subcommand("solve", "Compute a dimension exactly");
  std::string solve_kind;
  solve_cmd->add_option("--graph", c.graph)->required();
  solve_cmd->add_option("--kind", solve_kind)
      ->required()
      ->check(CLI::IsMember({"dim", "adim", "bdim", "hat-bdim"}));
  solve_cmd->add_option("--out", c.out, "Write the certificate here");
  solve_cmd->add_flag("--json", c.json);
  add_limits(solve_cmd, c);

  auto* table = app.add_subcommand("table", "Closed forms vs solver on paths or cycles");
  std::string table_family = "path";
  int from = 4, to = 14;
  std::vector<std::string> table_kinds{"bdim"};
  table->add_option("--family", table_family)->check(CLI::IsMember({"path", "cycle"}));
  table->add_option("--from", from);
  table->add_option("--to", to);
  table->add_option("--kinds", table_kinds)
      ->delimiter(',')
      ->check(CLI::IsMember({"dim", "adim", "bdim", "hat-bdim"}));
  table->add_flag("--json", c.json);
  add_limits(table, c);

  auto* scan = app.add_subcommand("edge-scan", "bdim before and after each edge deletion");
  scan->add_option("--graph", c.graph)->required();
  scan->add_flag("--json", c.json);
  add_limits(scan, c);

  auto* audit = app.add_subcommand("tree-audit", "Random-tree lower bound and pruning audit");
  int count = 500, min_order = 8, max_order = 8;
  audit->add_option("--count", count)->check(CLI::NonNegativeNumber);
  audit->add_option("--min-order", min_order);
  audit->add_option("--max-order", max_order);
  audit->add_option("--seed", c.seed);
  audit->add_flag("--json", c.json);
  add_limits(audit, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit_record = [&](const std::string& digest, json outputs) {
    RunRecord rec{command, digest, std::move(outputs), millis_since(t0), kVersion};
    out << json(rec).dump(2) << '\n';
  };

  try {
    if (*gen) {
      const FamilySpec spec = parse_family(family_tokens);
      const Graph g = generate(spec);
      if (c.out.empty()) {
        write_graph(out, g);
      } else {
        std::ofstream file(c.out);
        if (!file) throw InvalidInput("cannot write " + c.out);
        write_graph(file, g);
        if (!file) throw InvalidInput("write failed for " + c.out);
      }
      std::ostream& info = c.out.empty() ? err : out;
      if (c.json && !c.out.empty()) {
        emit_record(graph_digest(g), {{"family", spec.describe()},
                                      {"order", g.order()},
                                      {"size", g.size()},
                                      {"path", c.out}});
      } else {
        info << "order " << g.order() << " size " << g.size() << '\n';
      }
      return kOk;
    }

    const Graph g = (*verify || *solve_cmd) ? load_graph(c.graph) : Graph();
    const std::string digest = graph_digest(g);

    if (*verify) {
      const DistanceMatrix d = all_pairs_distances(g);
      Verdict v;
      if (verify_kind == "set" || verify_kind == "adjset") {
        const auto set = load_vertex_set(cert_path, g.order());
        v = verify_kind == "set" ? is_resolving_set(d, set) : is_adjacency_resolving_set(d, set);
      } else {
        const BroadcastFn f = load_broadcast(cert_path, g.order());
        v = verify_certificate(d, verify_kind == "broadcast" ? DimensionKind::broadcast
                                                             : DimensionKind::full_reach,
                               f);
      }
      if (c.json) {
        json o{{"kind", verify_kind}, {"ok", v.ok()}};
        if (v.witness) o["witness"] = {v.witness->first, v.witness->second};
        if (v.unreached) o["unreached"] = *v.unreached;
        emit_record(digest, o);
      } else if (v.ok()) {
        out << "ok\n";
      } else if (v.witness) {
        out << "fail " << v.witness->first << ' ' << v.witness->second << '\n';
      } else {
        out << "fail unreached " << *v.unreached << '\n';
      }
      return v.ok() ? kOk : kFail;
    }

    if (*solve_cmd) {
      const DimensionKind kind = parse_dimension_kind(solve_kind);
      const SolveResult r = solve(g, kind, c.limits());
      if (!c.out.empty()) {
        std::ofstream file(c.out);
        if (!file) throw InvalidInput("cannot write " + c.out);
        if (kind == DimensionKind::metric || kind == DimensionKind::adjacency)
          write_vertex_set(file, r.certificate_set());
        else
          write_broadcast(file, r.certificate);
      }
      if (c.json) {
        emit_record(digest, {{"graph", c.graph},
                             {"kind", to_string(kind)},
                             {"value", r.value},
                             {"certificate", certificate_json(r)},
                             {"nodes", r.nodes_explored},
                             {"millis", r.elapsed.count()},
                             {"status", to_string(r.status)}});
      } else {
        out << "value " << r.value << " status " << to_string(r.status) << " nodes "
            << r.nodes_explored << " millis " << r.elapsed.count() << '\n';
        out << "certificate " << certificate_json(r).dump() << '\n';
      }
      return r.optimal() ? kOk : kFail;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*table) {
      std::vector<DimensionKind> kinds;
      for (const auto& k : table_kinds) kinds.push_back(parse_dimension_kind(k));
      const auto rows = run_table(table_family, from, to, kinds, c.limits());
      bool all = true;
      for (const auto& r : rows) all = all && r.match();
      if (c.json) {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"family", r.family}, {"n", r.n}, {"kind", to_string(r.kind)},
                         {"formula", r.formula}, {"solver", r.solver}, {"match", r.match()},
                         {"status", to_string(r.status)}});
        emit_record("", {{"rows", arr}});
      } else {
        write_table_csv(out, rows);
      }
      return all ? kOk : kFail;
    }
    if (*audit) {
      const auto rows = run_tree_audit(count, min_order, max_order, c.seed, c.limits());
      bool all = true;
      for (const auto& r : rows) all = all && r.status == "ok" && r.bound_ok && r.prune_ok;
      if (c.json) {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"n", r.n}, {"index", r.index}, {"seed", r.seed}, {"bdim", r.bdim},
                         {"bound", r.bound}, {"bound_ok", r.bound_ok},
                         {"prune_ok", r.prune_ok}, {"status", r.status}});
        emit_record("", {{"rows", arr}});
      } else {
        write_tree_audit_csv(out, rows);
      }
      return all ? kOk : kFail;
    }
    if (*scan) {
      const Graph g = load_graph(c.graph);
      const auto rows = run_edge_scan(g, c.limits());
      bool all = true;
      for (const auto& r : rows) all = all && !r.violation();
      if (c.json) {
        json arr = json::array();
        for (const auto& r : rows) {
          json o{{"u", r.u}, {"v", r.v}, {"status", r.status}};
          if (r.status != "bridge") {
            o.update({{"bdim_g", r.bdim_before}, {"bdim_g_minus_e", r.bdim_after},
                      {"delta", r.delta()}, {"ratio", r.ratio()},
                      {"repair_cost", r.repair_cost}, {"repair_ok", r.repair_ok},
                      {"dist_after", r.distance_after}, {"ratio_ok", r.ratio_ok()}});
          }
          arr.push_back(o);
        }
        emit_record(graph_digest(g), {{"rows", arr}});
      } else {
        write_edge_scan_csv(out, rows);
      }
      return all ? kOk : kFail;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bdim::cli
