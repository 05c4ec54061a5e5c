#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdim/families.hpp"
#include "bdim/solver.hpp"

namespace bdim::cli {

inline constexpr const char* kVersion = "0.3.0";

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kFail = 1, kUsage = 2 };

/// Machine-readable echo of one CLI invocation.
struct RunRecord {
  std::string command;
  std::string input_digest;  // FNV-1a 64 of the canonical graph text, hex
  nlohmann::json outputs;
  long long millis = 0;
  std::string version = kVersion;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};
void to_json(nlohmann::json& j, const RunRecord& r);
void from_json(const nlohmann::json& j, RunRecord& r);

std::string graph_digest(const Graph& g);

// ---- table -----------------------------------------------------------------

using FormulaFn = std::function<long(int n, PathCycleFormula)>;

struct TableRow {
  std::string family;  // "path" or "cycle"
  int n = 0;
  DimensionKind kind = DimensionKind::broadcast;
  long formula = 0;
  long solver = 0;
  SolveStatus status = SolveStatus::optimal;
  bool match() const { return status == SolveStatus::optimal && formula == solver; }
};

std::vector<TableRow> run_table(const std::string& family, int from, int to,
                                const std::vector<DimensionKind>& kinds,
                                const SolveLimits& limits,
                                const FormulaFn& formula = formula_path_cycle);
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

// ---- edge scan -------------------------------------------------------------

struct EdgeScanRow {
  Vertex u = 0, v = 0;
  std::string status;  // "ok", "bridge", "timeout"
  long bdim_before = 0, bdim_after = 0;
  long repair_cost = 0;
  bool repair_ok = false;
  int distance_after = 0;  // d_{G-e}(u, v)
  long delta() const { return bdim_after - bdim_before; }
  double ratio() const {
    return bdim_before == 0 ? 0.0 : static_cast<double>(bdim_after) / bdim_before;
  }
  bool ratio_ok() const { return bdim_after <= 3 * bdim_before; }
  bool violation() const { return status == "ok" && (!ratio_ok() || !repair_ok); }
};

std::vector<EdgeScanRow> run_edge_scan(const Graph& g, const SolveLimits& limits);
void write_edge_scan_csv(std::ostream& out, const std::vector<EdgeScanRow>& rows);

// ---- tree audit ------------------------------------------------------------

struct TreeAuditRow {
  int index = 0;
  int n = 0;
  unsigned long long seed = 0;
  std::string status;  // "ok" or "timeout"
  long bdim = 0;
  long bound = 0;  // ceil(sqrt(n / 6))
  bool bound_ok = false;
  bool prune_ok = false;
};

/// Smallest integer b with 6 b^2 >= n.
long tree_lower_bound(int n);

/// Seed of the i-th tree of order n in an audit run with master seed `seed`.
unsigned long long audit_tree_seed(unsigned long long seed, int n, int index);

std::vector<TreeAuditRow> run_tree_audit(int count, int min_order, int max_order,
                                         unsigned long long seed, const SolveLimits& limits);
void write_tree_audit_csv(std::ostream& out, const std::vector<TreeAuditRow>& rows);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bdim::cli
