#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmds/graph.hpp"
#include "pmds/objective.hpp"
#include "pmds/oracle.hpp"
#include "pmds/peel.hpp"

namespace pmds {

/// Quality metrics of one node set, measured on its induced subgraph.
struct DensityReport {
  std::size_t set_size = 0;
  double edge_density = 0.0;  // |E_S| / C(|S|, 2); 0 when |S| <= 1
  double avg_degree = 0.0;
  double avg_sq_degree = 0.0;
  std::uint32_t max_degree = 0;
  double fp_value = 0.0;
  double mp_value = 0.0;
  double runtime_seconds = 0.0;
};

DensityReport report(const Graph& g, std::span<const NodeId> nodes, Exponent p,
                     double runtime_seconds = 0.0);

struct GridOptions {
  std::string dataset;
  double c = 0.5;
  std::size_t repetitions = 3;
  bool allow_small_p = false;
};

/// One (algorithm, p) cell. Exactly one of `report` and `error` is set.
struct GridCell {
  std::string dataset;
  PeelConfig config;
  std::optional<DensityReport> report;
  std::vector<NodeId> best_set;
  std::string error;
};

/// Wall-clock seconds of the fastest of `repetitions` runs, plus the trace of
/// the last run.
std::pair<double, PeelTrace> timed_run(const Graph& g, const PeelConfig& config,
                                       std::size_t repetitions);

/// Runs every algorithm for every p (rows ordered algorithm-major, in the
/// given order). Runs are sequential; a bad cell records its error and the
/// grid carries on.
std::vector<GridCell> run_grid(const Graph& g, std::span<const Algorithm> algorithms,
                               std::span<const double> p_values, const GridOptions& options);

struct SpeedupRow {
  double p = 0.0;
  double genpeel_seconds = 0.0;
  double genpeelpp_seconds = 0.0;
  double ratio = 0.0;  // genpeel / genpeelpp
};

std::vector<SpeedupRow> speedup_report(const Graph& g, std::span<const double> p_values,
                                       double c = 0.5, std::size_t repetitions = 1,
                                       bool allow_small_p = false);

/// One point of an approximation-quality curve: M_p(heuristic) / M_p(optimum).
struct RatioPoint {
  double p = 0.0;
  double heuristic_mp = 0.0;
  double optimal_mp = 0.0;
  double ratio = 1.0;  // 1 when the optimum is 0 (edgeless graph)
};

std::vector<RatioPoint> approximation_ratios(const Graph& g, const PeelConfig& base,
                                             std::span<const double> p_values,
                                             std::size_t max_oracle_nodes = kDefaultOracleMaxNodes);

/// p = start, start + step, ..., up to and including stop (within rounding).
std::vector<double> p_range(double start, double stop, double step);

/// "%.10g": at least six significant digits, no trailing noise.
std::string format_number(double x);

nlohmann::ordered_json to_json(const GridCell& cell);

inline constexpr const char* kReportColumns[] = {
    "dataset", "algorithm", "p",          "c",  "size", "edge_density", "avg_degree",
    "avg_sq_degree", "max_degree", "fp", "mp", "runtime_seconds"};

/// One JSON object per line, keys in kReportColumns order (plus "error" on failed cells).
void write_jsonl(std::ostream& out, std::span<const GridCell> cells);
/// Header row of kReportColumns plus an "error" column.
void write_csv(std::ostream& out, std::span<const GridCell> cells);
/// Human-readable aligned table.
void write_table(std::ostream& out, std::span<const GridCell> cells);
/// "p ratio" lines for external plotting.
void write_ratio_file(std::ostream& out, std::span<const RatioPoint> points);

}  // namespace pmds
