#include "pmds/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>

namespace pmds {

DensityReport report(const Graph& g, std::span<const NodeId> nodes, Exponent p,
                     double runtime_seconds) {
  DensityReport r;
  r.runtime_seconds = runtime_seconds;
  const auto mask = membership_mask(g.node_count(), nodes);
  auto member = [&mask](NodeId v) { return bool(mask[v]); };

  std::size_t size = 0;
  std::size_t degree_sum = 0;
  double sq_sum = 0.0;
  double power_sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!mask[v]) continue;
    const std::uint32_t d = induced_degree(g, member, v);
    ++size;
    degree_sum += d;
    sq_sum += double(d) * double(d);
    power_sum += p.pow(double(d));
    r.max_degree = std::max(r.max_degree, d);
  }
  r.set_size = size;
  if (size == 0) return r;
  const double n = double(size);
  r.avg_degree = double(degree_sum) / n;
  r.avg_sq_degree = sq_sum / n;
  r.fp_value = power_sum / n;
  r.mp_value = p_root(r.fp_value, p);
  if (size > 1) r.edge_density = (double(degree_sum) / 2.0) / (n * (n - 1.0) / 2.0);
  return r;
}

std::pair<double, PeelTrace> timed_run(const Graph& g, const PeelConfig& config,
                                       std::size_t repetitions) {
  using clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  PeelTrace trace;
  for (std::size_t rep = 0; rep < std::max<std::size_t>(1, repetitions); ++rep) {
    const auto start = clock::now();
    trace = run(g, config);
    const std::chrono::duration<double> elapsed = clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return {best, std::move(trace)};
}

std::vector<GridCell> run_grid(const Graph& g, std::span<const Algorithm> algorithms,
                               std::span<const double> p_values, const GridOptions& options) {
  std::vector<GridCell> cells;
  for (Algorithm a : algorithms) {
    for (double p : p_values) {
      GridCell cell;
      cell.dataset = options.dataset;
      cell.config = {.algorithm = a, .p = p, .c = options.c, .allow_small_p = options.allow_small_p};
      try {
        // maxcore ignores p, but the report still evaluates f_p at it.
        const Exponent exponent(p);
        auto [seconds, trace] = timed_run(g, cell.config, options.repetitions);
        cell.report = report(g, trace.best_set, exponent, seconds);
        cell.best_set = std::move(trace.best_set);
      } catch (const std::invalid_argument& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<SpeedupRow> speedup_report(const Graph& g, std::span<const double> p_values, double c,
                                       std::size_t repetitions, bool allow_small_p) {
  std::vector<SpeedupRow> rows;
  for (double p : p_values) {
    SpeedupRow row;
    row.p = p;
    row.genpeel_seconds =
        timed_run(g, {.algorithm = Algorithm::genpeel, .p = p, .c = c, .allow_small_p = allow_small_p},
                  repetitions)
            .first;
    row.genpeelpp_seconds =
        timed_run(g, {.algorithm = Algorithm::genpeelpp, .p = p, .c = c, .allow_small_p = allow_small_p},
                  repetitions)
            .first;
    row.ratio = row.genpeelpp_seconds > 0.0 ? row.genpeel_seconds / row.genpeelpp_seconds
                                            : std::numeric_limits<double>::infinity();
    rows.push_back(row);
  }
  return rows;
}

std::vector<RatioPoint> approximation_ratios(const Graph& g, const PeelConfig& base,
                                             std::span<const double> p_values,
                                             std::size_t max_oracle_nodes) {
  std::vector<RatioPoint> points;
  for (double p : p_values) {
    PeelConfig config = base;
    config.p = p;
    const Exponent exponent(p);
    const PeelTrace trace = run(g, config);
    const OracleResult opt = exact_optimum(g, exponent, max_oracle_nodes);
    RatioPoint point;
    point.p = p;
    point.heuristic_mp = m_p_of(g, trace.best_set, exponent);
    point.optimal_mp = opt.mp_value;
    if (point.optimal_mp > 0.0) point.ratio = point.heuristic_mp / point.optimal_mp;
    points.push_back(point);
  }
  return points;
}

std::vector<double> p_range(double start, double stop, double step) {
  std::vector<double> out;
  if (!(step > 0.0)) throw std::invalid_argument("p_range: step must be positive");
  for (std::size_t i = 0;; ++i) {
    const double p = start + double(i) * step;
    if (p > stop + step * 1e-9) break;
    out.push_back(p);
  }
  return out;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

nlohmann::ordered_json to_json(const GridCell& cell) {
  nlohmann::ordered_json row;
  row["dataset"] = cell.dataset;
  row["algorithm"] = std::string(to_string(cell.config.algorithm));
  row["p"] = cell.config.p;
  row["c"] = cell.config.c;
  if (cell.report) {
    const DensityReport& r = *cell.report;
    row["size"] = r.set_size;
    row["edge_density"] = r.edge_density;
    row["avg_degree"] = r.avg_degree;
    row["avg_sq_degree"] = r.avg_sq_degree;
    row["max_degree"] = r.max_degree;
    row["fp"] = r.fp_value;
    row["mp"] = r.mp_value;
    row["runtime_seconds"] = r.runtime_seconds;
  } else {
    for (const char* key : {"size", "edge_density", "avg_degree", "avg_sq_degree", "max_degree",
                            "fp", "mp", "runtime_seconds"})
      row[key] = nullptr;
    row["error"] = cell.error;
  }
  return row;
}

void write_jsonl(std::ostream& out, std::span<const GridCell> cells) {
  for (const GridCell& cell : cells) out << to_json(cell).dump() << '\n';
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::vector<std::string> row_fields(const GridCell& cell) {
  std::vector<std::string> f{csv_field(cell.dataset), std::string(to_string(cell.config.algorithm)),
                             format_number(cell.config.p), format_number(cell.config.c)};
  if (cell.report) {
    const DensityReport& r = *cell.report;
    f.insert(f.end(), {std::to_string(r.set_size), format_number(r.edge_density),
                       format_number(r.avg_degree), format_number(r.avg_sq_degree),
                       std::to_string(r.max_degree), format_number(r.fp_value),
                       format_number(r.mp_value), format_number(r.runtime_seconds)});
  } else {
    f.resize(std::size(kReportColumns));
  }
  return f;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const GridCell> cells) {
  for (const char* col : kReportColumns) out << col << ',';
  out << "error\n";
  for (const GridCell& cell : cells) {
    for (const std::string& field : row_fields(cell)) out << field << ',';
    out << csv_field(cell.error) << '\n';
  }
}

void write_table(std::ostream& out, std::span<const GridCell> cells) {
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(std::begin(kReportColumns), std::end(kReportColumns));
  for (const GridCell& cell : cells) {
    auto f = row_fields(cell);
    if (!cell.report) f[4] = "error: " + cell.error;
    rows.push_back(std::move(f));
  }
  std::vector<std::size_t> width(std::size(kReportColumns), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!(i == 4 && row[i].rfind("error: ", 0) == 0)) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].empty() && i > 4) continue;
      out << std::left << std::setw(static_cast<int>(width[i] + 2)) << row[i];
    }
    out << '\n';
  }
}

void write_ratio_file(std::ostream& out, std::span<const RatioPoint> points) {
  for (const RatioPoint& pt : points) out << format_number(pt.p) << ' ' << format_number(pt.ratio) << '\n';
}

}  // namespace pmds
