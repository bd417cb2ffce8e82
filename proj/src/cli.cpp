#include "pmds/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pmds/bench.hpp"
#include "pmds/generators.hpp"
#include "pmds/oracle.hpp"
#include "pmds/peel.hpp"

namespace pmds::cli {

namespace {

/// A failure already phrased for the user.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string input;
  std::string algorithms;
  std::string p_list;
  double c = 0.5;
  std::string out_path;
  std::string format = "text";
  bool emit_nodes = false;
  std::size_t reps = 3;
  unsigned long long seed = 1;
  bool override_p_range = false;
  std::size_t max_oracle_n = kDefaultOracleMaxNodes;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
}

std::vector<double> parse_p_list(const std::string& s) {
  std::vector<double> ps;
  for (const auto& part : split(s, ',')) {
    const double p = parse_double(part, "p");
    if (!(p > 0.0) || !std::isfinite(p)) throw UsageError("p must be a positive number, got " + part);
    ps.push_back(p);
  }
  if (ps.empty()) throw UsageError("--p needs at least one value");
  return ps;
}

std::vector<Algorithm> parse_algorithms(const std::string& s) {
  std::vector<Algorithm> algs;
  for (const auto& part : split(s, ',')) {
    try {
      algs.push_back(parse_algorithm(part));
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  if (algs.empty()) throw UsageError("--alg needs at least one algorithm");
  return algs;
}

std::string dataset_name(const std::string& input) {
  if (input.rfind("gen:", 0) == 0) return input;
  return std::filesystem::path(input).filename().string();
}

// Numeric order when every id is an integer, lexicographic otherwise.
std::vector<std::string> sorted_ids(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<std::string> ids;
  for (NodeId v : nodes) ids.push_back(g.original_id(v));
  auto as_int = [](const std::string& s, long long& value) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  long long scratch = 0;
  const bool numeric =
      std::all_of(ids.begin(), ids.end(), [&](const std::string& s) { return as_int(s, scratch); });
  if (numeric) {
    std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
      long long x = 0, y = 0;
      as_int(a, x);
      as_int(b, y);
      return x < y;
    });
  } else {
    std::sort(ids.begin(), ids.end());
  }
  return ids;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "text")
    throw UsageError("--format must be json, csv or text");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  return file;
}

int cmd_peel(const Invocation& inv, std::ostream& out) {
  check_format(inv.format);
  const auto ps = parse_p_list(inv.p_list.empty() ? "1.0" : inv.p_list);
  if (ps.size() != 1) throw UsageError("peel takes a single --p value");
  const auto algs = parse_algorithms(inv.algorithms.empty() ? "genpeelpp" : inv.algorithms);
  if (algs.size() != 1) throw UsageError("peel takes a single --alg value");

  PeelConfig{.algorithm = algs.front(),
             .p = ps.front(),
             .c = inv.c,
             .allow_small_p = inv.override_p_range}
      .validate();

  const Graph g = load_input(inv.input, inv.seed);
  GridOptions options{.dataset = dataset_name(inv.input),
                      .c = inv.c,
                      .repetitions = inv.reps,
                      .allow_small_p = inv.override_p_range};
  auto cells = run_grid(g, algs, ps, options);
  const GridCell& cell = cells.front();
  if (!cell.report) throw ConfigError(cell.error);

  const auto nodes = sorted_ids(g, cell.best_set);
  if (inv.format == "json") {
    auto row = to_json(cell);
    if (inv.emit_nodes) row["nodes"] = nodes;
    out << row.dump() << '\n';
  } else if (inv.format == "csv") {
    std::ostringstream csv;
    write_csv(csv, cells);
    std::string text = csv.str();
    if (inv.emit_nodes) {
      const auto header_end = text.find('\n');
      text.insert(header_end, ",nodes");
      text.insert(text.size() - 1, "," + join(nodes, " "));
    }
    out << text;
  } else {
    const DensityReport& r = *cell.report;
    out << "dataset          " << cell.dataset << '\n'
        << "algorithm        " << to_string(cell.config.algorithm) << '\n'
        << "p                " << format_number(cell.config.p) << '\n'
        << "c                " << format_number(cell.config.c) << '\n'
        << "size             " << r.set_size << '\n'
        << "edge_density     " << format_number(r.edge_density) << '\n'
        << "avg_degree       " << format_number(r.avg_degree) << '\n'
        << "avg_sq_degree    " << format_number(r.avg_sq_degree) << '\n'
        << "max_degree       " << r.max_degree << '\n'
        << "fp               " << format_number(r.fp_value) << '\n'
        << "mp               " << format_number(r.mp_value) << '\n'
        << "runtime_seconds  " << format_number(r.runtime_seconds) << '\n';
    if (inv.emit_nodes) out << "nodes            " << join(nodes, " ") << '\n';
  }
  return 0;
}

int cmd_bench(const Invocation& inv, std::ostream& out) {
  const std::string format = inv.format == "text" ? "json" : inv.format;
  check_format(format);
  const auto ps = parse_p_list(inv.p_list.empty() ? "0.5,1.0,1.05,1.5,2.0" : inv.p_list);
  const auto algs = parse_algorithms(inv.algorithms.empty() ? "genpeelpp" : inv.algorithms);

  const Graph g = load_input(inv.input, inv.seed);
  GridOptions options{.dataset = dataset_name(inv.input),
                      .c = inv.c,
                      .repetitions = inv.reps,
                      .allow_small_p = inv.override_p_range};
  if (!(inv.c > 0.0 && inv.c < 1.0)) throw UsageError("--c must lie strictly between 0 and 1");
  const auto cells = run_grid(g, algs, ps, options);

  auto emit = [&](std::ostream& sink) {
    if (format == "csv")
      write_csv(sink, cells);
    else
      write_jsonl(sink, cells);
  };
  if (inv.out_path.empty()) {
    emit(out);
  } else {
    auto file = open_output(inv.out_path);
    emit(file);
    write_table(out, cells);
  }
  return 0;
}

int cmd_oracle(const Invocation& inv, std::ostream& out) {
  check_format(inv.format);
  const auto ps = parse_p_list(inv.p_list.empty() ? "1.0" : inv.p_list);
  const auto algs = parse_algorithms(inv.algorithms.empty() ? "genpeelpp" : inv.algorithms);
  const Graph g = load_input(inv.input, inv.seed);
  if (inv.max_oracle_n > kOracleHardMaxNodes)
    throw UsageError("--max-oracle-n cannot exceed " + std::to_string(kOracleHardMaxNodes));
  if (g.node_count() > inv.max_oracle_n)
    throw UsageError("graph has " + std::to_string(g.node_count()) +
                     " nodes; exact optimum is limited to " + std::to_string(inv.max_oracle_n) +
                     " (raise with --max-oracle-n)");

  std::vector<std::vector<RatioPoint>> curves;
  for (Algorithm a : algs) {
    const PeelConfig base{
        .algorithm = a, .c = inv.c, .allow_small_p = inv.override_p_range};
    curves.push_back(approximation_ratios(g, base, ps, inv.max_oracle_n));
  }

  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    const Exponent p(ps[pi]);
    const OracleResult opt = exact_optimum(g, p, inv.max_oracle_n);
    const auto nodes = sorted_ids(g, opt.best_set);
    if (inv.format == "json") {
      nlohmann::ordered_json row;
      row["dataset"] = dataset_name(inv.input);
      row["p"] = p.value();
      row["size"] = opt.best_set.size();
      row["fp"] = opt.fp_value;
      row["mp"] = opt.mp_value;
      if (inv.emit_nodes) row["nodes"] = nodes;
      auto& ratios = row["ratios"] = nlohmann::ordered_json::array();
      for (std::size_t ai = 0; ai < algs.size(); ++ai)
        ratios.push_back({{"algorithm", to_string(algs[ai])},
                          {"mp", curves[ai][pi].heuristic_mp},
                          {"ratio", curves[ai][pi].ratio}});
      out << row.dump() << '\n';
    } else if (inv.format == "csv") {
      if (pi == 0) out << "p,algorithm,optimum_size,optimum_fp,optimum_mp,heuristic_mp,ratio\n";
      for (std::size_t ai = 0; ai < algs.size(); ++ai)
        out << format_number(p.value()) << ',' << to_string(algs[ai]) << ','
            << opt.best_set.size() << ',' << format_number(opt.fp_value) << ','
            << format_number(opt.mp_value) << ',' << format_number(curves[ai][pi].heuristic_mp)
            << ',' << format_number(curves[ai][pi].ratio) << '\n';
    } else {
      out << "p " << format_number(p.value()) << ": optimum size " << opt.best_set.size()
          << "  fp " << format_number(opt.fp_value) << "  mp " << format_number(opt.mp_value)
          << '\n';
      if (inv.emit_nodes) out << "  nodes " << join(nodes, " ") << '\n';
      for (std::size_t ai = 0; ai < algs.size(); ++ai)
        out << "  " << to_string(algs[ai]) << "  mp " << format_number(curves[ai][pi].heuristic_mp)
            << "  ratio " << format_number(curves[ai][pi].ratio) << '\n';
    }
  }

  if (!inv.out_path.empty()) {
    for (std::size_t ai = 0; ai < algs.size(); ++ai) {
      const std::string path =
          algs.size() == 1 ? inv.out_path : inv.out_path + "." + std::string(to_string(algs[ai]));
      auto file = open_output(path);
      write_ratio_file(file, curves[ai]);
    }
  }
  return 0;
}

int cmd_stats(const Invocation& inv, std::ostream& out) {
  check_format(inv.format);
  const Graph g = load_input(inv.input, inv.seed);
  const auto components = connected_components(g).second;
  const auto core = degeneracy(g);
  if (inv.format == "json") {
    nlohmann::ordered_json row;
    row["dataset"] = dataset_name(inv.input);
    row["n"] = g.node_count();
    row["m"] = g.edge_count();
    row["max_degree"] = g.max_degree();
    row["degeneracy"] = core;
    row["components"] = components;
    out << row.dump() << '\n';
  } else if (inv.format == "csv") {
    out << "dataset,n,m,max_degree,degeneracy,components\n"
        << dataset_name(inv.input) << ',' << g.node_count() << ',' << g.edge_count() << ','
        << g.max_degree() << ',' << core << ',' << components << '\n';
  } else {
    out << "n=" << g.node_count() << '\n'
        << "m=" << g.edge_count() << '\n'
        << "max_degree=" << g.max_degree() << '\n'
        << "degeneracy=" << core << '\n'
        << "components=" << components << '\n';
  }
  return 0;
}

}  // namespace

Graph load_input(const std::string& input, unsigned long long seed) {
  if (input.rfind("gen:", 0) != 0) {
    if (!std::filesystem::exists(input)) throw UsageError("input file not found: " + input);
    return load_edge_list(EdgeListSource{input});
  }
  const auto parts = split(input, ':');
  if (parts.size() != 4) throw UsageError("synthetic input must look like gen:<kind>:<n>:<param>");
  const auto n = static_cast<std::size_t>(parse_double(parts[2], "node count"));
  const double param = parse_double(parts[3], "generator parameter");
  Rng rng(seed);
  if (parts[1] == "gnp") return erdos_renyi(n, param, rng);
  if (parts[1] == "gnm") return erdos_renyi_m(n, static_cast<std::size_t>(param), rng);
  if (parts[1] == "powerlaw") return chung_lu_power_law(n, param, rng);
  throw UsageError("unknown generator '" + parts[1] + "' (expected gnp, gnm or powerlaw)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-mean densest subgraph peeling"};
  app.name("pmds");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Invocation inv;
  auto add_common = [&inv](CLI::App* sub, const std::string& alg_default, const std::string& p_default) {
    sub->add_option("--in", inv.input, "Edge-list file, or gen:<gnp|gnm|powerlaw>:<n>:<param>")
        ->required();
    sub->add_option("--seed", inv.seed, "Seed for synthetic gen: inputs");
    sub->add_option("--format", inv.format, "Output format: json, csv or text");
    if (!alg_default.empty()) {
      sub->add_option("--alg,--algs", inv.algorithms,
                      "Algorithm(s): simpeel, genpeel, genpeelpp, maxcore (comma list where allowed)")
          ->default_str(alg_default);
      sub->add_option("--p", inv.p_list, "Exponent p (comma list where allowed)")->default_str(p_default);
      sub->add_option("--c", inv.c, "Fraction of survivors removed per genpeelpp round, in (0,1)");
      sub->add_flag("--override-p-range", inv.override_p_range,
                    "Allow genpeel/genpeelpp with p < 1 (no approximation guarantee)");
    }
  };

  auto* peel = app.add_subcommand("peel", "Run one peeler and report its best subgraph");
  add_common(peel, "genpeelpp", "1.0");
  peel->add_option("--reps", inv.reps, "Timing repetitions (minimum wall-clock reported)");
  peel->add_flag("--emit-nodes", inv.emit_nodes, "Also print the original ids of the best set");

  auto* bench = app.add_subcommand("bench", "Run an (algorithm x p) grid and write a report");
  add_common(bench, "genpeelpp", "0.5,1.0,1.05,1.5,2.0");
  bench->add_option("--reps", inv.reps, "Timing repetitions per cell (minimum wall-clock reported)");
  bench->add_option("--out", inv.out_path,
                    "Report file (json lines or csv); a summary table then goes to stdout");

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration, with peeler ratios");
  add_common(oracle, "genpeelpp", "1.0");
  oracle->add_flag("--emit-nodes", inv.emit_nodes, "Also print the original ids of the optimum");
  oracle->add_option("--max-oracle-n", inv.max_oracle_n, "Largest graph the enumeration accepts");
  oracle->add_option("--out", inv.out_path, "Write 'p ratio' plot data here (suffixed per algorithm)");

  auto* stats = app.add_subcommand("stats", "Graph summary: n, m, max degree, degeneracy, components");
  add_common(stats, "", "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (peel->parsed()) return cmd_peel(inv, out);
    if (bench->parsed()) return cmd_bench(inv, out);
    if (oracle->parsed()) return cmd_oracle(inv, out);
    return cmd_stats(inv, out);
  } catch (const SmallExponentError&) {
    err << "error: p < 1 requires --override-p-range\n";
  } catch (const ParseError& e) {
    err << "error: " << inv.input << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace pmds::cli
