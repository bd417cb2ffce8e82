#include "pmds/peel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "pmds/indexed_min_heap.hpp"

namespace pmds {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::simpeel: return "simpeel";
    case Algorithm::genpeel: return "genpeel";
    case Algorithm::genpeelpp: return "genpeelpp";
    case Algorithm::maxcore: return "maxcore";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::simpeel, Algorithm::genpeel, Algorithm::genpeelpp, Algorithm::maxcore})
    if (name == to_string(a)) return a;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected simpeel, genpeel, genpeelpp or maxcore)");
}

void PeelConfig::validate() const {
  if (!(c > 0.0 && c < 1.0)) throw ConfigError("c must lie strictly between 0 and 1");
  if (algorithm == Algorithm::maxcore) return;
  if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("p must be a finite positive number");
  if ((algorithm == Algorithm::genpeel || algorithm == Algorithm::genpeelpp) && p < 1.0 &&
      !allow_small_p)
    throw SmallExponentError(std::string(to_string(algorithm)) +
                             " needs p >= 1 unless the p-range override is set");
}

namespace {

void require_exponent_range(Algorithm a, Exponent p, bool allow_small_p) {
  PeelConfig{.algorithm = a, .p = p.value(), .allow_small_p = allow_small_p}.validate();
}

// Fills best_index/best_set from removal_order and prefix_value.
void select_best(PeelTrace& trace) {
  const auto& v = trace.prefix_value;
  trace.best_index = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  trace.best_set.assign(trace.removal_order.begin() + static_cast<std::ptrdiff_t>(trace.best_index),
                        trace.removal_order.end());
  std::sort(trace.best_set.begin(), trace.best_set.end());
}

PeelTrace start_trace(const Graph& g, PeelConfig config) {
  PeelTrace trace;
  trace.config = config;
  trace.removal_order.reserve(g.node_count());
  trace.prefix_value.reserve(g.node_count() + 1);
  return trace;
}

// Min-degree peel shared by simpeel and maxcore. Buckets are indexed by live
// degree; each bucket is a lazily cleaned min-heap of node ids so that the
// smallest index wins among nodes of equal degree. `on_remove` receives the
// node and its degree at the moment of removal.
void min_degree_peel(PeelState& state, const std::function<void(NodeId, std::uint32_t)>& on_remove) {
  const Graph& g = state.graph();
  const std::size_t n = g.node_count();
  if (n == 0) return;
  std::vector<std::vector<NodeId>> buckets(std::size_t{g.max_degree()} + 1);
  // Ascending pushes leave every bucket a valid min-heap.
  for (NodeId v = 0; v < n; ++v) buckets[state.live_degree(v)].push_back(v);
  const auto heap_order = std::greater<NodeId>{};

  std::uint32_t current = 0;
  for (std::size_t step = 0; step < n; ++step) {
    NodeId victim;
    for (;;) {
      while (buckets[current].empty()) ++current;
      auto& bucket = buckets[current];
      std::pop_heap(bucket.begin(), bucket.end(), heap_order);
      victim = bucket.back();
      bucket.pop_back();
      if (state.alive(victim) && state.live_degree(victim) == current) break;
    }
    const std::uint32_t degree = current;
    state.remove_node(victim);
    for (NodeId u : g.neighbors(victim)) {
      if (!state.alive(u)) continue;
      auto& bucket = buckets[state.live_degree(u)];
      bucket.push_back(u);
      std::push_heap(bucket.begin(), bucket.end(), heap_order);
    }
    if (current > 0 && degree > 0) --current;
    on_remove(victim, degree);
  }
}

}  // namespace

PeelTrace simpeel(const Graph& g, Exponent p, const PeelObserver& observer) {
  PeelTrace trace = start_trace(g, {.algorithm = Algorithm::simpeel, .p = p.value()});
  PeelState state(g, p);
  trace.prefix_value.push_back(f_p(state));
  min_degree_peel(state, [&](NodeId v, std::uint32_t) {
    trace.removal_order.push_back(v);
    trace.prefix_value.push_back(f_p(state));
    if (observer) observer({state, v, trace.removal_order.size(), {}});
  });
  trace.rounds = g.node_count();
  select_best(trace);
  return trace;
}

PeelTrace maxcore(const Graph& g, const PeelObserver& observer) {
  PeelTrace trace = start_trace(g, {.algorithm = Algorithm::maxcore});
  PeelState state(g, Exponent(1.0));
  // The degree of each removed node is the minimum degree of the set it left.
  min_degree_peel(state, [&](NodeId v, std::uint32_t degree) {
    trace.removal_order.push_back(v);
    trace.prefix_value.push_back(double(degree));
    if (observer) observer({state, v, trace.removal_order.size(), {}});
  });
  trace.prefix_value.push_back(0.0);
  trace.rounds = g.node_count();
  select_best(trace);
  return trace;
}

PeelTrace genpeel(const Graph& g, Exponent p, bool allow_small_p, const PeelObserver& observer) {
  require_exponent_range(Algorithm::genpeel, p, allow_small_p);
  PeelTrace trace = start_trace(
      g, {.algorithm = Algorithm::genpeel, .p = p.value(), .allow_small_p = allow_small_p});
  const std::size_t n = g.node_count();
  PeelState state(g, p);
  trace.prefix_value.push_back(f_p(state));

  IndexedMinHeap heap(n);
  for (NodeId v = 0; v < n; ++v) heap.push(v, delta_v(state, v));

  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t epoch = 0;
  std::vector<NodeId> affected;
  while (!heap.empty()) {
    const NodeId victim = heap.pop();
    state.remove_node(victim);

    // Δ_x depends on d_x and on d_u for u ∈ N(x); deleting the victim changes
    // the degrees of its live neighbors, so every live node within two hops
    // needs a fresh value.
    ++epoch;
    affected.clear();
    auto touch = [&](NodeId x) {
      if (state.alive(x) && mark[x] != epoch) {
        mark[x] = epoch;
        affected.push_back(x);
      }
    };
    for (NodeId u : g.neighbors(victim)) {
      if (!state.alive(u)) continue;
      touch(u);
      for (NodeId w : g.neighbors(u)) touch(w);
    }
    for (NodeId x : affected) heap.update(x, delta_v(state, x));

    trace.removal_order.push_back(victim);
    trace.prefix_value.push_back(f_p(state));
    if (observer) observer({state, victim, trace.removal_order.size(), heap.keys()});
  }
  trace.rounds = n;
  select_best(trace);
  return trace;
}

PeelTrace genpeelpp(const Graph& g, Exponent p, double c, bool allow_small_p,
                    const PeelObserver& observer) {
  const PeelConfig config{
      .algorithm = Algorithm::genpeelpp, .p = p.value(), .c = c, .allow_small_p = allow_small_p};
  config.validate();
  PeelTrace trace = start_trace(g, config);
  PeelState state(g, p);
  trace.prefix_value.push_back(f_p(state));

  std::vector<NodeId> order;
  std::vector<double> key(g.node_count(), 0.0);
  while (state.live_count() > 0) {
    if (trace.rounds > 0) state.recompute();
    order = state.live_nodes();
    for (NodeId v : order) key[v] = delta_v(state, v);
    std::sort(order.begin(), order.end(), [&key](NodeId a, NodeId b) {
      return key[a] < key[b] || (key[a] == key[b] && a < b);
    });

    const auto batch = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(c * double(order.size()))));
    for (std::size_t i = 0; i < batch; ++i) {
      state.remove_node(order[i]);
      trace.removal_order.push_back(order[i]);
      trace.prefix_value.push_back(f_p(state));
      if (observer) observer({state, order[i], trace.removal_order.size(), {}});
    }
    ++trace.rounds;
  }
  select_best(trace);
  return trace;
}

PeelTrace run(const Graph& g, const PeelConfig& config, const PeelObserver& observer) {
  config.validate();
  switch (config.algorithm) {
    case Algorithm::simpeel: {
      PeelTrace t = simpeel(g, Exponent(config.p), observer);
      t.config = config;
      return t;
    }
    case Algorithm::genpeel: {
      PeelTrace t = genpeel(g, Exponent(config.p), config.allow_small_p, observer);
      t.config = config;
      return t;
    }
    case Algorithm::genpeelpp: {
      PeelTrace t = genpeelpp(g, Exponent(config.p), config.c, config.allow_small_p, observer);
      t.config = config;
      return t;
    }
    case Algorithm::maxcore: {
      PeelTrace t = maxcore(g, observer);
      t.config = config;
      return t;
    }
  }
  throw ConfigError("unknown algorithm");
}

std::size_t genpeelpp_round_bound(std::size_t n, double c) {
  if (n <= 1) return n;
  return static_cast<std::size_t>(std::ceil(std::log(double(n)) / std::log(1.0 / (1.0 - c)))) + 1;
}

std::uint32_t degeneracy(const Graph& g) {
  const PeelTrace t = maxcore(g);
  return static_cast<std::uint32_t>(t.best_value());
}

}  // namespace pmds
