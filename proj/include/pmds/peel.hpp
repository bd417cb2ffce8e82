#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmds/graph.hpp"
#include "pmds/objective.hpp"

namespace pmds {

enum class Algorithm { simpeel, genpeel, genpeelpp, maxcore };

std::string_view to_string(Algorithm a) noexcept;
/// Throws ConfigError on an unknown name.
Algorithm parse_algorithm(std::string_view name);

/// Invalid peel configuration (bad p or c, unknown algorithm).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when genpeel/genpeelpp is asked for p < 1 without `allow_small_p`.
class SmallExponentError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct PeelConfig {
  Algorithm algorithm = Algorithm::genpeelpp;
  double p = 1.0;  // ignored by maxcore
  double c = 0.5;  // fraction of surviving nodes removed per genpeelpp round
  /// Lets genpeel/genpeelpp run with 0 < p < 1, where their guarantee lapses.
  bool allow_small_p = false;

  /// Throws ConfigError (or SmallExponentError) when the configuration is unusable.
  void validate() const;
};

/// The nested family S_0 = V ⊃ S_1 ⊃ ... ⊃ S_n = ∅ produced by a peel.
struct PeelTrace {
  PeelConfig config;
  /// removal_order[i] is the node deleted to go from S_i to S_{i+1}.
  std::vector<NodeId> removal_order;
  /// prefix_value[i] = f_p(S_i); for maxcore the minimum induced degree of S_i.
  std::vector<double> prefix_value;
  /// First index attaining the maximum of prefix_value.
  std::size_t best_index = 0;
  /// S_{best_index}, ascending.
  std::vector<NodeId> best_set;
  /// Times the peel chose its next victims from freshly computed keys.
  std::size_t rounds = 0;

  double best_value() const { return prefix_value.at(best_index); }
};

/// What an observer sees right after each deletion.
struct PeelStep {
  const PeelState& state;
  NodeId removed;
  std::size_t step;  // 1-based: the state now holds S_step
  /// Per-node Δ values the peeler currently relies on (genpeel only; empty
  /// otherwise). Entries for dead nodes are meaningless.
  std::span<const double> maintained_delta;
};

using PeelObserver = std::function<void(const PeelStep&)>;

/// Repeatedly deletes a minimum-degree node (smallest index on ties).
PeelTrace simpeel(const Graph& g, Exponent p, const PeelObserver& observer = {});

/// Repeatedly deletes the node of minimum Δ, keeping Δ exact for the
/// two-hop neighborhood of each deleted node.
PeelTrace genpeel(const Graph& g, Exponent p, bool allow_small_p = false,
                  const PeelObserver& observer = {});

/// Batched generalized peel: each round recomputes Δ for all survivors, sorts
/// them, and deletes the first max(1, floor(c·|S|)) in that order without
/// refreshing Δ. Every single deletion yields a candidate prefix.
PeelTrace genpeelpp(const Graph& g, Exponent p, double c = 0.5, bool allow_small_p = false,
                    const PeelObserver& observer = {});

/// Degeneracy-order peel; the answer is the maximum k-core.
PeelTrace maxcore(const Graph& g, const PeelObserver& observer = {});

PeelTrace run(const Graph& g, const PeelConfig& config, const PeelObserver& observer = {});

/// Largest number of genpeelpp rounds allowed on n nodes:
/// ceil(log n / log(1/(1−c))) + 1 (n for n <= 1).
std::size_t genpeelpp_round_bound(std::size_t n, double c);

/// Maximum over all subgraphs of the minimum induced degree.
std::uint32_t degeneracy(const Graph& g);

}  // namespace pmds
