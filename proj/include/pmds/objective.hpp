#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pmds/graph.hpp"

namespace pmds {

/// Degree exponent p of the p-mean objective. Always finite and positive.
class Exponent {
 public:
  /// Throws std::invalid_argument unless 0 < p < inf.
  explicit Exponent(double p);

  double value() const noexcept { return p_; }

  /// x^p with 0^p = 0. Integer exponents 1..4 use repeated multiplication so
  /// integer degrees give exact results.
  double pow(double x) const noexcept;

  friend bool operator==(Exponent, Exponent) = default;

 private:
  double p_;
  int small_int_;  // 1..4 when p is that integer, 0 otherwise
};

/// Mutable view of a shrinking node set S over an immutable graph.
///
/// Keeps live degrees d_v(S) and the running sum Σ_{v∈S} d_v(S)^p. The power
/// values come from a per-state table, so incremental updates and scratch
/// evaluations share the exact same d^p numbers.
class PeelState {
 public:
  /// S = V.
  PeelState(const Graph& g, Exponent p);
  /// S = { v : members[v] }.
  PeelState(const Graph& g, Exponent p, const std::vector<bool>& members);

  const Graph& graph() const noexcept { return *graph_; }
  Exponent exponent() const noexcept { return p_; }

  bool alive(NodeId v) const { return alive_[v] != 0; }
  std::uint32_t live_degree(NodeId v) const { return live_degree_[v]; }
  std::size_t live_count() const noexcept { return live_count_; }
  double power_sum() const noexcept { return power_sum_; }
  /// Edges with both endpoints in S.
  std::size_t live_edge_count() const noexcept { return live_edges_; }

  /// d^p for 0 <= d <= max degree.
  double power(std::uint32_t d) const { return power_table_[d]; }
  std::span<const double> power_table() const noexcept { return power_table_; }

  /// Drops v from S and updates neighbor degrees and the power sum.
  /// Throws std::logic_error when v is already gone.
  void remove_node(NodeId v);

  /// Rebuilds degrees and the power sum from the graph and the alive flags.
  void recompute();

  std::vector<NodeId> live_nodes() const;

 private:
  const Graph* graph_;
  Exponent p_;
  std::vector<double> power_table_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> live_degree_;
  std::size_t live_count_ = 0;
  std::size_t live_edges_ = 0;
  double power_sum_ = 0.0;
};

/// Σ_{v∈S} d_v(S)^p / |S|, zero on the empty set.
double f_p(const PeelState& state);

/// f_p(S)^{1/p}, zero on the empty set.
double m_p(const PeelState& state);

/// Loss in |S|·f_p(S) from deleting v:
/// d_v(S)^p + Σ_{u∈N(v)∩S} (d_u(S)^p − (d_u(S)−1)^p).
double delta_v(const PeelState& state, NodeId v);

void remove_node(PeelState& state, NodeId v);
void recompute(PeelState& state);

// Scratch evaluation of an explicit node set, independent of any PeelState.

double f_p_of(const Graph& g, std::span<const NodeId> nodes, Exponent p);
double m_p_of(const Graph& g, std::span<const NodeId> nodes, Exponent p);

/// p-th root with the empty-set convention, shared by every M_p computation.
double p_root(double fp, Exponent p);

}  // namespace pmds
