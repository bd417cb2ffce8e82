#include "pmds/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pmds {

Exponent::Exponent(double p) : p_(p), small_int_(0) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::invalid_argument("exponent p must be a finite positive number, got " +
                                std::to_string(p));
  for (int k = 1; k <= 4; ++k)
    if (p == double(k)) small_int_ = k;
}

double Exponent::pow(double x) const noexcept {
  if (x == 0.0) return 0.0;
  switch (small_int_) {
    case 1: return x;
    case 2: return x * x;
    case 3: return x * x * x;
    case 4: {
      const double sq = x * x;
      return sq * sq;
    }
    default: return std::pow(x, p_);
  }
}

namespace {

std::vector<double> build_power_table(std::uint32_t max_degree, Exponent p) {
  std::vector<double> table(std::size_t{max_degree} + 1);
  for (std::uint32_t d = 0; d <= max_degree; ++d) table[d] = p.pow(double(d));
  return table;
}

}  // namespace

PeelState::PeelState(const Graph& g, Exponent p)
    : PeelState(g, p, std::vector<bool>(g.node_count(), true)) {}

PeelState::PeelState(const Graph& g, Exponent p, const std::vector<bool>& members)
    : graph_(&g),
      p_(p),
      power_table_(build_power_table(g.max_degree(), p)),
      alive_(g.node_count()),
      live_degree_(g.node_count(), 0) {
  if (members.size() != g.node_count())
    throw std::invalid_argument("PeelState: membership mask size does not match graph");
  for (NodeId v = 0; v < g.node_count(); ++v) alive_[v] = members[v] ? 1 : 0;
  recompute();
}

void PeelState::remove_node(NodeId v) {
  if (v >= alive_.size() || !alive_[v])
    throw std::logic_error("remove_node: node " + std::to_string(v) + " is not in the live set");
  alive_[v] = 0;
  --live_count_;
  power_sum_ -= power_table_[live_degree_[v]];
  for (NodeId u : graph_->neighbors(v)) {
    if (!alive_[u]) continue;
    const std::uint32_t d = live_degree_[u]--;
    power_sum_ += power_table_[d - 1] - power_table_[d];
  }
  live_edges_ -= live_degree_[v];
  live_degree_[v] = 0;
  // Every live degree is now 0, so the sum is exactly 0; drop rounding residue.
  if (live_edges_ == 0) power_sum_ = 0.0;
}

void PeelState::recompute() {
  live_count_ = 0;
  live_edges_ = 0;
  power_sum_ = 0.0;
  for (NodeId v = 0; v < alive_.size(); ++v) {
    if (!alive_[v]) {
      live_degree_[v] = 0;
      continue;
    }
    std::uint32_t d = 0;
    for (NodeId u : graph_->neighbors(v)) d += alive_[u];
    live_degree_[v] = d;
    power_sum_ += power_table_[d];
    live_edges_ += d;
    ++live_count_;
  }
  live_edges_ /= 2;
}

std::vector<NodeId> PeelState::live_nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_count_);
  for (NodeId v = 0; v < alive_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

double f_p(const PeelState& state) {
  if (state.live_count() == 0) return 0.0;
  return state.power_sum() / double(state.live_count());
}

double p_root(double fp, Exponent p) {
  if (fp <= 0.0) return 0.0;
  return p.value() == 1.0 ? fp : std::pow(fp, 1.0 / p.value());
}

double m_p(const PeelState& state) { return p_root(f_p(state), state.exponent()); }

double delta_v(const PeelState& state, NodeId v) {
  if (v >= state.graph().node_count() || !state.alive(v))
    throw std::logic_error("delta_v: node " + std::to_string(v) + " is not in the live set");
  double loss = state.power(state.live_degree(v));
  for (NodeId u : state.graph().neighbors(v)) {
    if (!state.alive(u)) continue;
    const std::uint32_t d = state.live_degree(u);
    loss += state.power(d) - state.power(d - 1);
  }
  return loss;
}

void remove_node(PeelState& state, NodeId v) { state.remove_node(v); }

void recompute(PeelState& state) { state.recompute(); }

double f_p_of(const Graph& g, std::span<const NodeId> nodes, Exponent p) {
  if (nodes.empty()) return 0.0;
  const auto mask = membership_mask(g.node_count(), nodes);
  auto member = [&mask](NodeId v) { return bool(mask[v]); };
  double sum = 0.0;
  std::size_t count = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!mask[v]) continue;
    sum += p.pow(double(induced_degree(g, member, v)));
    ++count;
  }
  return sum / double(count);
}

double m_p_of(const Graph& g, std::span<const NodeId> nodes, Exponent p) {
  return p_root(f_p_of(g, nodes, p), p);
}

}  // namespace pmds
