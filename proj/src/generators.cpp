#include "pmds/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <vector>

namespace pmds {

Graph erdos_renyi(std::size_t n, double edge_prob, Rng& rng) {
  std::bernoulli_distribution coin(std::clamp(edge_prob, 0.0, 1.0));
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph erdos_renyi_m(std::size_t n, std::size_t m, Rng& rng) {
  if (n < 2) return Graph::from_edges(n, {});
  const std::size_t max_m = n * (n - 1) / 2;
  m = std::min(m, max_m);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    NodeId u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert((std::uint64_t{u} << 32) | v).second) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph chung_lu_power_law(std::size_t n, double mean_edge_prob, Rng& rng, double exponent) {
  if (n < 2) return Graph::from_edges(n, {});
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(double(i + 1), -1.0 / (exponent - 1.0));
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  double pair_mass = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_mass += w[i] * w[j] / total;
  const double pairs = double(n) * double(n - 1) / 2.0;
  const double scale = mean_edge_prob * pairs / pair_mass;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (unit(rng) < std::min(1.0, scale * w[u] * w[v] / total)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace pmds
