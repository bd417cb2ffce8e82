#include "pmds/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace pmds {

OracleLimitError::OracleLimitError(std::size_t node_count, std::size_t limit)
    : std::length_error("exact optimum refused: graph has " + std::to_string(node_count) +
                        " nodes, enumeration limit is " + std::to_string(limit)),
      limit_(limit) {}

OracleResult exact_optimum(const Graph& g, Exponent p, std::size_t max_nodes) {
  if (max_nodes > kOracleHardMaxNodes)
    throw std::invalid_argument("oracle limit cannot exceed " + std::to_string(kOracleHardMaxNodes));
  const std::size_t n = g.node_count();
  if (n > max_nodes) throw OracleLimitError(n, max_nodes);

  using Mask = std::uint64_t;
  std::vector<Mask> nbr(n, 0);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u : g.neighbors(v)) nbr[v] |= Mask{1} << u;
  std::vector<double> power(n + 1);
  for (std::size_t d = 0; d <= n; ++d) power[d] = p.pow(double(d));

  Mask best = 0;
  double best_fp = 0.0;
  int best_size = 0;
  const Mask end = Mask{1} << n;
  for (Mask s = 1; s < end; ++s) {
    double sum = 0.0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      sum += power[std::popcount(nbr[v] & s)];
    }
    const int size = std::popcount(s);
    const double fp = sum / double(size);
    bool take = fp > best_fp;
    if (!take && fp == best_fp) {
      if (size < best_size) {
        take = true;
      } else if (size == best_size) {
        const Mask diff = s ^ best;
        take = (diff & (~diff + 1) & s) != 0;  // s holds the smallest differing node
      }
    }
    if (take) {
      best = s;
      best_fp = fp;
      best_size = size;
    }
  }

  OracleResult result;
  for (Mask rest = best; rest != 0; rest &= rest - 1)
    result.best_set.push_back(static_cast<NodeId>(std::countr_zero(rest)));
  result.fp_value = best_fp;
  result.mp_value = p_root(best_fp, p);
  return result;
}

}  // namespace pmds
