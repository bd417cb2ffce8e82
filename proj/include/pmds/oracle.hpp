#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pmds/graph.hpp"
#include "pmds/objective.hpp"

namespace pmds {

/// Default enumeration budget: 2^24 subsets.
inline constexpr std::size_t kDefaultOracleMaxNodes = 24;
/// Hard ceiling for the bitmask representation.
inline constexpr std::size_t kOracleHardMaxNodes = 32;

/// The graph is too large to enumerate within the requested budget.
class OracleLimitError : public std::length_error {
 public:
  OracleLimitError(std::size_t node_count, std::size_t limit);
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

struct OracleResult {
  std::vector<NodeId> best_set;  // ascending
  double fp_value = 0.0;
  double mp_value = 0.0;
};

/// Exact maximizer of f_p over all 2^n subsets. Ties go to the smaller set,
/// then to the lexicographically smaller sorted node list; a graph without
/// edges therefore yields the empty set.
OracleResult exact_optimum(const Graph& g, Exponent p,
                           std::size_t max_nodes = kDefaultOracleMaxNodes);

}  // namespace pmds
