#pragma once

#include <cstdint>
#include <random>

#include "pmds/graph.hpp"

namespace pmds {

using Rng = std::mt19937_64;

/// G(n, q): every pair independently with probability q.
Graph erdos_renyi(std::size_t n, double edge_prob, Rng& rng);

/// G(n, m): exactly min(m, n(n-1)/2) distinct edges drawn uniformly.
Graph erdos_renyi_m(std::size_t n, std::size_t m, Rng& rng);

/// Chung-Lu graph with power-law expected degrees (weights ∝ (i+1)^(-1/(exponent-1))),
/// scaled so the mean pair probability is about `mean_edge_prob`; per-pair
/// probabilities are clamped to 1.
Graph chung_lu_power_law(std::size_t n, double mean_edge_prob, Rng& rng, double exponent = 2.5);

}  // namespace pmds
