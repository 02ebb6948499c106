#pragma once

#include <cstddef>
#include <random>

#include "mislab/graph.hpp"

namespace mislab::testing {

// G(n, p) with a caller-owned engine.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Brute-force MIS count over all 2^n subsets; n <= 20.
inline std::size_t brute_mis_count(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.insert(v);
    }
    if (is_maximal_independent(g, s)) ++count;
  }
  return count;
}

}  // namespace mislab::testing
