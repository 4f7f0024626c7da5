#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwstream/graph.hpp"

namespace cwstream {

// Caro-Wei bound: sum over vertices of 1/(deg(v)+1). Compensated summation,
// blocked so the OpenMP version gives the same bits for any thread count.
double beta_exact(const Graph& g);
double beta_exact_serial(const Graph& g);

inline constexpr std::size_t kAlphaExactLimit = 24;

// Exact independence number by branch and bound over bitmasks.
// Throws std::out_of_range above the vertex limit.
std::uint64_t alpha_exact(const Graph& g, std::size_t limit = kAlphaExactLimit);

// Min-degree greedy on the residual graph, smallest id breaking ties.
// Returns an independent set of size >= beta_exact(g).
std::vector<VertexId> greedy_min_degree_is(const Graph& g);

// n / (average degree + 1); 0 for the empty graph.
double turan_bound(const Graph& g);

// Maximum over stream prefixes of the number of vertices with degree <= d in
// the prefix-induced subgraph, for the given arrival order.
std::uint64_t n_d_oracle(const Graph& g, std::span<const VertexId> order, std::uint64_t d);

}  // namespace cwstream
