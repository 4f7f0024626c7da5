#include "cwstream/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cwstream {

namespace {

constexpr std::size_t kBetaBlock = 4096;

// Neumaier-compensated sum of 1/(deg+1) over one block of vertices.
double beta_block(const Graph& g, std::size_t begin, std::size_t end) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t v = begin; v < end; ++v) {
    const double term = 1.0 / (static_cast<double>(g.degree(static_cast<VertexId>(v))) + 1.0);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

double combine_blocks(const std::vector<double>& partial) {
  double sum = 0.0;
  double comp = 0.0;
  for (double term : partial) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double beta_exact_serial(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t blocks = (n + kBetaBlock - 1) / kBetaBlock;
  std::vector<double> partial(blocks, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    partial[b] = beta_block(g, b * kBetaBlock, std::min(n, (b + 1) * kBetaBlock));
  }
  return combine_blocks(partial);
}

double beta_exact(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t blocks = (n + kBetaBlock - 1) / kBetaBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t b = 0; b < blocks; ++b) {
    partial[b] = beta_block(g, b * kBetaBlock, std::min(n, (b + 1) * kBetaBlock));
  }
  // Fixed block boundaries and an ordered combine keep the result identical
  // to the serial path for any thread count.
  return combine_blocks(partial);
}

namespace {

struct MisSearch {
  const std::vector<std::uint32_t>& adj;
  std::uint32_t best;

  void run(std::uint32_t candidates, std::uint32_t size) {
    if (size + static_cast<std::uint32_t>(std::popcount(candidates)) <= best) return;
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    // Branch on the candidate with the most candidate neighbors; removing it
    // shrinks the subproblem fastest.
    std::uint32_t pick = 0;
    int pick_deg = -1;
    std::uint32_t rest = candidates;
    while (rest != 0) {
      const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      const int d = std::popcount(adj[v] & candidates);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    const std::uint32_t bit = std::uint32_t{1} << pick;
    run(candidates & ~(adj[pick] | bit), size + 1);
    run(candidates & ~bit, size);
  }
};

}  // namespace

std::uint64_t alpha_exact(const Graph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (n > limit || n > 32) {
    throw std::out_of_range("alpha_exact: graph has " + std::to_string(n) +
                            " vertices, limit is " + std::to_string(std::min<std::size_t>(limit, 32)));
  }
  if (n == 0) return 0;

  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
  }

  MisSearch search{adj, static_cast<std::uint32_t>(greedy_min_degree_is(g).size())};
  const std::uint32_t all =
      n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  search.run(all, 0);
  return search.best;
}

std::vector<VertexId> greedy_min_degree_is(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<VertexId> result;
  std::size_t remaining = n;
  while (remaining > 0) {
    VertexId pick = 0;
    std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v] && deg[v] < pick_deg) {
        pick = v;
        pick_deg = deg[v];
      }
    }
    result.push_back(pick);

    auto remove = [&](VertexId v) {
      alive[v] = false;
      --remaining;
      for (VertexId u : g.neighbors(v)) {
        if (alive[u]) --deg[u];
      }
    };
    remove(pick);
    for (VertexId u : g.neighbors(pick)) {
      if (alive[u]) remove(u);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

double turan_bound(const Graph& g) {
  if (g.num_vertices() == 0) return 0.0;
  return static_cast<double>(g.num_vertices()) / (g.average_degree() + 1.0);
}

std::uint64_t n_d_oracle(const Graph& g, std::span<const VertexId> order, std::uint64_t d) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) {
    throw std::invalid_argument("n_d_oracle: order must be a permutation of all vertices");
  }
  std::vector<std::size_t> pos(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    if (v >= n || seen[v]) {
      throw std::invalid_argument("n_d_oracle: order is not a permutation");
    }
    seen[v] = true;
    pos[v] = i;
  }

  std::vector<std::uint64_t> deg(n, 0);
  std::uint64_t count = 0;
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    std::uint64_t back = 0;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] < i) {
        ++back;
        if (deg[u] == d) --count;  // u crosses the bound
        ++deg[u];
      }
    }
    deg[v] = back;
    if (back <= d) ++count;
    best = std::max(best, count);
  }
  return best;
}

}  // namespace cwstream
