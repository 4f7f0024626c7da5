#include "cwstream/stream_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "cwstream/rng.hpp"

namespace cwstream {

namespace {

// Rank of the canonical pair (u, v), u < v, in the lexicographic listing of
// all pairs over [0, n).
std::uint64_t pair_rank(std::uint64_t u, std::uint64_t v, std::uint64_t n) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Edge pair_unrank(std::uint64_t r, std::uint64_t n) {
  // Invert u*n - u(u+1)/2 <= r with a float seed plus integer fix-up.
  const double nd = static_cast<double>(n);
  double guess = nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(r));
  std::uint64_t u = guess <= 0.0 ? 0 : static_cast<std::uint64_t>(guess);
  while (u + 1 < n && pair_rank(u + 1, u + 2, n) <= r) ++u;
  while (u > 0 && pair_rank(u, u + 1, n) > r) --u;
  const std::uint64_t v = r - pair_rank(u, u + 1, n) + u + 1;
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > total) {
    throw std::invalid_argument("gen_gnm: m=" + std::to_string(m) +
                                " exceeds the " + std::to_string(total) +
                                " possible edges on n=" + std::to_string(n));
  }
  // Floyd's uniform m-subset of the pair ranks.
  std::mt19937_64 eng(seed);
  std::unordered_set<std::uint64_t> ranks;
  ranks.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng::uniform_below(eng, j + 1);
    ranks.insert(ranks.contains(t) ? j : t);
  }
  std::vector<std::uint64_t> sorted(ranks.begin(), ranks.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t r : sorted) edges.push_back(pair_unrank(r, n));
  return Graph::from_edges(n, edges);
}

bool GadgetSpec::intersecting() const {
  for (std::uint32_t i : X) {
    if (std::find(Y.begin(), Y.end(), i) != Y.end()) return true;
  }
  return false;
}

void GadgetSpec::validate() const {
  if (k == 0) throw std::invalid_argument("gadget: k must be >= 1");
  if (z < 2) throw std::invalid_argument("gadget: z must be >= 2");
  if (c < 2) throw std::invalid_argument("gadget: c must be an integer >= 2");
  auto check_set = [&](const std::vector<std::uint32_t>& s, const char* name) {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t i : s) {
      if (i >= k) throw std::invalid_argument(std::string("gadget: ") + name +
                                              " index out of range");
      if (!seen.insert(i).second) {
        throw std::invalid_argument(std::string("gadget: duplicate index in ") + name);
      }
    }
  };
  check_set(X, "X");
  check_set(Y, "Y");
}

Graph gen_gadget(const GadgetSpec& spec) {
  spec.validate();
  const std::size_t a = spec.a();
  const std::size_t q = spec.q();
  const std::size_t n = spec.total_n();

  std::vector<bool> in_x(spec.k, false), in_y(spec.k, false);
  for (std::uint32_t i : spec.X) in_x[i] = true;
  for (std::uint32_t i : spec.Y) in_y[i] = true;

  std::vector<Edge> edges;
  // Clique on A u B.
  for (std::size_t u = 0; u < 2 * a; ++u) {
    for (std::size_t v = u + 1; v < 2 * a; ++v) {
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
  }
  // U_i to A when i not in X; U_i to B when i not in Y.
  for (std::size_t i = 0; i < spec.k; ++i) {
    const std::size_t u0 = spec.u_begin(i);
    for (std::size_t u = u0; u < u0 + q; ++u) {
      if (!in_x[i]) {
        for (std::size_t v = 0; v < a; ++v) {
          edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(u)});
        }
      }
      if (!in_y[i]) {
        for (std::size_t v = a; v < 2 * a; ++v) {
          edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(u)});
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

GadgetStream gen_gadget_stream(const GadgetSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t a = spec.a();
  const std::size_t q = spec.q();
  const std::size_t n = spec.total_n();

  std::vector<bool> in_x(spec.k, false), in_y(spec.k, false);
  for (std::uint32_t i : spec.X) in_x[i] = true;
  for (std::uint32_t i : spec.Y) in_y[i] = true;

  std::vector<VertexId> first_half;  // A, C, U blocks
  first_half.reserve(n - a);
  for (std::size_t v = 0; v < a; ++v) first_half.push_back(static_cast<VertexId>(v));
  for (std::size_t v = 2 * a; v < n; ++v) first_half.push_back(static_cast<VertexId>(v));
  std::vector<VertexId> second_half;  // B block
  second_half.reserve(a);
  for (std::size_t v = a; v < 2 * a; ++v) second_half.push_back(static_cast<VertexId>(v));

  std::mt19937_64 eng(seed);
  rng::shuffle(eng, first_half);
  rng::shuffle(eng, second_half);

  auto block_of = [&](VertexId v) -> int {
    // 0: A, 1: B, 2: C, 3+i: U_i
    if (v < a) return 0;
    if (v < 2 * a) return 1;
    if (v < 2 * a + spec.z) return 2;
    return 3 + static_cast<int>((v - 2 * a - spec.z) / q);
  };
  auto adjacent = [&](VertexId u, VertexId v) {
    const int bu = block_of(u), bv = block_of(v);
    if (bu <= 1 && bv <= 1) return true;  // clique on A u B
    if (bu == 2 || bv == 2) return false;
    const int clique = std::min(bu, bv);
    const int block = std::max(bu, bv);
    if (clique > 1 || block < 3) return false;  // U-U pairs
    const std::size_t i = static_cast<std::size_t>(block - 3);
    return clique == 0 ? !in_x[i] : !in_y[i];
  };

  GadgetStream out;
  out.spec = spec;
  out.stream.mode = StreamMode::VertexArrival;
  out.stream.declared_n = n;
  out.stream.events.reserve(n);
  out.cut_index = first_half.size();

  std::vector<VertexId> arrived;
  arrived.reserve(n);
  auto emit = [&](VertexId v) {
    VertexArrival va;
    va.v = v;
    for (VertexId u : arrived) {
      if (adjacent(u, v)) va.back.push_back(u);
    }
    arrived.push_back(v);
    out.stream.events.push_back(std::move(va));
  };
  for (VertexId v : first_half) emit(v);
  for (VertexId v : second_half) emit(v);
  return out;
}

GraphStream to_stream(const Graph& g, StreamMode mode, const OrderPolicy& policy) {
  GraphStream out;
  out.mode = mode;
  out.declared_n = g.num_vertices();

  if (mode == StreamMode::EdgeArrival) {
    std::vector<Edge> edges = g.edges();
    switch (policy.kind) {
      case OrderPolicy::Kind::UniformShuffle: {
        std::mt19937_64 eng(policy.seed);
        rng::shuffle(eng, edges);
        break;
      }
      case OrderPolicy::Kind::ByDegreeAscending:
      case OrderPolicy::Kind::ByDegreeDescending: {
        auto weight = [&](const Edge& e) { return g.degree(e.u) + g.degree(e.v); };
        std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
          return policy.kind == OrderPolicy::Kind::ByDegreeAscending
                     ? weight(x) < weight(y)
                     : weight(x) > weight(y);
        });
        break;
      }
      case OrderPolicy::Kind::GivenPermutation: {
        if (policy.perm.size() != edges.size()) {
          throw std::invalid_argument("to_stream: permutation size must match edge count");
        }
        std::vector<Edge> reordered(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
          reordered[i] = edges.at(policy.perm[i]);
        }
        edges = std::move(reordered);
        break;
      }
    }
    out.events.reserve(edges.size());
    for (const Edge& e : edges) out.events.push_back(EdgeArrival{e});
    return out;
  }

  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  switch (policy.kind) {
    case OrderPolicy::Kind::UniformShuffle: {
      std::mt19937_64 eng(policy.seed);
      rng::shuffle(eng, order);
      break;
    }
    case OrderPolicy::Kind::ByDegreeAscending:
      std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        return g.degree(x) < g.degree(y);
      });
      break;
    case OrderPolicy::Kind::ByDegreeDescending:
      std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        return g.degree(x) > g.degree(y);
      });
      break;
    case OrderPolicy::Kind::GivenPermutation:
      if (policy.perm.size() != order.size()) {
        throw std::invalid_argument("to_stream: permutation size must match vertex count");
      }
      order = policy.perm;
      break;
  }

  std::vector<bool> arrived(g.num_vertices(), false);
  out.events.reserve(order.size());
  for (VertexId v : order) {
    VertexArrival va;
    va.v = v;
    for (VertexId u : g.neighbors(v)) {
      if (arrived[u]) va.back.push_back(u);
    }
    arrived[v] = true;
    out.events.push_back(std::move(va));
  }
  return out;
}

}  // namespace cwstream
