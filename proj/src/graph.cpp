#include "cwstream/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace cwstream {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  g.offsets_.assign(n + 1, 0);

  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ValidationError(ValidationErrorKind::VertexOutOfRange,
                            "edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                                " out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw ValidationError(ValidationErrorKind::SelfLoop,
                            "self-loop at vertex " + std::to_string(e.u));
    }
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.nbrs_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.nbrs_[cursor[e.u]++] = e.v;
    g.nbrs_[cursor[e.v]++] = e.u;
  }

  for (VertexId v = 0; v < n; ++v) {
    auto begin = g.nbrs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto end = g.nbrs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(begin, end);
    auto dup = std::adjacent_find(begin, end);
    if (dup != end) {
      throw ValidationError(ValidationErrorKind::DuplicateEdge,
                            "duplicate edge {" + std::to_string(std::min<VertexId>(v, *dup)) +
                                "," + std::to_string(std::max<VertexId>(v, *dup)) + "}");
    }
  }
  return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_) return false;
  auto ns = neighbors(a);
  return std::binary_search(ns.begin(), ns.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace cwstream
