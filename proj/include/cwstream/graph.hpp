#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwstream {

using VertexId = std::uint32_t;

// Undirected edge, stored canonically with the smaller id first.
struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

enum class ValidationErrorKind {
  SelfLoop,
  DuplicateEdge,
  ArrivalOrder,
  VertexOutOfRange,
  ModeMismatch,
  Parse,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrorKind kind, std::string message, std::size_t line = 0)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line) {}

  ValidationErrorKind kind() const noexcept { return kind_; }
  // 1-based input line for parser errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ValidationErrorKind kind_;
  std::size_t line_;
};

// Immutable simple undirected graph over dense vertex ids [0, n).
// CSR adjacency; neighbor lists are sorted and duplicate-free.
class Graph {
 public:
  Graph() = default;

  // Validates: ids < n, no self-loops, no duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return m_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId a, VertexId b) const;

  // Canonical edge list, ordered by (u, v).
  std::vector<Edge> edges() const;

  double average_degree() const noexcept {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(m_) / static_cast<double>(n_);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> nbrs_;
};

}  // namespace cwstream
