#pragma once

#include <cstdint>
#include <vector>

#include "cwstream/graph.hpp"
#include "cwstream/stream.hpp"

namespace cwstream {

// Uniform simple graph with exactly m edges.
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

// Two-party lower-bound instance. Vertices are laid out [A | B | C | U_0 ... U_{k-1}]
// with |A| = |B| = a = k*q, |C| = z, |U_i| = q = 2*z*c^2. A u B is a clique;
// U_i connects completely to A exactly when i is not in X, and to B exactly
// when i is not in Y. With X and Y disjoint, beta stays within [z, z+2]; with
// an intersection it jumps to at least q + z = z*(2c^2 + 1).
struct GadgetSpec {
  std::size_t k = 1;
  std::size_t z = 2;
  std::uint64_t c = 2;           // stressed approximation factor, integer >= 2
  std::vector<std::uint32_t> X;  // subsets of [0, k)
  std::vector<std::uint32_t> Y;

  std::size_t q() const { return 2 * z * static_cast<std::size_t>(c * c); }
  std::size_t a() const { return k * q(); }
  std::size_t total_n() const { return 3 * k * q() + z; }
  bool intersecting() const;
  void validate() const;

  // Block start offsets in the vertex layout.
  std::size_t a_begin() const { return 0; }
  std::size_t b_begin() const { return a(); }
  std::size_t c_begin() const { return 2 * a(); }
  std::size_t u_begin(std::size_t i) const { return 2 * a() + z + i * q(); }
};

Graph gen_gadget(const GadgetSpec& spec);

struct GadgetStream {
  GraphStream stream;
  // Number of leading events known to the first party: everything except the
  // B block, whose arrivals close the stream.
  std::size_t cut_index = 0;
  GadgetSpec spec;
};

// Vertex-arrival realization of the gadget: A, C and all U blocks arrive
// first (edges within A plus the U_i-A connections), then B arrives with the
// remaining clique and U_i-B edges. The seed shuffles arrival order within
// the two halves; the cut position is preserved.
GadgetStream gen_gadget_stream(const GadgetSpec& spec, std::uint64_t seed);

struct OrderPolicy {
  enum class Kind { UniformShuffle, ByDegreeAscending, ByDegreeDescending, GivenPermutation };

  Kind kind = Kind::UniformShuffle;
  std::uint64_t seed = 1;
  std::vector<VertexId> perm;  // GivenPermutation only

  static OrderPolicy shuffle(std::uint64_t seed) { return {Kind::UniformShuffle, seed, {}}; }
  static OrderPolicy degree_ascending() { return {Kind::ByDegreeAscending, 0, {}}; }
  static OrderPolicy degree_descending() { return {Kind::ByDegreeDescending, 0, {}}; }
  static OrderPolicy given(std::vector<VertexId> perm) {
    return {Kind::GivenPermutation, 0, std::move(perm)};
  }
};

// Serializes a graph as a stream. Vertex mode emits vertices in policy order,
// each with back-edges to earlier vertices; edge mode emits the edge list in
// policy order (degree policies sort edges by endpoint degree sum).
GraphStream to_stream(const Graph& g, StreamMode mode, const OrderPolicy& policy);

}  // namespace cwstream
