#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cwstream/rng.hpp"
#include "cwstream/stream.hpp"

namespace cwstream {

// Streaming estimator of n_d: the maximum over stream prefixes of the number
// of vertices with degree <= d in the prefix graph.
struct DegTestConfig {
  std::uint64_t d = 1;
  double eps = 0.5;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::uint64_t instance_id = 0;
  // 0 derives the bound from eps and n; a value > n makes the run exact.
  std::size_t cap_override = 0;

  double eps_prime() const { return eps / 2.0; }
  std::size_t cap() const;
};

class DegTest {
 public:
  explicit DegTest(DegTestConfig cfg);

  void process(VertexId v, std::span<const VertexId> back);

  // The running estimate m; after the stream it approximates n_d within a
  // factor 1+eps w.h.p., and is exact if no downsampling occurred.
  double current_estimate() const noexcept { return m_; }
  double finalize() const noexcept { return m_; }

  double p() const noexcept { return p_; }
  int phase() const noexcept { return phase_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t sample_count() const noexcept { return sample_.size(); }
  std::size_t peak_sample() const noexcept { return peak_; }
  bool contains(VertexId v) const { return sample_.contains(v); }

 private:
  void downsample();

  DegTestConfig cfg_;
  std::size_t cap_;
  rng::Coin coin_;
  double p_ = 1.0;
  int phase_ = 0;
  double m_ = 0.0;
  std::unordered_map<VertexId, std::uint64_t> sample_;
  std::size_t peak_ = 0;
};

struct VertexEstimate {
  double gamma_hat = 0.0;
  int argmax_instance = 0;
  std::vector<double> per_degree;  // estimate of n_{2^i} per instance i
  std::size_t peak_sample_total = 0;
  std::uint64_t space_bits = 0;

  friend bool operator==(const VertexEstimate&, const VertexEstimate&) = default;
};

// One pass over a vertex-arrival stream, fanning every event out to
// ceil(log2 n) + 1 DegTest instances with d = 2^i, then returning
// max_i n~_{2^i} / (2 (2^i + 1)). The result is at most alpha(G) and at
// least a log-factor below beta(G), both w.h.p.
VertexEstimate estimate_vertex_arrival(const GraphStream& stream, std::uint64_t seed,
                                       std::size_t cap_override = 0);

// Smallest I with 2^I >= n; instance count is I + 1.
int log2_ceil(std::size_t n);

}  // namespace cwstream
