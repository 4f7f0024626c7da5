#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cwstream/degree_classes.hpp"
#include "cwstream/stream.hpp"

namespace cwstream {

// Parameters of the sampling estimator for edge-arrival streams. gamma is an
// assumed lower bound on beta(G); the sampling probability and the class
// acceptance threshold are derived from it before the stream starts.
struct EdgeEstimatorConfig {
  double delta = 0.1;
  double c = 2.0;
  double g = 2.0;
  double gamma = 1.0;
  std::size_t n = 0;
  std::uint64_t seed = 1;

  double chernoff_const() const { return 24.0 / (delta * delta); }
  // gamma / (ceil(log_c n) * g), the heavy-class size threshold.
  double v0() const;
  // min(1, C log(n) / v0); natural log. Clamping to 1 turns the estimator
  // into the exhaustive exact-degree path.
  double sampling_p() const;
};

struct EstimateReport {
  double beta_hat = 0.0;
  double p = 1.0;
  std::uint64_t sample_size = 0;
  std::uint64_t space_bits = 0;
  // Contributions of classes that passed the size threshold, ascending by
  // class index with the isolated bucket (kIsolatedClass) first.
  std::vector<std::pair<int, double>> per_class;

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

// One-pass uniform vertex sampler with streamed degree maintenance.
// Membership of a vertex in the sample is decided lazily from (seed, id), so
// the final report does not depend on the edge order.
class EdgeArrivalEstimator {
 public:
  explicit EdgeArrivalEstimator(EdgeEstimatorConfig cfg);

  bool sampled(VertexId v) const;
  void process(const Edge& e);
  void process(const GraphStream& stream);

  std::size_t events_seen() const noexcept { return events_; }
  double p() const noexcept { return p_; }

  EstimateReport finalize() const;

 private:
  EdgeEstimatorConfig cfg_;
  double p_;
  std::unordered_map<VertexId, std::uint64_t> degree_;
  std::size_t events_ = 0;
};

// Theorem-2 parameterization: g = 10/eps, c = 1 + eps/10, delta = eps/10.
// With gamma <= beta(G) the result is within factor 1+eps of beta(G) w.h.p.;
// with gamma too large the upper bound beta_hat <= (1+delta) beta(G) remains.
EstimateReport estimate_eps(const GraphStream& stream, double eps, double gamma,
                            std::uint64_t seed);

struct PhiEstimate {
  double value = 0.0;
  bool inner_estimate_used = false;
  EstimateReport report;
};

// Decision wrapper: runs estimate_eps with gamma = gamma_prime * phi^2 and
// eps = 1/4, returns the inner estimate if it reaches gamma / (1+eps) and
// gamma_prime * phi otherwise. phi-approximation of beta(G) w.h.p. when
// gamma_prime <= beta(G).
PhiEstimate estimate_phi(const GraphStream& stream, double phi, double gamma_prime,
                         std::uint64_t seed);

}  // namespace cwstream
