#include "cwstream/edge_estimator.hpp"

#include <cmath>
#include <stdexcept>

#include "cwstream/rng.hpp"

namespace cwstream {

double EdgeEstimatorConfig::v0() const {
  const int L = std::max(1, DegreeClassifier::count_classes(n, c));
  return gamma / (static_cast<double>(L) * g);
}

double EdgeEstimatorConfig::sampling_p() const {
  const double v = v0();
  if (!(v > 0.0)) throw std::invalid_argument("edge estimator: v0 must be positive");
  return std::min(1.0, chernoff_const() * std::log(static_cast<double>(n)) / v);
}

EdgeArrivalEstimator::EdgeArrivalEstimator(EdgeEstimatorConfig cfg)
    : cfg_(cfg), p_(cfg.sampling_p()) {
  if (!(cfg.delta > 0.0) || !(cfg.c > 1.0) || !(cfg.g > 1.0) || !(cfg.gamma > 0.0)) {
    throw std::invalid_argument("edge estimator: require delta > 0, c > 1, g > 1, gamma > 0");
  }
}

bool EdgeArrivalEstimator::sampled(VertexId v) const {
  return rng::bernoulli(cfg_.seed, v, p_);
}

void EdgeArrivalEstimator::process(const Edge& e) {
  ++events_;
  if (sampled(e.u)) ++degree_[e.u];
  if (sampled(e.v)) ++degree_[e.v];
}

void EdgeArrivalEstimator::process(const GraphStream& stream) {
  if (stream.mode != StreamMode::EdgeArrival) {
    throw ValidationError(ValidationErrorKind::ModeMismatch,
                          "edge estimator requires an edge-arrival stream");
  }
  for (const StreamEvent& ev : stream.events) {
    process(std::get<EdgeArrival>(ev).e);
  }
}

namespace {

EstimateReport build_report(const EdgeEstimatorConfig& cfg, double p,
                            const std::unordered_map<VertexId, std::uint64_t>& degree) {
  const DegreeClassifier cls(cfg.n, cfg.c);
  const std::size_t L = static_cast<std::size_t>(cls.num_classes());

  std::vector<std::uint64_t> class_counts(L, 0);
  for (const auto& [v, deg] : degree) {
    if (deg > 0) ++class_counts[static_cast<std::size_t>(cls.class_of(deg))];
  }

  // Sampled vertices that never appeared in an edge are isolated; membership
  // is lazy, so scan the id range to count them like an up-front sample would.
  std::uint64_t isolated = 0;
  for (std::size_t v = 0; v < cfg.n; ++v) {
    const VertexId id = static_cast<VertexId>(v);
    if (rng::bernoulli(cfg.seed, id, p) && !degree.contains(id)) ++isolated;
  }

  EstimateReport report;
  report.p = p;
  report.sample_size = isolated;
  for (std::uint64_t cc : class_counts) report.sample_size += cc;
  report.space_bits = report.sample_size * 128;  // 64-bit id + 64-bit counter

  const double threshold = cfg.v0() * p / (1.0 + cfg.delta);
  double beta_hat = 0.0;
  if (isolated > 0 && static_cast<double>(isolated) >= threshold) {
    const double contrib = static_cast<double>(isolated) / p;
    report.per_class.emplace_back(kIsolatedClass, contrib);
    beta_hat += contrib;
  }
  for (std::size_t i = 0; i < L; ++i) {
    const double size = static_cast<double>(class_counts[i]);
    if (class_counts[i] > 0 && size >= threshold) {
      const double contrib = size / (cls.class_denominator(static_cast<int>(i)) * p);
      report.per_class.emplace_back(static_cast<int>(i), contrib);
      beta_hat += contrib;
    }
  }
  report.beta_hat = beta_hat;
  return report;
}

}  // namespace

EstimateReport EdgeArrivalEstimator::finalize() const {
  return build_report(cfg_, p_, degree_);
}

EstimateReport estimate_eps(const GraphStream& stream, double eps, double gamma,
                            std::uint64_t seed) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("estimate_eps: eps must be in (0,1)");
  }
  EdgeEstimatorConfig cfg;
  cfg.delta = eps / 10.0;
  cfg.c = 1.0 + eps / 10.0;
  cfg.g = 10.0 / eps;
  cfg.gamma = gamma;
  cfg.n = stream.declared_n;
  cfg.seed = seed;

  EdgeArrivalEstimator est(cfg);
  est.process(stream);
  return est.finalize();
}

PhiEstimate estimate_phi(const GraphStream& stream, double phi, double gamma_prime,
                         std::uint64_t seed) {
  if (!(phi > 2.0)) throw std::invalid_argument("estimate_phi: phi must be > 2");
  constexpr double kEps = 0.25;
  const double gamma = gamma_prime * phi * phi;

  PhiEstimate result;
  result.report = estimate_eps(stream, kEps, gamma, seed);
  if (result.report.beta_hat >= gamma / (1.0 + kEps)) {
    result.value = result.report.beta_hat;
    result.inner_estimate_used = true;
  } else {
    result.value = gamma_prime * phi;
    result.inner_estimate_used = false;
  }
  return result;
}

}  // namespace cwstream
