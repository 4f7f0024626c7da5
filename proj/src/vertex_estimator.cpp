#include "cwstream/vertex_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwstream {

std::size_t DegTestConfig::cap() const {
  if (cap_override > 0) return cap_override;
  const double ep = eps_prime();
  const double factor = 28.0 / (ep * ep);
  const double bound = std::ceil(factor * std::log(static_cast<double>(n)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(bound));
}

DegTest::DegTest(DegTestConfig cfg)
    : cfg_(cfg), cap_(cfg.cap()), coin_(cfg.seed, cfg.instance_id) {
  if (!(cfg.eps > 0.0) || !(cfg.eps <= 1.0)) {
    throw std::invalid_argument("DegTest: eps must be in (0, 1]");
  }
}

void DegTest::process(VertexId v, std::span<const VertexId> back) {
  // One admission coin per vertex, flipped at arrival with the current p.
  const bool admitted = coin_.flip(p_);

  // Prefix degrees of tracked vertices grow by the back-edges of v; members
  // pushed above d leave for good.
  for (VertexId u : back) {
    auto it = sample_.find(u);
    if (it == sample_.end()) continue;
    if (++it->second > cfg_.d) sample_.erase(it);
  }
  if (admitted && back.size() <= cfg_.d) {
    sample_.emplace(v, back.size());
  }

  peak_ = std::max(peak_, sample_.size());
  if (phase_ == 0) m_ = std::max(m_, static_cast<double>(sample_.size()));

  while (sample_.size() >= cap_) {
    m_ = static_cast<double>(cap_) / p_;
    downsample();
    p_ /= 1.0 + cfg_.eps_prime();
    ++phase_;
  }
}

void DegTest::downsample() {
  // Keep each member with probability 1/(1+eps'), so the sample stays a
  // uniform p-sample after p shrinks by the same factor. Members are visited
  // in id order so the coin sequence does not depend on hashing.
  const double keep = 1.0 / (1.0 + cfg_.eps_prime());
  std::vector<VertexId> members;
  members.reserve(sample_.size());
  for (const auto& [v, deg] : sample_) members.push_back(v);
  std::sort(members.begin(), members.end());
  for (VertexId v : members) {
    if (!coin_.flip(keep)) sample_.erase(v);
  }
}

int log2_ceil(std::size_t n) {
  int i = 0;
  std::size_t pow = 1;
  while (pow < n) {
    pow *= 2;
    ++i;
  }
  return i;
}

VertexEstimate estimate_vertex_arrival(const GraphStream& stream, std::uint64_t seed,
                                       std::size_t cap_override) {
  if (stream.mode != StreamMode::VertexArrival) {
    throw ValidationError(ValidationErrorKind::ModeMismatch,
                          "vertex estimator requires a vertex-arrival stream");
  }
  const int top = log2_ceil(stream.declared_n);
  std::vector<DegTest> tests;
  tests.reserve(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    DegTestConfig cfg;
    cfg.d = std::uint64_t{1} << i;
    cfg.eps = 0.5;
    cfg.n = stream.declared_n;
    cfg.seed = seed;
    cfg.instance_id = static_cast<std::uint64_t>(i);
    cfg.cap_override = cap_override;
    tests.emplace_back(cfg);
  }

  for (const StreamEvent& ev : stream.events) {
    const auto& va = std::get<VertexArrival>(ev);
    for (DegTest& t : tests) t.process(va.v, va.back);
  }

  VertexEstimate out;
  out.per_degree.resize(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    out.per_degree[i] = tests[i].finalize();
    const double d = static_cast<double>(std::uint64_t{1} << i);
    const double value = out.per_degree[i] / (2.0 * (d + 1.0));
    if (value > out.gamma_hat) {
      out.gamma_hat = value;
      out.argmax_instance = static_cast<int>(i);
    }
    out.peak_sample_total += tests[i].peak_sample();
  }
  out.space_bits = static_cast<std::uint64_t>(out.peak_sample_total) * 128;
  return out;
}

}  // namespace cwstream
