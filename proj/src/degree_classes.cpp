#include "cwstream/degree_classes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwstream {

DegreeClassifier::DegreeClassifier(std::size_t n, double c) : c_(c) {
  if (!(c > 1.0)) throw std::invalid_argument("DegreeClassifier: c must be > 1");
  num_classes_ = count_classes(n, c);
  thresholds_.reserve(static_cast<std::size_t>(num_classes_) + 1);
  powers_.reserve(static_cast<std::size_t>(num_classes_) + 1);
  long double acc = 1.0L;
  for (int i = 0; i <= num_classes_; ++i) {
    thresholds_.push_back(static_cast<std::uint64_t>(std::ceil(acc - 1e-9L)));
    powers_.push_back(static_cast<double>(acc));
    acc *= c;
  }
}

int DegreeClassifier::count_classes(std::size_t n, double c) {
  // Smallest L with c^L >= n, by the same threshold arithmetic as class_of.
  long double acc = 1.0L;
  int L = 0;
  while (static_cast<std::uint64_t>(std::ceil(acc - 1e-9L)) < n) {
    acc *= c;
    ++L;
  }
  return L;
}

int DegreeClassifier::class_of(std::uint64_t deg) const {
  if (deg == 0) throw std::invalid_argument("class_of: degree 0 is the isolated bucket");
  // Largest i with t_i <= deg.
  auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), deg);
  int i = static_cast<int>(it - thresholds_.begin()) - 1;
  return std::min(i, num_classes_ - 1);
}

namespace {

std::pair<DegreeClassPartition, ClassStats> partition_impl(const Graph& g, double c,
                                                           bool parallel) {
  const DegreeClassifier cls(g.num_vertices(), c);
  const std::size_t L = static_cast<std::size_t>(cls.num_classes());
  const std::size_t n = g.num_vertices();

  DegreeClassPartition part;
  part.c = c;
  part.num_classes = cls.num_classes();
  part.class_sizes.assign(L, 0);

  ClassStats stats;
  stats.beta.assign(L, 0.0);
  stats.beta_prime.assign(L, 0.0);

  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> block_sizes(blocks);
  std::vector<std::vector<double>> block_beta(blocks);
  std::vector<std::uint64_t> block_isolated(blocks, 0);

#pragma omp parallel for schedule(static) if (parallel)
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<std::uint64_t> sizes(L, 0);
    std::vector<double> beta(L, 0.0);
    std::uint64_t isolated = 0;
    const std::size_t end = std::min(n, (b + 1) * kBlock);
    for (std::size_t v = b * kBlock; v < end; ++v) {
      const std::uint64_t deg = g.degree(static_cast<VertexId>(v));
      if (deg == 0) {
        ++isolated;
        continue;
      }
      const int i = cls.class_of(deg);
      ++sizes[static_cast<std::size_t>(i)];
      beta[static_cast<std::size_t>(i)] += 1.0 / (static_cast<double>(deg) + 1.0);
    }
    block_sizes[b] = std::move(sizes);
    block_beta[b] = std::move(beta);
    block_isolated[b] = isolated;
  }

  // Ordered combine: deterministic for any thread count.
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < L; ++i) {
      part.class_sizes[i] += block_sizes[b][i];
      stats.beta[i] += block_beta[b][i];
    }
    part.isolated_count += block_isolated[b];
  }
  for (std::size_t i = 0; i < L; ++i) {
    stats.beta_prime[i] = static_cast<double>(part.class_sizes[i]) /
                          cls.class_denominator(static_cast<int>(i));
  }
  stats.beta_isolated = static_cast<double>(part.isolated_count);
  return {std::move(part), std::move(stats)};
}

}  // namespace

std::pair<DegreeClassPartition, ClassStats> partition(const Graph& g, double c) {
  return partition_impl(g, c, true);
}

std::pair<DegreeClassPartition, ClassStats> partition_serial(const Graph& g, double c) {
  return partition_impl(g, c, false);
}

std::vector<int> heavy_classes(const ClassStats& stats, double g, double beta_total) {
  const std::size_t L = stats.beta.size();
  const double threshold =
      beta_total / (static_cast<double>(std::max<std::size_t>(L, 1)) * g);
  std::vector<int> heavy;
  if (stats.beta_isolated > 0.0 && stats.beta_isolated >= threshold) {
    heavy.push_back(kIsolatedClass);
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (stats.beta[i] > 0.0 && stats.beta[i] >= threshold) {
      heavy.push_back(static_cast<int>(i));
    }
  }
  return heavy;
}

double beta_sum(const ClassStats& stats, std::span<const int> classes) {
  double sum = 0.0;
  for (int i : classes) {
    sum += i == kIsolatedClass ? stats.beta_isolated : stats.beta[static_cast<std::size_t>(i)];
  }
  return sum;
}

double beta_prime_sum(const ClassStats& stats, std::span<const int> classes) {
  double sum = 0.0;
  for (int i : classes) {
    sum += i == kIsolatedClass ? stats.beta_isolated
                               : stats.beta_prime[static_cast<std::size_t>(i)];
  }
  return sum;
}

}  // namespace cwstream
