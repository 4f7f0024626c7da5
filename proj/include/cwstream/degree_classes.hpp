#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cwstream/graph.hpp"

namespace cwstream {

// Geometric degree classes for a growth factor c > 1: class i holds the
// vertices with c^i <= deg < c^(i+1). Boundaries are decided by comparing the
// integer degree against precomputed integer thresholds t_i = ceil(c^i), so a
// degree within rounding distance of a power of c still lands in one class
// consistently everywhere the classifier is used.
class DegreeClassifier {
 public:
  DegreeClassifier(std::size_t n, double c);

  double growth() const noexcept { return c_; }
  // ceil(log_c n): the smallest L with c^L >= n.
  int num_classes() const noexcept { return num_classes_; }

  // Class of a positive degree; degrees of 0 are the caller's isolated bucket.
  int class_of(std::uint64_t deg) const;

  // c^i, consistent with the thresholds.
  double power(int i) const { return powers_[static_cast<std::size_t>(i)]; }
  // c^(i+1) + 1, the per-class beta-prime denominator.
  double class_denominator(int i) const { return power(i + 1) + 1.0; }

  static int count_classes(std::size_t n, double c);

 private:
  double c_;
  int num_classes_;
  std::vector<std::uint64_t> thresholds_;  // t_i = ceil(c^i), i in [0, num_classes]
  std::vector<double> powers_;             // c^i, same range
};

struct DegreeClassPartition {
  double c = 2.0;
  int num_classes = 0;
  std::vector<std::uint64_t> class_sizes;
  std::uint64_t isolated_count = 0;
};

// Per-class accounting: beta[i] sums 1/(deg+1) over class i, beta_prime[i] is
// |V_i| / (c^(i+1)+1). Isolated vertices contribute exactly 1 each, so their
// bucket has beta == beta_prime == isolated count.
struct ClassStats {
  std::vector<double> beta;
  std::vector<double> beta_prime;
  double beta_isolated = 0.0;
};

std::pair<DegreeClassPartition, ClassStats> partition(const Graph& g, double c);
std::pair<DegreeClassPartition, ClassStats> partition_serial(const Graph& g, double c);

// Index used for the isolated bucket in heavy-class selections and in
// estimator per-class reports.
inline constexpr int kIsolatedClass = -1;

// Classes whose beta mass reaches beta_total / (max(1, L) * g), the heavy
// classes. The isolated bucket takes part under the same rule and shows up as
// kIsolatedClass. Indices are returned ascending, isolated bucket first.
std::vector<int> heavy_classes(const ClassStats& stats, double g, double beta_total);

double beta_sum(const ClassStats& stats, std::span<const int> classes);
double beta_prime_sum(const ClassStats& stats, std::span<const int> classes);

}  // namespace cwstream
