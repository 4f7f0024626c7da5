#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cwstream/graph.hpp"
#include "cwstream/stream.hpp"

namespace cwstream {

enum class EstimatorKind { EdgeEps, EdgePhi, Vertex, DegTest };

const char* estimator_name(EstimatorKind kind);

struct TrialPlan {
  EstimatorKind estimator = EstimatorKind::EdgeEps;
  double eps = 0.25;
  double phi = 3.0;
  // 0 selects gamma automatically: n / (average degree + 1) from the
  // materialized stream.
  double gamma = 0.0;
  std::uint64_t d = 1;
  std::size_t cap_override = 0;
  int trials = 1;
  std::uint64_t base_seed = 1;
  bool oracle = true;
  // Echoed into every CSV row so each row is reproducible on its own.
  std::string source = "unknown";
};

struct TrialRecord {
  std::uint64_t seed = 0;
  double estimate = 0.0;
  std::optional<double> exact;  // beta_exact, or n_d for DegTest plans
  double ratio = 0.0;           // max(estimate/exact, exact/estimate)
  std::uint64_t sample_size = 0;
  std::uint64_t space_bits = 0;
  double wall_ms = 0.0;  // not serialized: CSV output is byte-deterministic
};

struct PlanResult {
  TrialPlan plan;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<TrialRecord> records;
};

// Runs plan.trials estimator runs with seeds base_seed + t over the fixed
// stream. Trials execute in parallel; records come back ordered by trial
// index, so the output does not depend on scheduling.
PlanResult run_plan(const GraphStream& stream, const TrialPlan& plan);
PlanResult run_plan_serial(const GraphStream& stream, const TrialPlan& plan);

struct Summary {
  std::size_t trials = 0;
  std::size_t with_oracle = 0;
  double frac_within_eps = 0.0;   // ratio <= 1 + eps
  double frac_within_15 = 0.0;    // ratio <= 1.5
  double frac_within_phi = 0.0;   // ratio <= phi
  double mean_sample = 0.0;
  std::uint64_t max_sample = 0;
  double mean_space_bits = 0.0;
  double mean_wall_ms = 0.0;
};

Summary summarize(const PlanResult& result);

inline constexpr const char* kCsvSchema = "schema=1";

// First line "schema=1", then a header row, then one row per trial. Rows
// echo the full parameter set. Byte-identical for identical plans.
void write_csv(std::ostream& out, const PlanResult& result);
std::string csv_string(const PlanResult& result);
void print_summary(std::ostream& out, const Summary& summary);

}  // namespace cwstream
