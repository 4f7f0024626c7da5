#include "cwstream/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <locale>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cwstream/edge_estimator.hpp"
#include "cwstream/oracles.hpp"
#include "cwstream/vertex_estimator.hpp"

namespace cwstream {

const char* estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::EdgeEps: return "edge-eps";
    case EstimatorKind::EdgePhi: return "edge-phi";
    case EstimatorKind::Vertex: return "vertex";
    case EstimatorKind::DegTest: return "degtest";
  }
  return "?";
}

namespace {

constexpr std::size_t kNdOracleLimit = 10000;

double safe_ratio(double estimate, double exact) {
  if (estimate == exact) return 1.0;
  if (estimate <= 0.0 || exact <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(estimate / exact, exact / estimate);
}

std::vector<VertexId> arrival_order(const GraphStream& stream) {
  std::vector<VertexId> order;
  order.reserve(stream.events.size());
  for (const StreamEvent& ev : stream.events) {
    order.push_back(std::get<VertexArrival>(ev).v);
  }
  return order;
}

PlanResult run_plan_impl(const GraphStream& stream, const TrialPlan& plan, bool parallel) {
  const bool wants_edge =
      plan.estimator == EstimatorKind::EdgeEps || plan.estimator == EstimatorKind::EdgePhi;
  if (wants_edge != (stream.mode == StreamMode::EdgeArrival)) {
    throw ValidationError(ValidationErrorKind::ModeMismatch,
                          std::string("estimator ") + estimator_name(plan.estimator) +
                              " is incompatible with the stream mode");
  }
  if (plan.trials < 1) throw std::invalid_argument("run_plan: trials must be >= 1");

  const Graph g = materialize(stream);

  PlanResult result;
  result.plan = plan;
  result.n = g.num_vertices();
  result.m = g.num_edges();

  double gamma = plan.gamma;
  if (gamma <= 0.0) gamma = turan_bound(g);
  result.plan.gamma = gamma;

  std::optional<double> exact;
  if (plan.oracle) {
    if (plan.estimator == EstimatorKind::DegTest) {
      if (g.num_vertices() <= kNdOracleLimit) {
        exact = static_cast<double>(n_d_oracle(g, arrival_order(stream), plan.d));
      }
    } else {
      exact = beta_exact_serial(g);
    }
  }

  result.records.resize(static_cast<std::size_t>(plan.trials));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int t = 0; t < plan.trials; ++t) {
    const std::uint64_t seed = plan.base_seed + static_cast<std::uint64_t>(t);
    TrialRecord rec;
    rec.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    switch (plan.estimator) {
      case EstimatorKind::EdgeEps: {
        const EstimateReport report = estimate_eps(stream, plan.eps, gamma, seed);
        rec.estimate = report.beta_hat;
        rec.sample_size = report.sample_size;
        rec.space_bits = report.space_bits;
        break;
      }
      case EstimatorKind::EdgePhi: {
        const PhiEstimate phi = estimate_phi(stream, plan.phi, gamma, seed);
        rec.estimate = phi.value;
        rec.sample_size = phi.report.sample_size;
        rec.space_bits = phi.report.space_bits;
        break;
      }
      case EstimatorKind::Vertex: {
        const VertexEstimate est = estimate_vertex_arrival(stream, seed, plan.cap_override);
        rec.estimate = est.gamma_hat;
        rec.sample_size = est.peak_sample_total;
        rec.space_bits = est.space_bits;
        break;
      }
      case EstimatorKind::DegTest: {
        DegTestConfig cfg;
        cfg.d = plan.d;
        cfg.eps = plan.eps;
        cfg.n = stream.declared_n;
        cfg.seed = seed;
        cfg.cap_override = plan.cap_override;
        DegTest test(cfg);
        for (const StreamEvent& ev : stream.events) {
          const auto& va = std::get<VertexArrival>(ev);
          test.process(va.v, va.back);
        }
        rec.estimate = test.finalize();
        rec.sample_size = test.peak_sample();
        rec.space_bits = static_cast<std::uint64_t>(test.peak_sample()) * 128;
        break;
      }
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    rec.exact = exact;
    if (exact) rec.ratio = safe_ratio(rec.estimate, *exact);
    result.records[static_cast<std::size_t>(t)] = std::move(rec);
  }
  return result;
}

}  // namespace

PlanResult run_plan(const GraphStream& stream, const TrialPlan& plan) {
  return run_plan_impl(stream, plan, true);
}

PlanResult run_plan_serial(const GraphStream& stream, const TrialPlan& plan) {
  return run_plan_impl(stream, plan, false);
}

Summary summarize(const PlanResult& result) {
  if (result.records.empty()) throw std::invalid_argument("summarize: no records");
  Summary s;
  s.trials = result.records.size();
  std::size_t within_eps = 0, within_15 = 0, within_phi = 0;
  double sample_sum = 0.0, space_sum = 0.0, wall_sum = 0.0;
  for (const TrialRecord& rec : result.records) {
    if (rec.exact) {
      ++s.with_oracle;
      if (rec.ratio <= 1.0 + result.plan.eps) ++within_eps;
      if (rec.ratio <= 1.5) ++within_15;
      if (rec.ratio <= result.plan.phi) ++within_phi;
    }
    sample_sum += static_cast<double>(rec.sample_size);
    space_sum += static_cast<double>(rec.space_bits);
    wall_sum += rec.wall_ms;
    s.max_sample = std::max(s.max_sample, rec.sample_size);
  }
  const double n = static_cast<double>(s.trials);
  if (s.with_oracle > 0) {
    const double o = static_cast<double>(s.with_oracle);
    s.frac_within_eps = static_cast<double>(within_eps) / o;
    s.frac_within_15 = static_cast<double>(within_15) / o;
    s.frac_within_phi = static_cast<double>(within_phi) / o;
  }
  s.mean_sample = sample_sum / n;
  s.mean_space_bits = space_sum / n;
  s.mean_wall_ms = wall_sum / n;
  return s;
}

namespace {

// Shortest round-trip decimal form, locale-independent.
std::string fmt_double(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

void write_csv(std::ostream& out, const PlanResult& result) {
  out << kCsvSchema << '\n';
  out << "estimator,mode,source,n,m,trials,eps,phi,gamma,d,cap_override,trial,seed,"
         "estimate,exact_beta,ratio,sample_size,space_bits\n";
  const TrialPlan& p = result.plan;
  const bool edge = p.estimator == EstimatorKind::EdgeEps || p.estimator == EstimatorKind::EdgePhi;
  for (std::size_t t = 0; t < result.records.size(); ++t) {
    const TrialRecord& rec = result.records[t];
    out << estimator_name(p.estimator) << ',' << (edge ? "edge" : "vertex") << ','
        << p.source << ',' << result.n << ',' << result.m << ',' << p.trials << ','
        << fmt_double(p.eps) << ',' << fmt_double(p.phi) << ',' << fmt_double(p.gamma)
        << ',' << p.d << ',' << p.cap_override << ',' << t << ',' << rec.seed << ','
        << fmt_double(rec.estimate) << ',' << (rec.exact ? fmt_double(*rec.exact) : "")
        << ',' << (rec.exact ? fmt_double(rec.ratio) : "") << ',' << rec.sample_size
        << ',' << rec.space_bits << '\n';
  }
}

std::string csv_string(const PlanResult& result) {
  std::ostringstream os;
  write_csv(os, result);
  return os.str();
}

void print_summary(std::ostream& out, const Summary& s) {
  out << "summary: trials=" << s.trials << " with_oracle=" << s.with_oracle
      << " frac_within_eps=" << s.frac_within_eps << " frac_within_1.5=" << s.frac_within_15
      << " frac_within_phi=" << s.frac_within_phi << " mean_sample=" << s.mean_sample
      << " max_sample=" << s.max_sample << " mean_space_bits=" << s.mean_space_bits
      << " mean_wall_ms=" << s.mean_wall_ms << '\n';
}

}  // namespace cwstream
