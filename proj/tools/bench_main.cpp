// Benchmark comparing the OpenMP kernels against their serial references:
// the Caro-Wei sum, the degree-class partition, and a trial batch.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "cwstream/degree_classes.hpp"
#include "cwstream/harness.hpp"
#include "cwstream/oracles.hpp"
#include "cwstream/stream_gen.hpp"

namespace {

using namespace cwstream;

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const Graph g = gen_gnm(2'000'000, 6'000'000, 1);
    volatile double sink = 0.0;
    const double serial = time_ms([&] { sink = beta_exact_serial(g); }, 5);
    const double parallel = time_ms([&] { sink = beta_exact(g); }, 5);
    report("beta_exact n=2e6", serial, parallel);
    if (beta_exact(g) != beta_exact_serial(g)) {
      std::printf("MISMATCH in beta_exact\n");
      return 1;
    }
  }

  {
    const Graph g = gen_gnm(2'000'000, 6'000'000, 2);
    const double serial = time_ms([&] { partition_serial(g, 1.1); }, 5);
    const double parallel = time_ms([&] { partition(g, 1.1); }, 5);
    report("partition c=1.1 n=2e6", serial, parallel);
  }

  {
    const Graph g = gen_gnm(20000, 60000, 3);
    const GraphStream stream = to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(1));
    TrialPlan plan;
    plan.estimator = EstimatorKind::Vertex;
    plan.trials = 8;
    plan.oracle = false;
    const double serial = time_ms([&] { run_plan_serial(stream, plan); }, 2);
    const double parallel = time_ms([&] { run_plan(stream, plan); }, 2);
    report("vertex trials x8 n=2e4", serial, parallel);
  }

  return 0;
}
