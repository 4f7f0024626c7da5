#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cwstream/oracles.hpp"
#include "cwstream/stream_gen.hpp"
#include "cwstream/vertex_estimator.hpp"
#include "test_util.hpp"

using namespace cwstream;
using namespace cwstream::testutil;

TEST_SUITE_BEGIN("vertex_estimator");

namespace {

DegTestConfig degtest_config(std::uint64_t d, std::size_t n, std::uint64_t seed,
                             std::size_t cap_override = 0, double eps = 0.5) {
  DegTestConfig cfg;
  cfg.d = d;
  cfg.eps = eps;
  cfg.n = n;
  cfg.seed = seed;
  cfg.cap_override = cap_override;
  return cfg;
}

double run_degtest(const GraphStream& stream, const DegTestConfig& cfg) {
  DegTest test(cfg);
  for (const StreamEvent& ev : stream.events) {
    const auto& va = std::get<VertexArrival>(ev);
    test.process(va.v, va.back);
  }
  return test.finalize();
}

GraphStream isolated_stream(std::size_t n) {
  GraphStream s;
  s.mode = StreamMode::VertexArrival;
  s.declared_n = n;
  for (std::size_t v = 0; v < n; ++v) s.events.push_back(VertexArrival{static_cast<VertexId>(v), {}});
  return s;
}

}  // namespace

TEST_CASE("cap follows the config") {
  CHECK(degtest_config(1, 5000, 1).cap() ==
        static_cast<std::size_t>(std::ceil((28.0 / 0.0625) * std::log(5000.0))));
  CHECK(degtest_config(1, 1, 1).cap() == 1);
  CHECK(degtest_config(1, 100, 1, 7).cap() == 7);
}

TEST_CASE("isolated vertices are counted exactly while p stays 1") {
  DegTest test(degtest_config(1, 5, 3));
  for (VertexId v = 0; v < 5; ++v) {
    test.process(v, {});
    CHECK(test.current_estimate() == doctest::Approx(static_cast<double>(v + 1)));
  }
  CHECK(test.p() == 1.0);
  CHECK(test.phase() == 0);
  CHECK(test.sample_count() == 5);
  CHECK(test.finalize() == doctest::Approx(5.0));
}

TEST_CASE("star arriving leaves-first peaks before the center") {
  // Leaves 1..5 arrive isolated, then the center connects to all of them.
  DegTest test(degtest_config(1, 6, 9));
  for (VertexId v = 1; v <= 5; ++v) test.process(v, {});
  CHECK(test.current_estimate() == doctest::Approx(5.0));
  const std::vector<VertexId> back{1, 2, 3, 4, 5};
  test.process(0, back);
  CHECK(test.finalize() == doctest::Approx(5.0));
  CHECK(!test.contains(0));  // degree 5 > d, never admitted to the sample
  for (VertexId v = 1; v <= 5; ++v) CHECK(test.contains(v));
}

TEST_CASE("triangle with d = 1") {
  DegTest test(degtest_config(1, 3, 5));
  test.process(0, {});
  test.process(1, std::vector<VertexId>{0});
  test.process(2, std::vector<VertexId>{0, 1});
  CHECK(test.finalize() == doctest::Approx(2.0));
  CHECK(test.sample_count() == 0);  // everything ends at degree 2 > d
}

TEST_CASE("empty stream estimates zero") {
  DegTest test(degtest_config(4, 100, 1));
  CHECK(test.finalize() == 0.0);
}

TEST_CASE("runs that never downsample are exact") {
  std::mt19937_64 eng(41);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 2 + rng::uniform_below(eng, 40);
    const Graph g = random_graph(n, eng());
    const GraphStream stream = to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(eng()));
    std::vector<VertexId> order;
    for (const StreamEvent& ev : stream.events) order.push_back(std::get<VertexArrival>(ev).v);
    for (std::uint64_t d : {0ULL, 1ULL, 2ULL, 5ULL, 100ULL}) {
      const auto cfg = degtest_config(d, n, eng(), n + 1);
      CHECK(run_degtest(stream, cfg) == doctest::Approx(static_cast<double>(n_d_oracle(g, order, d))));
    }
  }
}

TEST_CASE("downsampling keeps the estimate near n_d") {
  // All-isolated stream longer than the derived cap, so phase transitions fire.
  const std::size_t n = 4000;
  const GraphStream stream = isolated_stream(n);
  const std::size_t cap = degtest_config(1, n, 1).cap();
  REQUIRE(cap < n);

  int ok = 0;
  for (int t = 0; t < 50; ++t) {
    DegTest test(degtest_config(1, n, 100 + t));
    for (const StreamEvent& ev : stream.events) {
      const auto& va = std::get<VertexArrival>(ev);
      test.process(va.v, va.back);
      CHECK(test.sample_count() <= cap);
    }
    CHECK(test.peak_sample() <= cap);
    CHECK(test.phase() >= 1);
    const double est = test.finalize();
    const double ratio = std::max(est / n, n / est);
    if (ratio <= 1.5) ++ok;
  }
  CHECK(ok >= 45);
}

TEST_CASE("deep downsampling with a tiny cap stays in range") {
  const std::size_t n = 4000;
  const GraphStream stream = isolated_stream(n);
  int ok = 0;
  for (int t = 0; t < 50; ++t) {
    const auto cfg = degtest_config(1, n, 900 + t, 100);
    DegTest test(cfg);
    for (const StreamEvent& ev : stream.events) {
      const auto& va = std::get<VertexArrival>(ev);
      test.process(va.v, va.back);
    }
    CHECK(test.peak_sample() <= 100);
    const double est = test.finalize();
    const double ratio = std::max(est / n, n / est);
    if (ratio <= 1.5) ++ok;
  }
  CHECK(ok >= 40);
}

TEST_CASE("the running estimate never decreases") {
  std::mt19937_64 eng(77);
  const Graph g = gen_gnm(600, 900, eng());
  const GraphStream stream = to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(2));
  DegTest test(degtest_config(2, 600, 4, 32));
  double last = 0.0;
  for (const StreamEvent& ev : stream.events) {
    const auto& va = std::get<VertexArrival>(ev);
    test.process(va.v, va.back);
    CHECK(test.current_estimate() >= last);
    last = test.current_estimate();
  }
}

TEST_CASE("identical seeds reproduce the run") {
  std::mt19937_64 eng(99);
  const Graph g = gen_gnm(500, 700, eng());
  const GraphStream stream = to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(6));
  const auto cfg = degtest_config(2, 500, 1234, 64);
  CHECK(run_degtest(stream, cfg) == run_degtest(stream, cfg));
  CHECK(estimate_vertex_arrival(stream, 55) == estimate_vertex_arrival(stream, 55));
}

TEST_CASE("estimate on the edgeless graph") {
  const GraphStream stream = isolated_stream(8);
  const VertexEstimate est = estimate_vertex_arrival(stream, 3);
  REQUIRE(est.per_degree.size() == 4);  // i in {0..ceil(log2 8)}
  for (double nd : est.per_degree) CHECK(nd == doctest::Approx(8.0));
  // max over i of 8 / (2 (2^i + 1)) lands at i = 0.
  CHECK(est.gamma_hat == doctest::Approx(2.0));
  CHECK(est.argmax_instance == 0);
}

TEST_CASE("estimate on the triangle") {
  const Graph g = complete_graph(3);
  for (std::uint64_t order_seed : {1, 2, 3}) {
    const GraphStream stream =
        to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(order_seed));
    const VertexEstimate est = estimate_vertex_arrival(stream, 7);
    CHECK(est.gamma_hat == doctest::Approx(0.5));
    CHECK(est.gamma_hat <= static_cast<double>(alpha_exact(g)));
  }
}

TEST_CASE("exact-cap estimates are bounded by alpha and floored by beta") {
  std::mt19937_64 eng(111);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 3 + rng::uniform_below(eng, 22);
    const Graph g = random_graph(n, eng());
    const GraphStream stream = to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(eng()));
    const VertexEstimate est = estimate_vertex_arrival(stream, eng(), n + 1);
    const double beta = beta_exact(g);
    const double alpha = static_cast<double>(alpha_exact(g));
    CAPTURE(n);
    CHECK(est.gamma_hat <= alpha + 1e-9);
    CHECK(est.gamma_hat >= beta / (3.0 * log2_ceil(n)) - 1e-9);
  }
}

TEST_CASE("space accounting stays within the instance budget") {
  std::mt19937_64 eng(321);
  const Graph g = gen_gnm(2000, 6000, eng());
  const GraphStream stream = to_stream(g, StreamMode::VertexArrival, OrderPolicy::shuffle(4));
  const VertexEstimate est = estimate_vertex_arrival(stream, 10);
  const std::size_t instances = static_cast<std::size_t>(log2_ceil(2000)) + 1;
  const std::size_t cap = degtest_config(1, 2000, 1).cap();
  CHECK(est.per_degree.size() == instances);
  CHECK(est.peak_sample_total <= instances * cap);
  CHECK(est.space_bits == static_cast<std::uint64_t>(est.peak_sample_total) * 128);
}

TEST_CASE("mode validation") {
  GraphStream edge_stream;
  edge_stream.mode = StreamMode::EdgeArrival;
  edge_stream.declared_n = 4;
  CHECK_THROWS_AS(estimate_vertex_arrival(edge_stream, 1), ValidationError);
  CHECK_THROWS_AS(DegTest(degtest_config(1, 10, 1, 0, 2.0)), std::invalid_argument);
}

TEST_SUITE_END();
