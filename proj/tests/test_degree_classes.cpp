#include <doctest.h>

#include <random>

#include "cwstream/degree_classes.hpp"
#include "cwstream/oracles.hpp"
#include "test_util.hpp"

using namespace cwstream;
using namespace cwstream::testutil;

TEST_SUITE_BEGIN("degree_classes");

namespace {

// Independent route: scan powers of c directly.
int class_index_bruteforce(std::uint64_t deg, double c) {
  long double acc = 1.0L;
  int i = 0;
  while (!(acc <= static_cast<long double>(deg) &&
           static_cast<long double>(deg) < acc * static_cast<long double>(c))) {
    acc *= static_cast<long double>(c);
    ++i;
    REQUIRE(i < 10000);
  }
  return i;
}

}  // namespace

TEST_CASE("class_of on fixed degrees") {
  const DegreeClassifier c2(1u << 20, 2.0);
  CHECK(c2.class_of(5) == 2);
  CHECK(c2.class_of(1) == 0);
  CHECK(c2.class_of(2) == 1);
  CHECK(c2.class_of(3) == 1);
  CHECK(c2.class_of(4) == 2);
  CHECK_THROWS_AS(c2.class_of(0), std::invalid_argument);

  const DegreeClassifier c11(1u << 20, 1.1);
  CHECK(c11.class_of(8) == 21);  // 1.1^21 ~ 7.40 <= 8 < 1.1^22 ~ 8.14
}

TEST_CASE("class_of agrees with a power scan") {
  for (double c : {1.1, 1.5, 2.0}) {
    const DegreeClassifier cls(100000, c);
    for (std::uint64_t deg = 1; deg <= 2000; ++deg) {
      CAPTURE(c);
      CAPTURE(deg);
      CHECK(cls.class_of(deg) == class_index_bruteforce(deg, c));
    }
  }
}

TEST_CASE("count_classes is exact at integer boundaries") {
  CHECK(DegreeClassifier::count_classes(8, 2.0) == 3);
  CHECK(DegreeClassifier::count_classes(9, 2.0) == 4);
  CHECK(DegreeClassifier::count_classes(6, 2.0) == 3);
  CHECK(DegreeClassifier::count_classes(1, 2.0) == 0);
  CHECK(DegreeClassifier::count_classes(2, 2.0) == 1);
  CHECK(DegreeClassifier::count_classes(100, 1.1) == 49);
}

TEST_CASE("partition of the star") {
  const auto [part, stats] = partition(star_graph(5), 2.0);
  REQUIRE(part.num_classes == 3);  // ceil(log2 6)
  CHECK(part.class_sizes == std::vector<std::uint64_t>{5, 0, 1});
  CHECK(part.isolated_count == 0);
  CHECK(stats.beta[0] == doctest::Approx(2.5));
  CHECK(stats.beta[2] == doctest::Approx(1.0 / 6.0));
  CHECK(stats.beta_prime[0] == doctest::Approx(5.0 / 3.0));
  CHECK(stats.beta_prime[2] == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("partition of K4") {
  const auto [part, stats] = partition(complete_graph(4), 2.0);
  REQUIRE(part.num_classes == 2);
  CHECK(part.class_sizes == std::vector<std::uint64_t>{0, 4});
  CHECK(stats.beta[1] == doctest::Approx(1.0));
  CHECK(stats.beta_prime[1] == doctest::Approx(4.0 / 5.0));
}

TEST_CASE("partition accounts for isolated vertices exactly") {
  // Star plus three spare vertices.
  std::vector<Edge> edges = star_graph(4).edges();
  const Graph g = Graph::from_edges(8, edges);
  const auto [part, stats] = partition(g, 2.0);
  CHECK(part.isolated_count == 3);
  CHECK(stats.beta_isolated == 3.0);
  std::uint64_t classed = 0;
  for (auto s : part.class_sizes) classed += s;
  CHECK(classed + part.isolated_count == g.num_vertices());
}

TEST_CASE("class betas decompose beta_exact") {
  std::mt19937_64 eng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = gen_gnm(50, 120, eng());
    for (double c : {1.1, 1.5, 2.0}) {
      const auto [part, stats] = partition(g, c);
      double total = stats.beta_isolated;
      for (double b : stats.beta) total += b;
      CHECK(total == doctest::Approx(beta_exact(g)).epsilon(1e-12));
    }
  }
}

TEST_CASE("per-class sandwich holds for every class") {
  std::mt19937_64 eng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = random_graph(60, eng());
    for (double c : {1.1, 1.5, 2.0}) {
      const auto [part, stats] = partition(g, c);
      for (std::size_t i = 0; i < stats.beta.size(); ++i) {
        CAPTURE(c);
        CAPTURE(i);
        CHECK(stats.beta_prime[i] <= stats.beta[i] * (1 + 1e-12) + 1e-12);
        CHECK(stats.beta[i] <= c * stats.beta_prime[i] * (1 + 1e-12) + 1e-12);
      }
    }
  }
}

TEST_CASE("parallel partition matches serial reference") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = random_graph(12000, 100 + seed);
    for (double c : {1.1, 2.0}) {
      const auto [pp, sp] = partition(g, c);
      const auto [ps, ss] = partition_serial(g, c);
      CHECK(pp.class_sizes == ps.class_sizes);
      CHECK(pp.isolated_count == ps.isolated_count);
      CHECK(sp.beta == ss.beta);
      CHECK(sp.beta_prime == ss.beta_prime);
    }
  }
}

TEST_CASE("heavy classes on a single-class graph") {
  const auto [part, stats] = partition(complete_graph(4), 2.0);
  const auto heavy = heavy_classes(stats, 10.0, beta_exact(complete_graph(4)));
  CHECK(heavy == std::vector<int>{1});
}

TEST_CASE("heavy classes on the star") {
  const Graph g = star_graph(5);
  const auto [part, stats] = partition(g, 2.0);
  // threshold = (8/3) / (3 * 10) = 8/90; both populated classes clear it.
  const auto heavy = heavy_classes(stats, 10.0, beta_exact(g));
  CHECK(heavy == std::vector<int>{0, 2});
}

TEST_CASE("huge g makes every nonempty class heavy") {
  std::mt19937_64 eng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_graph(40, eng());
    const auto [part, stats] = partition(g, 2.0);
    const auto heavy = heavy_classes(stats, 1e15, beta_exact(g));
    std::size_t nonempty = part.isolated_count > 0 ? 1 : 0;
    for (auto s : part.class_sizes) nonempty += s > 0 ? 1 : 0;
    CHECK(heavy.size() == nonempty);
  }
}

TEST_CASE("global sandwich, light mass and heavy sizes") {
  std::mt19937_64 eng(19);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph g = random_graph(50, eng());
    const double beta = beta_exact(g);
    if (beta == 0.0) continue;
    for (auto [c, gg] : {std::pair{1.1, 10.0}, std::pair{2.0, 2.0}, std::pair{1.5, 4.0}}) {
      const auto [part, stats] = partition(g, c);
      const auto heavy = heavy_classes(stats, gg, beta);
      const double heavy_prime = beta_prime_sum(stats, heavy);
      const double heavy_beta = beta_sum(stats, heavy);
      const double light_beta = beta - heavy_beta;
      const std::size_t L = std::max<std::size_t>(1, stats.beta.size());
      CAPTURE(c);
      CAPTURE(gg);

      // Light classes carry at most a 1/g fraction of beta.
      CHECK(light_beta <= beta / gg * (1 + 1e-9) + 1e-9);
      // Sandwich around beta.
      CHECK(heavy_prime <= beta * (1 + 1e-12) + 1e-12);
      CHECK(beta <= (gg * c / (gg - 1.0)) * heavy_prime * (1 + 1e-9) + 1e-9);
      // Every heavy class is large.
      for (int i : heavy) {
        const double size = i == kIsolatedClass
                                ? static_cast<double>(part.isolated_count)
                                : static_cast<double>(part.class_sizes[static_cast<std::size_t>(i)]);
        CHECK(size >= beta / (static_cast<double>(L) * gg) * (1 - 1e-9) - 1e-9);
      }
    }
  }
}

TEST_SUITE_END();
