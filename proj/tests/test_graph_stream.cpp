#include <doctest.h>

#include <sstream>

#include "cwstream/graph.hpp"
#include "cwstream/stream.hpp"
#include "cwstream/stream_gen.hpp"
#include "test_util.hpp"

using namespace cwstream;

TEST_SUITE_BEGIN("graph_stream");

TEST_CASE("from_edges builds sorted symmetric adjacency") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}});
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  const auto ns = g.neighbors(0);
  CHECK(std::vector<VertexId>(ns.begin(), ns.end()) == std::vector<VertexId>{1, 3});
}

TEST_CASE("from_edges rejects invalid input") {
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), ValidationError);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), ValidationError);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), ValidationError);

  try {
    Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}});
    FAIL("expected throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationErrorKind::DuplicateEdge);
  }
}

TEST_CASE("materialize vertex-arrival triangle") {
  GraphStream s;
  s.mode = StreamMode::VertexArrival;
  s.declared_n = 3;
  s.events = {VertexArrival{0, {}}, VertexArrival{1, {0}}, VertexArrival{2, {0, 1}}};
  CHECK(materialize(s) == testutil::complete_graph(3));
}

TEST_CASE("materialize rejects duplicate edges") {
  GraphStream s;
  s.mode = StreamMode::EdgeArrival;
  s.declared_n = 2;
  s.events = {EdgeArrival{{0, 1}}, EdgeArrival{{0, 1}}};
  try {
    materialize(s);
    FAIL("expected throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationErrorKind::DuplicateEdge);
  }
}

TEST_CASE("materialize empty stream gives edgeless graph") {
  GraphStream s;
  s.mode = StreamMode::EdgeArrival;
  s.declared_n = 5;
  CHECK(materialize(s) == testutil::edgeless_graph(5));
}

TEST_CASE("materialize validation errors are distinct") {
  GraphStream s;
  s.mode = StreamMode::VertexArrival;
  s.declared_n = 3;

  SUBCASE("back-neighbor not yet arrived") {
    s.events = {VertexArrival{0, {}}, VertexArrival{1, {2}}};
    try {
      materialize(s);
      FAIL("expected throw");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationErrorKind::ArrivalOrder);
    }
  }
  SUBCASE("vertex arrives twice") {
    s.events = {VertexArrival{0, {}}, VertexArrival{0, {}}};
    try {
      materialize(s);
      FAIL("expected throw");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationErrorKind::ArrivalOrder);
    }
  }
  SUBCASE("id beyond declared n") {
    s.events = {VertexArrival{7, {}}};
    try {
      materialize(s);
      FAIL("expected throw");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationErrorKind::VertexOutOfRange);
    }
  }
  SUBCASE("edge event in vertex stream") {
    s.events = {EdgeArrival{{0, 1}}};
    try {
      materialize(s);
      FAIL("expected throw");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationErrorKind::ModeMismatch);
    }
  }
  SUBCASE("self-loop via back edge") {
    s.events = {VertexArrival{0, {0}}};
    CHECK_THROWS_AS(materialize(s), ValidationError);
  }
}

TEST_CASE("text format round-trips") {
  const Graph g = testutil::random_graph(17, 99);
  for (StreamMode mode : {StreamMode::EdgeArrival, StreamMode::VertexArrival}) {
    const GraphStream s = to_stream(g, mode, OrderPolicy::shuffle(5));
    std::stringstream buf;
    write_stream(buf, s);
    const GraphStream back = read_stream(buf);
    CHECK(back == s);
    CHECK(materialize(back) == g);
  }
}

TEST_CASE("parser reports line numbers") {
  auto expect_parse_error = [](const std::string& text, std::size_t line) {
    std::stringstream in(text);
    try {
      read_stream(in);
      FAIL("expected throw on: ", text);
    } catch (const ValidationError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(std::to_string(line)) != std::string::npos);
    }
  };
  expect_parse_error("bogus header\n", 1);
  expect_parse_error("n 4 mode edge\ne 0\n", 2);
  expect_parse_error("n 4 mode edge\ne 0 1\nv 2\n", 3);
  expect_parse_error("n 4 mode edge\ne 0 x\n", 2);
  expect_parse_error("n 4 mode sideways\n", 1);
  expect_parse_error("n 4 mode vertex\nv 0\nq 1\n", 3);
}

TEST_CASE("parser accepts blank lines and missing header fails") {
  std::stringstream ok("n 2 mode edge\n\ne 0 1\n\n");
  const GraphStream s = read_stream(ok);
  CHECK(s.events.size() == 1);

  std::stringstream empty("");
  CHECK_THROWS_AS(read_stream(empty), ValidationError);
}

TEST_SUITE_END();
