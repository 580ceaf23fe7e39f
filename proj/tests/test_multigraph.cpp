#include <doctest.h>

#include <stdexcept>
#include <string>

#include "gpoly/errors.hpp"
#include "gpoly/graph6.hpp"
#include "gpoly/multigraph.hpp"

using namespace gpoly;

TEST_CASE("edge list parsing round trips") {
  const std::string text = "3 3\n1 2\n2 3\n1 1\n";
  Multigraph g = Multigraph::parse_edge_list(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 0}});
  CHECK(g.to_edge_list() == text);
  CHECK(Multigraph::parse_edge_list(g.to_edge_list()) == g);
}

TEST_CASE("edge list parsing accepts weights and extra whitespace") {
  Multigraph g = Multigraph::parse_edge_list("3 2\r\n1 2\n  2   3 \nweights 1 2 3\n\n");
  CHECK(g.weights() == std::vector<int>{1, 2, 3});
  CHECK(!g.unit_weights());
  CHECK(g.total_weight() == 6);
  CHECK(g.to_edge_list() == "3 2\n1 2\n2 3\nweights 1 2 3\n");
  Multigraph unit = Multigraph::parse_edge_list("2 1\n1 2\n");
  CHECK(unit.unit_weights());
  CHECK(unit.to_edge_list() == "2 1\n1 2\n");
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto message = [](const auto& fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message([] { Multigraph::parse_edge_list(""); }) == "line 1: expected header 'n m'");
  CHECK(message([] { Multigraph::parse_edge_list("2 1\n1 3\n"); }) ==
        "line 2: endpoint 3 out of range [1, 2]");
  CHECK(message([] { Multigraph::parse_edge_list("2 2\n1 2\n"); }) ==
        "line 3: header declares 2 edges, found 1 edge lines");
  CHECK(message([] { Multigraph::parse_edge_list("2 1\n1 2\nweights 1\n"); }) ==
        "line 3: expected 2 weights, found 1");
  CHECK(message([] { Multigraph::parse_edge_list("2 1\n1 2\nweights 1 0\n"); }) ==
        "line 3: weights must be in [1, 1e9]");
  CHECK(message([] { Multigraph::parse_edge_list("2 1\n1 2\n1 2\n"); }) ==
        "line 3: unexpected line after edges (expected 'weights w1 ... wn')");
  CHECK(message([] { Multigraph::parse_edge_list("-1 0\n"); }) ==
        "line 1: vertex and edge counts must be >= 0");
}

TEST_CASE("degrees loops and weights") {
  Multigraph g(3, {{0, 1}, {1, 2}, {0, 0}, {0, 0}});
  CHECK(g.degree(0) == 5);  // loops count twice
  CHECK(g.degree(1) == 2);
  CHECK(g.loop_count_at(0) == 2);
  CHECK(g.loop_count_at(1) == 0);
  CHECK(g.has_loops());
  CHECK(g.is_loop(2));
  CHECK(!g.is_loop(0));
  CHECK(!g.is_simple());
  Multigraph parallel(2, {{0, 1}, {0, 1}});
  CHECK(!parallel.is_simple());
  CHECK(Multigraph(3, {{0, 1}, {1, 2}}).is_simple());

  Multigraph w = g.with_weights({2, 3, 4});
  CHECK(w.weight(0) == 2);
  CHECK(w.total_weight() == 9);
  CHECK(w.edges() == g.edges());
  CHECK_THROWS_AS(g.with_weights({1, 2}), PreconditionError);
}

TEST_CASE("components and rank") {
  // Two components: a triangle and an edge, plus an isolated vertex.
  Multigraph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  auto summary = g.components();
  REQUIRE(summary.count() == 3);
  CHECK(summary.components[0].vertices == 3);
  CHECK(summary.components[0].edges == 3);
  CHECK(summary.components[1].vertices == 2);
  CHECK(summary.components[1].edges == 1);
  CHECK(summary.components[2].vertices == 1);
  CHECK(summary.components[2].edges == 0);
  CHECK(g.rank() == 3);
  CHECK(g.rank({}) == 0);
  CHECK(g.rank({0, 1}) == 2);
  CHECK(g.rank({0, 1, 2}) == 2);  // the cycle closes, rank stays 2
  CHECK(!g.is_connected());
  CHECK(Multigraph(1, {}).is_connected());
  CHECK(Multigraph().is_connected());
}

TEST_CASE("component weights accumulate vertex weights") {
  Multigraph g(4, {{0, 1}, {2, 3}}, {1, 2, 3, 4});
  auto summary = g.components();
  REQUIRE(summary.count() == 2);
  CHECK(summary.components[0].weight == 3);
  CHECK(summary.components[1].weight == 7);
}

TEST_CASE("component_signature is the canonical pair partition") {
  Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.component_signature({}) == IntegerPairPartition{{1, 0}, {1, 0}, {1, 0}});
  CHECK(g.component_signature({0}) == IntegerPairPartition{{2, 1}, {1, 0}});
  CHECK(g.component_signature({0, 1, 2}) == IntegerPairPartition{{3, 3}});
  CHECK(is_integer_pair_partition_of(g.component_signature({0, 2}), 3, 3));
}

TEST_CASE("spanning_subgraph keeps all vertices") {
  Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Multigraph sub = g.spanning_subgraph({1, 3});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 0}});
  CHECK_THROWS_AS(g.spanning_subgraph({4}), std::out_of_range);
  CHECK_THROWS_AS(g.spanning_subgraph({1, 1}), PreconditionError);
}

TEST_CASE("delete_edge drops exactly one edge") {
  Multigraph g(3, {{0, 1}, {1, 2}, {0, 0}});
  Multigraph d = g.delete_edge(1);
  CHECK(d.vertex_count() == 3);
  CHECK(d.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 0}});
  CHECK_THROWS_AS(g.delete_edge(3), std::out_of_range);
}

TEST_CASE("contract_edge merges endpoints and adds weights") {
  Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 2, 3});
  Multigraph c = g.contract_edge(0);
  CHECK(c.vertex_count() == 2);
  // The contracted triangle is a doubled edge between the merged vertex and 2.
  CHECK(c.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(c.weights() == std::vector<int>{3, 3});
  CHECK_THROWS_AS(g.contract_edge(5), std::out_of_range);

  // Contracting a parallel edge leaves a loop.
  Multigraph pair(2, {{0, 1}, {0, 1}});
  Multigraph cp = pair.contract_edge(0);
  CHECK(cp.vertex_count() == 1);
  CHECK(cp.edges() == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK_THROWS_AS(Multigraph(1, {{0, 0}}).contract_edge(0), PreconditionError);
}

TEST_CASE("graph6 decoding golden values") {
  Multigraph k2 = graph6_decode("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  Multigraph k3 = graph6_decode("Bw");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.is_simple());
  CHECK(k3.is_connected());

  // n = 0 and n = 1 degenerate cases.
  CHECK(graph6_decode("?").vertex_count() == 0);
  CHECK(graph6_decode("@").vertex_count() == 1);
}

TEST_CASE("graph6 encoding round trips") {
  CHECK(graph6_encode(graph6_decode("A_")) == "A_");
  CHECK(graph6_encode(graph6_decode("Bw")) == "Bw");
  Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(graph6_decode(graph6_encode(p4)) == p4);
  // Decoding normalizes edge order, so round trip through the encoding.
  Multigraph big(30, {{0, 29}, {5, 7}});
  Multigraph back = graph6_decode(graph6_encode(big));
  CHECK(back.vertex_count() == 30);
  CHECK(back.edges() == std::vector<std::pair<int, int>>{{5, 7}, {0, 29}});
  CHECK(graph6_encode(back) == graph6_encode(big));
  CHECK_THROWS_AS(graph6_encode(Multigraph(2, {{0, 0}})), PreconditionError);
  CHECK_THROWS_AS(graph6_decode("Bw extra"), ParseError);
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
}
