#include <doctest.h>

#include <random>

#include "properties.hpp"
#include "tperf/canonical.hpp"
#include "tperf/generators.hpp"
#include "tperf/graph6.hpp"
#include "tperf/pattern.hpp"
#include "tperf/verify.hpp"

using namespace tperf;

TEST_CASE("graph6 known strings") {
  CHECK(graph6_encode(complete(3)) == "Bw");
  CHECK(graph6_decode("Bw") == complete(3));
  CHECK(graph6_decode("D??") == empty_graph(5));
  CHECK(graph6_encode(complete(4)) == "C~");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("B"), ParseError);
  CHECK_THROWS_AS(graph6_decode("Bww"), ParseError);
  CHECK_THROWS_AS(graph6_decode("B!"), ParseError);
  try {
    graph6_decode("C~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graph6 round trip") {
  const auto r = testing::graph6_round_trip(7, 3, 200);
  CHECK(r.cases == 1252 + 200);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::vector<Graph> graphs = {cycle(5), wheel(5), mobius_ladder(4), complement(cycle(7))};
  for (const auto& p : partitionable_patterns()) graphs.push_back(realize_expression(p.pattern));
  const auto r = testing::relabel_invariance(graphs, 1000, 5);
  CHECK(r.cases == graphs.size() * 1000);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(cycle(5), complement(cycle(5))));
  CHECK(is_self_complementary(cycle(5)));
  CHECK(is_isomorphic(realize_expression("(1*3|2*)"), realize_expression("(2*413*)-u1")));
  CHECK_FALSE(is_isomorphic(cycle(6), complete(3)));
  CHECK_FALSE(is_isomorphic(path(4), cycle(4)));
}

TEST_CASE("canonical labelling reproduces the canonical graph") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(rng, 1 + i % 14, 0.5);
    const auto lab = canonical_labeling(g);
    CHECK(relabel(g, lab.perm) == lab.graph);
    CHECK(canonical_form(lab.graph) == lab.form);
  }
}

TEST_CASE("orderly enumeration matches the census") {
  for (int n = 1; n <= 7; ++n) CHECK(nonisomorphic_graphs(n).size() == std::size_t(kGraphCensus[n - 1]));
}
