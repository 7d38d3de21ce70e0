#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "properties.hpp"
#include "tperf/canonical.hpp"
#include "tperf/decision.hpp"
#include "tperf/generators.hpp"
#include "tperf/graph6.hpp"
#include "tperf/parallel.hpp"
#include "tperf/pattern.hpp"

using namespace tperf;

namespace {

RatVector thirds(int n) {
  RatVector x(n);
  for (int i = 0; i < n; ++i) x[i] = Rational(1, 3);
  return x;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

bool has_iso(const std::vector<Graph>& list, const Graph& g) {
  for (const auto& h : list)
    if (is_isomorphic(h, g)) return true;
  return false;
}

}  // namespace

TEST_CASE("t-perfection") {
  const auto k4 = is_t_perfect(complete(4));
  CHECK_FALSE(k4.t_perfect);
  REQUIRE(k4.witness);
  CHECK(*k4.witness == thirds(4));
  CHECK(is_t_perfect(cycle(5)).t_perfect);
  CHECK_FALSE(is_t_perfect(wheel(5)).t_perfect);
  const auto pair = is_t_perfect(realize_expression("(12*435*1)"));
  CHECK_FALSE(pair.t_perfect);
  REQUIRE(pair.witness);
  CHECK(*pair.witness == thirds(10));
}

TEST_CASE("certificate shortcut agrees with full enumeration") {
  DecisionOptions full;
  full.certificate_shortcuts = false;
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const Graph g = testing::random_graph(rng, 4 + i % 6, 0.5);
    const auto a = is_t_perfect(g);
    const auto b = is_t_perfect(g, full);
    CHECK(a.t_perfect == b.t_perfect);
    const auto h = build_tstab_hrep(g);
    if (a.witness) CHECK(is_vertex_of(h, *a.witness));
    if (b.witness) CHECK(is_vertex_of(h, *b.witness));
  }
}

TEST_CASE("t-contraction") {
  for (int v = 0; v < 5; ++v) CHECK(is_isomorphic(t_contract(cycle(5), v), complete(3)));
  CHECK(t_contract(star(3), 0).order() == 1);
  CHECK_THROWS_AS(t_contract(wheel(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(t_contract(Graph(2), 0), std::invalid_argument);
}

TEST_CASE("one-step t-minors") {
  const auto k4 = one_step_t_minors(complete(4));
  REQUIRE(k4.size() == 1);
  CHECK(is_isomorphic(k4[0], complete(3)));
  const auto c5 = one_step_t_minors(cycle(5));
  CHECK(c5.size() == 2);
  CHECK(has_iso(c5, path(4)));
  CHECK(has_iso(c5, complete(3)));
  // (123451) is vertex-transitive and no neighbourhood is independent
  CHECK(one_step_t_minors(realize_expression("(123451)")).size() == 1);
}

TEST_CASE("minimality and core graphs") {
  CHECK(is_minimally_t_imperfect(complete(4)));
  CHECK(is_minimally_t_imperfect(complement(cycle(7))));
  CHECK_FALSE(is_minimally_t_imperfect(cycle(9)));
  CHECK(is_core(cycle(7)));
  CHECK_FALSE(is_core(cycle(9)));
  CHECK(is_core(cycle(5)));
}

TEST_CASE("verdicts") {
  Classifier c;
  const Verdict k4 = c.classify(complete(4));
  CHECK_FALSE(k4.t_perfect);
  CHECK(k4.minimally_t_imperfect == true);
  CHECK(k4.core == true);
  CHECK(k4.to_json()["witness"] == nlohmann::json({"1/3", "1/3", "1/3", "1/3"}));
  const Verdict c7 = c.classify(complement(cycle(7)));
  CHECK_FALSE(c7.t_perfect);
  CHECK(c7.minimally_t_imperfect == true);
  CHECK(c.classify(path(4)).t_perfect);

  std::vector<int> perm = {3, 0, 6, 1, 5, 2, 4};
  CHECK(c.classify(relabel(complement(cycle(7)), perm)) == c7);
}

TEST_CASE("classifier maps witnesses back to the caller's labels") {
  Classifier c;
  const Graph g = realize_expression("(12*435*1)");
  std::vector<int> perm = {9, 2, 7, 0, 4, 1, 8, 3, 6, 5};
  for (const Graph& h : {g, relabel(g, perm), relabel(complete(4), {2, 0, 3, 1})}) {
    const auto r = c.t_perfect(h);
    REQUIRE(r.witness);
    CHECK(is_vertex_of(build_tstab_hrep(h), *r.witness));
  }
}

TEST_CASE("classifier runs each canonical form at most once across threads") {
  Classifier c;
  std::vector<Graph> graphs;
  std::mt19937_64 rng(31);
  const Graph base = realize_expression("(1*2*435*1*)");
  for (int i = 0; i < 64; ++i) {
    const Graph g = i % 2 ? base : complement(cycle(7));
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    graphs.push_back(relabel(g, perm));
  }
  const auto tp = parallel_map(graphs.size(), 8, [&](std::size_t i) -> char {
    return c.t_perfect(graphs[i]).t_perfect ? 1 : 0;
  });
  CHECK(std::count(tp.begin(), tp.end(), 0) == 64);
  CHECK(c.cached_forms() == 2);
  CHECK(c.polytope_runs() == 2);
}

TEST_CASE("t-minor closure on random t-perfect graphs") {
  Classifier c;
  const auto r = testing::t_minor_closure(37, 200, c);
  CHECK(r.cases == 200);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}

TEST_CASE("almost bipartite graphs are t-perfect") {
  Classifier c;
  std::mt19937_64 rng(41);
  int seen = 0;
  while (seen < 100) {
    const Graph g = testing::random_graph(rng, 5 + seen % 5, 0.35);
    if (!is_almost_bipartite(g)) continue;
    ++seen;
    CHECK_MESSAGE(c.t_perfect(g).t_perfect, graph6_encode(g));
  }
}

TEST_CASE("K4-free perfect graphs are t-perfect") {
  Classifier c;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : nonisomorphic_graphs(n))
      if (clique_number(g) <= 3 && is_perfect(g)) CHECK_MESSAGE(c.t_perfect(g).t_perfect, graph6_encode(g));
  std::mt19937_64 rng(43);
  int seen = 0;
  while (seen < 100) {
    const Graph g = testing::random_graph(rng, 8, 0.4);
    if (clique_number(g) > 3 || !is_perfect(g)) continue;
    ++seen;
    CHECK_MESSAGE(c.t_perfect(g).t_perfect, graph6_encode(g));
  }
}

TEST_CASE("minimally t-imperfect graphs have no clique separator") {
  for (const Graph& g : {complete(4), wheel(5), wheel(7), complement(cycle(7)), mobius_ladder(4)}) {
    REQUIRE(is_minimally_t_imperfect(g));
    CHECK_FALSE(has_clique_separator(g));
  }
}

TEST_CASE("labelling around a 5-hole") {
  const Graph w = wheel(5);
  const auto bad = label_five_hole(w, {0, 1, 2, 3, 4});
  CHECK_FALSE(bad.labeling);
  REQUIRE(bad.violation);
  CHECK(bad.violation->vertex == 5);

  const auto p = label_five_hole(realize_expression("(1324)"), {0, 1, 2, 3, 4});
  REQUIRE(p.labeling);
  CHECK(p.labeling->indices() == std::vector<int>{1, 2, 3, 4});
  CHECK(p.labeling->ring_mask == 0);

  const auto c = label_five_hole(cycle(5), {0, 1, 2, 3, 4});
  REQUIRE(c.labeling);
  CHECK(c.labeling->indices().empty());

  CHECK_THROWS_AS(label_five_hole(complete(5), {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("labelling reproduces every enumerated pattern") {
  for (unsigned sub = 0; sub < 32; ++sub) {
    if (std::popcount(sub) > 3) continue;
    enumerate_pattern_graphs(sub << 1, false, [&](const PatternSpec& spec, const Graph& g) {
      const auto lab = label_five_hole(g, {0, 1, 2, 3, 4});
      REQUIRE(lab.labeling);
      CHECK(lab.labeling->ring_mask == spec.ring_mask);
      for (int j = 1; j <= 5; ++j) CHECK(lab.labeling->u[j] == u_vertex(spec, j));
    });
  }
}

TEST_CASE("observations") {
  PatternSpec spec;
  spec.index_mask = 0b1110;
  spec.ring_mask = 0b1110;
  spec.u_edges = {{1, 2}};
  const Graph g = realize_pattern(spec);
  const auto lab = label_five_hole(g, {0, 1, 2, 3, 4});
  REQUIRE(lab.labeling);
  CHECK_FALSE(check_observation(g, *lab.labeling, 1, 3));

  const Graph full = realize_expression("(123451)");
  const auto fl = label_five_hole(full, {0, 1, 2, 3, 4});
  REQUIRE(fl.labeling);
  for (int obs = 1; obs <= 6; ++obs)
    for (int i = 1; i <= 5; ++i) CHECK(check_observation(full, *fl.labeling, obs, i));

  const auto empty = label_five_hole(cycle(5), {0, 1, 2, 3, 4});
  for (int obs = 1; obs <= 6; ++obs)
    for (int i = 1; i <= 5; ++i) CHECK(check_observation(cycle(5), *empty.labeling, obs, i));
}

TEST_CASE("degree predicates") {
  CHECK(degree_bounded(realize_expression("(123451)")));
  CHECK_FALSE(degree_bounded(cycle(5)));
  CHECK(degree_bounded(complete(4)));
  CHECK(degree_window_ok(realize_expression("(12*435*1)")));
  CHECK_FALSE(degree_window_ok(realize_expression("(1)")));
  CHECK_FALSE(degree_window_ok(realize_expression("(1*)")));
  CHECK_THROWS_AS(degree_window_ok(complete(4)), std::invalid_argument);
}

TEST_CASE("index arithmetic") {
  CHECK(mod5(5) == 5);
  CHECK(mod5(6) == 1);
  CHECK(mod5(0) == 5);
  CHECK(mod5(-1) == 4);
}
