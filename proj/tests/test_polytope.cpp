#include <doctest.h>

#include <random>
#include <set>

#include "properties.hpp"
#include "tperf/canonical.hpp"
#include "tperf/generators.hpp"
#include "tperf/polytope.hpp"

using namespace tperf;

namespace {

RatVector thirds(int n) {
  RatVector x(n);
  for (int i = 0; i < n; ++i) x[i] = Rational(1, 3);
  return x;
}

// Solves the square system given by `rows` (as equalities); nullopt if singular.
std::optional<RatVector> solve(const HPolytope& h, const std::vector<std::size_t>& rows) {
  const int n = h.dim;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = Rational(h.rows[rows[r]].coeffs[c]);
    m[r][n] = Rational(h.rows[rows[r]].rhs);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == Rational(0)) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == Rational(0)) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  RatVector x(n);
  for (int c = 0; c < n; ++c) x[c] = m[c][n] / m[c][c];
  return x;
}

// Every dim-subset of rows, solved as equalities, feasible solutions kept.
VertexList tight_subset_vertices(const HPolytope& h) {
  std::vector<RatVector> out;
  std::vector<std::size_t> pick(h.dim);
  const std::size_t m = h.rows.size();
  auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == h.dim) {
      if (auto x = solve(h, pick); x && contains_point(h, *x)) out.push_back(*x);
      return;
    }
    for (std::size_t r = start; r + (h.dim - depth) <= m; ++r) {
      pick[depth] = r;
      self(self, r + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return VertexList(std::move(out));
}

std::size_t subsets(std::size_t m, int k) {
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) c = c * (m - i) / (i + 1);
  return c;
}

}  // namespace

TEST_CASE("row counts") {
  CHECK(build_tstab_hrep(cycle(5)).rows.size() == 16);
  CHECK(build_tstab_hrep(complete(4)).rows.size() == 18);
  CHECK(build_tstab_hrep(empty_graph(3)).rows.size() == 6);
  const auto h = build_tstab_hrep(cycle(5));
  CHECK(h.rows[0].tag.kind == RowKind::kNonNeg);
  CHECK(h.rows[5].tag.kind == RowKind::kUpper);
  CHECK(h.rows[10].tag.kind == RowKind::kEdge);
  CHECK(h.rows[15].tag.kind == RowKind::kOddCycle);
  CHECK(h.rows[15].rhs == 2);
}

TEST_CASE("small vertex lists") {
  HPolytope square{2, {nonneg_row(2, 0), nonneg_row(2, 1), upper_row(2, 0), upper_row(2, 1)}};
  const auto sq = enumerate_vertices(square);
  CHECK(sq.size() == 4);
  CHECK(sq.contains(RatVector{Rational(1), Rational(0)}));

  const auto k3 = enumerate_vertices(build_tstab_hrep(complete(3)));
  CHECK(k3 == stab_vertices(complete(3)));
  CHECK(k3.size() == 4);

  const auto k4 = enumerate_vertices(build_tstab_hrep(complete(4)));
  CHECK(k4.size() == 6);
  CHECK(k4.contains(thirds(4)));
  CHECK(k4 == tight_subset_vertices(build_tstab_hrep(complete(4))));
  CHECK(dump_vertices(k4).find("1/3 1/3 1/3 1/3\n") != std::string::npos);
}

TEST_CASE("membership and integrality") {
  const auto h = build_tstab_hrep(complete(4));
  CHECK(contains_point(h, thirds(4)));
  RatVector half(4);
  for (int i = 0; i < 4; ++i) half[i] = Rational(1, 2);
  CHECK_FALSE(contains_point(h, half));
  CHECK(contains_point(h, RatVector(4)));
  CHECK(is_vertex_of(h, thirds(4)));
  CHECK_FALSE(is_vertex_of(h, half));

  CHECK(is_integral_point(RatVector{Rational(0), Rational(1), Rational(0)}));
  CHECK_FALSE(is_integral_point(thirds(4)));
  CHECK_FALSE(is_integral_point(RatVector{Rational(2), Rational(0)}));
  const auto k4 = enumerate_vertices(h);
  CHECK_FALSE(all_vertices_integral(k4));
  CHECK(first_fractional_vertex(k4) == thirds(4));
}

TEST_CASE("STAB vertices") {
  CHECK(stab_vertices(complete(3)).size() == 4);
  CHECK(stab_vertices(cycle(5)).size() == 11);
  CHECK(stab_vertices(Graph(1)).size() == 2);
  const auto c5 = enumerate_vertices(build_tstab_hrep(cycle(5)));
  CHECK(polytopes_equal(c5, stab_vertices(cycle(5))));
  CHECK_FALSE(polytopes_equal(enumerate_vertices(build_tstab_hrep(complete(4))),
                              stab_vertices(complete(4))));
  CHECK(polytopes_equal(c5, c5));
}

TEST_CASE("errors") {
  HPolytope open{2, {nonneg_row(2, 0), nonneg_row(2, 1)}};
  CHECK_THROWS_AS(enumerate_vertices(open), PolytopeError);
  CHECK_THROWS_AS(enumerate_vertices(build_tstab_hrep(cycle(12)), {10, false}),
                  DimensionCapExceeded);
  try {
    enumerate_vertices(build_tstab_hrep(cycle(12)), {10, false});
  } catch (const DimensionCapExceeded& e) {
    CHECK(std::string(e.what()).find("--dim-cap") != std::string::npos);
  }
}

TEST_CASE("double description matches the tight-subset oracle") {
  std::size_t compared = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      const auto h = build_tstab_hrep(g);
      if (n == 6 && subsets(h.rows.size(), n) > 60000) continue;
      ++compared;
      CHECK(enumerate_vertices(h) == tight_subset_vertices(h));
    }
  CHECK(compared > 100);
}

TEST_CASE("every enumerated vertex is feasible with tight rows of full rank") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testing::random_graph(rng, 4 + i % 6, 0.45);
    const auto h = build_tstab_hrep(g);
    const auto v = enumerate_vertices(h, {20, true});
    for (const auto& x : v.vertices()) {
      CHECK(contains_point(h, x));
      CHECK(row_rank(h, tight_rows(h, x)) == h.dim);
    }
  }
}

TEST_CASE("non-induced odd-cycle rows leave the polytope unchanged") {
  const auto r = testing::noninduced_rows(23, 100);
  CHECK(r.cases == 100);
  CHECK_MESSAGE(r.violations == 0, r.first_violation);
}
