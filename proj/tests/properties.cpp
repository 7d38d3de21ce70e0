#include "properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "tperf/canonical.hpp"
#include "tperf/graph6.hpp"
#include "tperf/pattern.hpp"
#include "tperf/polytope.hpp"

namespace tperf::testing {

namespace {

void flag(SuiteResult& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = what;
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<Cycle> all_odd_cycles(const Graph& g) {
  std::vector<Cycle> out;
  const int n = g.order();
  Cycle path;
  // cycles rooted at their smallest vertex s, second vertex < last vertex
  auto dfs = [&](auto&& self, int s, int v, VertexSet used) -> void {
    for (int w : g.neighbors(v).to_vector()) {
      if (w < s) continue;
      if (w == s) {
        if (path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (used.contains(w)) continue;
      path.push_back(w);
      self(self, s, w, used.with(w));
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    dfs(dfs, s, s, VertexSet::single(s));
  }
  return out;
}

SuiteResult t_minor_closure(std::uint64_t seed, std::size_t count, Classifier& classifier) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(5, 9);
  std::uniform_real_distribution<double> density(0.2, 0.6);
  while (r.cases < count) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    if (!classifier.t_perfect(g).t_perfect) continue;
    ++r.cases;
    for (const Graph& m : one_step_t_minors(g))
      if (!classifier.t_perfect(m).t_perfect) {
        flag(r, graph6_encode(g) + " has t-imperfect minor " + graph6_encode(m));
        break;
      }
  }
  return r;
}

SuiteResult noninduced_rows(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(5, 9);
  std::uniform_real_distribution<double> density(0.2, 0.5);
  constexpr std::size_t kMaxExtraRows = 150;
  while (r.cases < count) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    HPolytope h = build_tstab_hrep(g);
    const auto induced = enumerate_induced_odd_cycles(g);
    const std::set<Cycle> induced_set(induced.begin(), induced.end());
    HPolytope wide = h;
    std::size_t extra = 0;
    for (const Cycle& c : all_odd_cycles(g)) {
      Cycle key = c;
      if (induced_set.count(key)) continue;
      if (extra++ == kMaxExtraRows) break;
      wide.rows.push_back(odd_cycle_row(g.order(), c));
    }
    if (extra == 0) continue;
    ++r.cases;
    if (enumerate_vertices(h) != enumerate_vertices(wide)) flag(r, graph6_encode(g));
  }
  return r;
}

SuiteResult graph6_round_trip(int max_n, std::uint64_t seed, std::size_t random_count) {
  SuiteResult r;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) {
      ++r.cases;
      if (graph6_decode(graph6_encode(g)) != g) flag(r, graph6_encode(g));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, kMaxVertices);
  for (std::size_t i = 0; i < random_count; ++i) {
    const Graph g = random_graph(rng, order(rng), 0.5);
    ++r.cases;
    if (graph6_decode(graph6_encode(g)) != g) flag(r, graph6_encode(g));
  }
  return r;
}

SuiteResult pattern_round_trip(int max_k) {
  SuiteResult r;
  for (unsigned sub = 0; sub < 32; ++sub) {
    if (std::popcount(sub) > max_k) continue;
    enumerate_pattern_graphs(sub << 1, false, [&](const PatternSpec& spec, const Graph& g) {
      ++r.cases;
      const std::string text = format_pattern(spec);
      const PatternSpec back = parse_pattern(text);
      if (realize_pattern(back) != g || format_pattern(back) != text) flag(r, text);
    });
  }
  return r;
}

SuiteResult relabel_invariance(const std::vector<Graph>& graphs, std::size_t relabelings,
                               std::uint64_t seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  for (const Graph& g : graphs) {
    const std::string form = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < relabelings; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ++r.cases;
      if (canonical_form(relabel(g, perm)) != form) flag(r, graph6_encode(g));
    }
  }
  return r;
}

}  // namespace tperf::testing
