#include "tperf/graph.hpp"

#include <algorithm>
#include <functional>

namespace tperf {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in 1.." +
                                std::to_string(kMaxVertices) + ", got " +
                                std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("bad edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  }
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(1u << v);
  adj_[v] &= ~(1u << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::valid() const {
  if (n_ < 1 || n_ > kMaxVertices) return false;
  const std::uint32_t mask = VertexSet::range(n_).bits();
  for (int v = 0; v < kMaxVertices; ++v) {
    if (v >= n_) {
      if (adj_[v] != 0) return false;
      continue;
    }
    if (adj_[v] & ~mask) return false;
    if (has_edge(v, v)) return false;
    for (int u = 0; u < n_; ++u)
      if (has_edge(u, v) != has_edge(v, u)) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph of empty set");
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set out of range");
  const auto keep = s.to_vector();
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices().without(v));
}

Graph delete_vertices(const Graph& g, VertexSet s) {
  return induced_subgraph(g, g.vertices() - s);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && (s.without(v)).subset_of(g.neighbors(v)); });
  return ok;
}

bool is_independent(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && (g.neighbors(v) & s).empty(); });
  return ok;
}

namespace {

int max_independent(const Graph& g, VertexSet cand, int size, int best) {
  if (cand.empty()) return std::max(size, best);
  if (size + cand.size() <= best) return best;
  // Branch on a vertex of maximum degree inside the candidate set.
  int pick = -1, pick_deg = -1;
  cand.for_each([&](int v) {
    int d = (g.neighbors(v) & cand).size();
    if (d > pick_deg) pick = v, pick_deg = d;
  });
  if (pick_deg == 0) return std::max(best, size + cand.size());
  best = max_independent(g, cand - g.neighbors(pick).with(pick), size + 1, best);
  best = max_independent(g, cand.without(pick), size, best);
  return best;
}

}  // namespace

int independence_number(const Graph& g) {
  return max_independent(g, g.vertices(), 0, 0);
}

int clique_number(const Graph& g) { return independence_number(complement(g)); }

std::optional<VertexSet> find_clique_of_size(const Graph& g, int k) {
  std::optional<VertexSet> found;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet clique,
                                                       VertexSet cand) {
    if (found) return;
    if (clique.size() == k) {
      found = clique;
      return;
    }
    if (clique.size() + cand.size() < k) return;
    cand.for_each([&](int v) {
      if (found) return;
      // Only extend with larger vertices to visit each clique once.
      VertexSet later(cand.bits() & ~((2u << v) - 1u));
      grow(clique.with(v), later & g.neighbors(v));
    });
  };
  grow(VertexSet{}, g.vertices());
  return found;
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, int)> rec = [&](VertexSet cur, int next) {
    out.push_back(cur);
    for (int v = next; v < g.order(); ++v)
      if ((g.neighbors(v) & cur).empty()) rec(cur.with(v), v + 1);
  };
  rec(VertexSet{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g) {
  return enumerate_independent_sets(complement(g));
}

std::vector<Cycle> enumerate_induced_odd_cycles(const Graph& g) {
  std::vector<Cycle> out;
  const int n = g.order();
  std::vector<int> path;
  // Extend chordless paths that start at their smallest vertex `s`.
  std::function<void(VertexSet)> extend = [&](VertexSet on_path) {
    const int s = path.front();
    const int last = path.back();
    VertexSet interior = on_path.without(s).without(last);
    VertexSet cand = g.neighbors(last) - on_path;
    cand.for_each([&](int w) {
      if (w < s) return;
      if (!(g.neighbors(w) & interior).empty()) return;
      const bool closes = path.size() >= 2 && g.has_edge(w, s);
      if (closes) {
        if (path[1] < w && (path.size() + 1) % 2 == 1) {
          Cycle c = path;
          c.push_back(w);
          out.push_back(std::move(c));
        }
        return;
      }
      path.push_back(w);
      extend(on_path.with(w));
      path.pop_back();
    });
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    extend(VertexSet::single(s));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Cycle> find_odd_holes(const Graph& g) {
  auto cycles = enumerate_induced_odd_cycles(g);
  std::erase_if(cycles, [](const Cycle& c) { return c.size() < 5; });
  return cycles;
}

bool is_perfect(const Graph& g) {
  return find_odd_holes(g).empty() && find_odd_holes(complement(g)).empty();
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  VertexSet seen = VertexSet::single(within.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next = next | g.neighbors(v); });
    next = (next & within) - seen;
    seen = seen | next;
    frontier = next;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

namespace {

bool bipartite_within(const Graph& g, VertexSet within) {
  std::array<int, kMaxVertices> color;
  color.fill(-1);
  bool ok = true;
  within.for_each([&](int root) {
    if (!ok || color[root] != -1) return;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty() && ok) {
      int v = stack.back();
      stack.pop_back();
      (g.neighbors(v) & within).for_each([&](int w) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          ok = false;
        }
      });
    }
  });
  return ok;
}

}  // namespace

bool is_bipartite(const Graph& g) { return bipartite_within(g, g.vertices()); }

VertexSet bipartizing_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (bipartite_within(g, g.vertices().without(v))) out = out.with(v);
  return out;
}

bool is_almost_bipartite(const Graph& g) {
  return is_bipartite(g) || !bipartizing_vertices(g).empty();
}

std::optional<VertexSet> find_clique_separator(const Graph& g) {
  if (!is_connected(g)) return VertexSet{};
  for (VertexSet k : enumerate_cliques(g)) {
    if (k.empty()) continue;
    VertexSet rest = g.vertices() - k;
    if (rest.size() >= 2 && !is_connected(g, rest)) return k;
  }
  return std::nullopt;
}

bool has_clique_separator(const Graph& g) {
  return find_clique_separator(g).has_value();
}

namespace {

// Exact cover of `todo` by blocks of the given size drawn from `blocks`.
bool exact_cover(VertexSet todo, const std::vector<VertexSet>& blocks) {
  if (todo.empty()) return true;
  const int v = todo.first();
  for (VertexSet b : blocks)
    if (b.contains(v) && b.subset_of(todo) && exact_cover(todo - b, blocks))
      return true;
  return false;
}

}  // namespace

bool is_pq_partitionable(const Graph& g, int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("p and q must be >= 2");
  if (g.order() != p * q + 1) return false;
  std::vector<VertexSet> stable_p, clique_q;
  for (VertexSet s : enumerate_independent_sets(g))
    if (s.size() == p) stable_p.push_back(s);
  for (VertexSet s : enumerate_cliques(g))
    if (s.size() == q) clique_q.push_back(s);
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = g.vertices().without(v);
    if (!exact_cover(rest, stable_p) || !exact_cover(rest, clique_q)) return false;
  }
  return true;
}

}  // namespace tperf
