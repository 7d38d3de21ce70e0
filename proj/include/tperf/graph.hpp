#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tperf {

inline constexpr int kMaxVertices = 31;

/// A set of vertices of a graph on at most kMaxVertices vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1u << v)); }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(1u << v));
  }
  constexpr bool subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Simple undirected graph on 1..31 vertices; adjacency is one bitset per
/// vertex. Symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Checks symmetry, irreflexivity and that no bit above n-1 is set.
  bool valid() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);

/// Vertices are relabelled 0..|s|-1 in ascending order of original index.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
Graph delete_vertices(const Graph& g, VertexSet s);

/// Applies `perm` (old vertex -> new vertex).
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
int independence_number(const Graph& g);
int clique_number(const Graph& g);
/// Lexicographically first maximum clique of size >= k, if any.
std::optional<VertexSet> find_clique_of_size(const Graph& g, int k);

/// All independent sets, the empty set included, in ascending bit order.
std::vector<VertexSet> enumerate_independent_sets(const Graph& g);
std::vector<VertexSet> enumerate_cliques(const Graph& g);

using Cycle = std::vector<int>;

/// Every chordless cycle of odd length >= 3, once each. Rotation: smallest
/// vertex first, then its smaller cycle neighbour. Sorted by (length, lex).
std::vector<Cycle> enumerate_induced_odd_cycles(const Graph& g);
/// Induced odd cycles of length >= 5.
std::vector<Cycle> find_odd_holes(const Graph& g);

bool is_perfect(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_almost_bipartite(const Graph& g);
/// Vertices whose deletion leaves the graph bipartite.
VertexSet bipartizing_vertices(const Graph& g);

/// Returns a clique whose removal disconnects the graph; the empty set when
/// g itself is disconnected.
std::optional<VertexSet> find_clique_separator(const Graph& g);
bool has_clique_separator(const Graph& g);

bool is_pq_partitionable(const Graph& g, int p, int q);

}  // namespace tperf
