#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

// Graphs built around a fixed 5-cycle v1..v5. Each u_j (j in 1..5) is joined
// to v_{j+2} and v_{j+3}; a ring on j adds u_j v_j. ASCII surface syntax:
//
//   ()              the bare 5-cycle
//   (1324)          one U-path u1-u3-u2-u4
//   (14|23)         two components
//   (1*2*3*4*5*1*)  a U-cycle (first digit repeated last), every index ringed
//   (U=1234;E=12,13,14;R=1)   explicit U-edge set, for U-graphs that are not
//                             disjoint paths and cycles
struct PatternSpec {
  unsigned index_mask = 0;  // bit j set iff u_j exists
  unsigned ring_mask = 0;   // bit j set iff u_j v_j is an edge
  std::vector<std::pair<int, int>> u_edges;  // (a, b) with a < b, sorted

  std::vector<int> indices() const;
  bool has(int j) const { return (index_mask >> j) & 1u; }
  bool ringed(int j) const { return (ring_mask >> j) & 1u; }
  bool has_u_edge(int a, int b) const;
  /// True when the U-graph has a vertex of degree 3 or more, so only the
  /// explicit edge-set form can name it.
  bool needs_explicit_form() const;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

/// Throws ParseError (with byte offset) on malformed input.
PatternSpec parse_pattern(std::string_view text);

/// v1..v5 are vertices 0..4, then u_j in ascending j.
Graph realize_pattern(const PatternSpec& spec);

/// Vertex of u_j / v_j in realize_pattern(spec); -1 if u_j is absent.
int u_vertex(const PatternSpec& spec, int j);
inline int v_vertex(int j) { return j - 1; }

/// Components sorted by smallest index, paths from the smaller end, cycles
/// from the smallest index towards its smaller neighbour, ring written once.
std::string format_pattern(const PatternSpec& spec);

/// A pattern optionally followed by vertex deletions:
///   (12*435*1)-u2     (12*3451)-{u3,u4}     (123)-v3
Graph realize_expression(std::string_view text);

/// Every assignment of the potential edges (U-pairs in lexicographic order,
/// then rings in ascending order; assignment bits in that order) for the
/// u-indices in `index_mask`. With `dedupe`, only the first graph of each
/// isomorphism class is reported.
void enumerate_pattern_graphs(unsigned index_mask, bool dedupe,
                              const std::function<void(const PatternSpec&, const Graph&)>& visit);

/// 2^(C(k,2) + k) for k = popcount(index_mask).
std::size_t pattern_space_size(unsigned index_mask);

}  // namespace tperf
