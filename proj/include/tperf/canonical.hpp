#pragma once

#include <string>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

/// Result of canonical labelling: `perm[v]` is the canonical label of v and
/// `graph` is `relabel(g, perm)`. Isomorphic inputs give identical `graph`
/// and `form`.
struct CanonicalLabeling {
  std::vector<int> perm;
  Graph graph;
  std::string form;
};

// Individualisation-refinement: equitable refinement by neighbour counts, then
// a backtracking search over the first smallest non-singleton cell, keeping the
// leaf with the lexicographically smallest row-major upper-triangle bitstring.
// Automorphisms found at equal leaves prune sibling branches in the same orbit.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Byte string: the order, then the canonical upper triangle packed MSB first.
std::string canonical_form(const Graph& g);
std::string to_hex(const std::string& bytes);
std::string canonical_hex(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);
bool is_self_complementary(const Graph& g);

}  // namespace tperf

namespace tperf {

/// All graphs of order n up to isomorphism, by vertex addition with
/// canonical-form rejection. Sorted by canonical form. Intended for n <= 8.
std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace tperf
