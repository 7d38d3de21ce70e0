#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tperf/graph.hpp"

namespace tperf {

/// All throw std::invalid_argument on out-of-range parameters.
Graph cycle(int l);             // l >= 3
Graph path(int l);              // l >= 1
Graph complete(int l);          // l >= 1
Graph empty_graph(int l);       // l >= 1
Graph wheel(int l);             // l >= 3, hub is the last vertex
Graph cycle_power(int l, int k);  // l >= 3, k >= 1
/// Complement of cycle_power(2 * two_k, two_k - 2); two_k even and >= 4.
Graph mobius_ladder(int two_k);

// Transcribed graph lists, loaded from data/catalog.json (compiled in).

const nlohmann::json& catalog();
const std::string& catalog_text();
/// 64-bit FNV-1a of catalog_text().
std::uint64_t catalog_checksum();

struct AnchoredPattern {
  std::string anchor;
  std::string pattern;
};

/// The ten (3,3)-partitionable graphs, first row then second row.
std::vector<AnchoredPattern> partitionable_patterns();
/// The five self-complementary t-perfect graphs on nine vertices.
std::vector<AnchoredPattern> self_complementary_patterns();
/// The 31 graphs claimed t-perfect by clique deletion.
std::vector<std::string> t_perfect_patterns();

struct DeletionClaim {
  bool k4_free_perfect = false;
  std::string graph;  // expression for a t-perfect graph, when not k4_free_perfect
};

struct CliqueDeletionRow {
  std::string graph;
  std::vector<std::string> clique;  // e.g. {"v3", "v4", "u1"}
  std::vector<DeletionClaim> deletions;  // one per clique vertex, same order
};

std::vector<CliqueDeletionRow> clique_deletion_rows();
/// Reductions for the minors of the two ten-vertex graphs with five rings missing.
std::vector<CliqueDeletionRow> imperfect_pair_rows();

struct GridCell {
  enum class Kind { kDegree, kObservation, kGraph, kComplementGraph };
  Kind kind = Kind::kDegree;
  int u = 0, degree = 0;   // kDegree: d(u_u) = degree
  int obs = 0, i = 0;      // kObservation: violated at rotation i
  std::string graph;       // kGraph / kComplementGraph
  std::string text;        // as written in the data file
};

struct GridRow {
  unsigned ring_mask = 0;
  std::vector<GridCell> cells;
};

/// Configurations with U = {u1, u2, u3}: rows are ring sets, columns U-edge sets.
struct OrderEightGrid {
  std::vector<std::vector<std::pair<int, int>>> columns;
  std::vector<std::string> column_names;
  std::vector<GridRow> rows;
  std::vector<std::string> named_t_perfect;
  std::vector<std::pair<std::string, std::string>> isomorphisms;
};

OrderEightGrid order_eight_grid();

}  // namespace tperf
