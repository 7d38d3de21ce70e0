#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tperf/decision.hpp"
#include "tperf/graph.hpp"

namespace tperf::testing {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;  // graph6 or description
};

Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Every odd cycle of length >= 3 (chords allowed), once each.
std::vector<Cycle> all_odd_cycles(const Graph& g);

/// Random t-perfect graphs of order 5..9: every one-step t-minor is t-perfect.
SuiteResult t_minor_closure(std::uint64_t seed, std::size_t count, Classifier& classifier);
/// Random graphs of order 5..9: extra rows for non-induced odd cycles leave the
/// vertex set unchanged.
SuiteResult noninduced_rows(std::uint64_t seed, std::size_t count);
/// Every graph with n <= max_n, plus random graphs up to order 31.
SuiteResult graph6_round_trip(int max_n, std::uint64_t seed, std::size_t random_count);
/// Every enumerated pattern spec with at most max_k u-vertices.
SuiteResult pattern_round_trip(int max_k);
/// `relabelings` random relabellings of each graph keep its canonical form.
SuiteResult relabel_invariance(const std::vector<Graph>& graphs, std::size_t relabelings,
                               std::uint64_t seed);

}  // namespace tperf::testing
