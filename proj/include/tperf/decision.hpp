#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tperf/graph.hpp"
#include "tperf/polytope.hpp"

namespace tperf {

struct DecisionOptions {
  int dim_cap = 20;
  /// When g contains a K4, report the all-1/3 point on it (checked to be a
  /// vertex of P(G)) instead of enumerating the whole polytope.
  bool certificate_shortcuts = true;
};

struct TPerfection {
  bool t_perfect = true;
  /// A fractional vertex of P(G), present iff !t_perfect.
  std::optional<RatVector> witness;
};

TPerfection is_t_perfect(const Graph& g, const DecisionOptions& opts = {});

/// N(v) independent and nonempty.
bool can_t_contract(const Graph& g, int v);
/// Contracts N(v) + v into one vertex placed at v's position; the other
/// survivors keep their relative order. Throws std::invalid_argument unless
/// can_t_contract(g, v).
Graph t_contract(const Graph& g, int v);

/// All vertex deletions, then every valid t-contraction, deduplicated by
/// canonical form (first occurrence kept).
std::vector<Graph> one_step_t_minors(const Graph& g);

bool is_minimally_t_imperfect(const Graph& g, const DecisionOptions& opts = {});
bool is_core(const Graph& g, const DecisionOptions& opts = {});

/// Everything is expressed on the canonical relabelling of the input, so
/// isomorphic inputs produce identical verdicts.
struct Verdict {
  std::string graph6;
  std::string canonical;  // hex
  int n = 0;
  bool t_perfect = true;
  std::optional<RatVector> witness;
  std::optional<bool> minimally_t_imperfect;
  std::optional<bool> core;

  nlohmann::json to_json() const;
  std::string to_text() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Memoising front end keyed by canonical form. Safe to share between
/// threads; each canonical form is enumerated at most once.
class Classifier {
 public:
  explicit Classifier(DecisionOptions opts = {});
  ~Classifier();
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  /// Witness, if any, is in g's own vertex order.
  TPerfection t_perfect(const Graph& g);
  bool minimally_t_imperfect(const Graph& g);
  bool core(const Graph& g);

  enum class Depth { kTPerfection, kMinimality, kFull };
  Verdict classify(const Graph& g, Depth depth = Depth::kFull);

  const DecisionOptions& options() const { return opts_; }
  /// Number of vertex enumerations (or certificate checks) actually run.
  std::size_t polytope_runs() const;
  std::size_t cached_forms() const;

 private:
  struct Impl;
  DecisionOptions opts_;
  std::unique_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Labelling around a 5-hole.

struct HoleLabeling {
  std::array<int, 5> cycle{};  // v1..v5
  std::array<int, 6> u{-1, -1, -1, -1, -1, -1};  // u[i] for i = 1..5, -1 if absent
  unsigned ring_mask = 0;  // bit i set iff u_i v_i is an edge

  bool has(int i) const;
  bool ringed(int i) const;
  /// Indices i with u_i present, ascending.
  std::vector<int> indices() const;
};

struct HoleViolation {
  int vertex = -1;
  std::string clause;
};

struct HoleLabelResult {
  std::optional<HoleLabeling> labeling;
  std::optional<HoleViolation> violation;
};

/// 1-based index arithmetic mod 5 with residue 0 read as 5.
int mod5(int i);

/// `hole` lists v1..v5 in cyclic order. Every other vertex must see exactly
/// two consecutive hole vertices {v_i, v_i+1} (named u_{i+3}) or exactly
/// three non-consecutive ones {v_i, v_i+1, v_i+3} (named u_{i+3}, ringed),
/// and no two vertices may receive the same name. Throws
/// std::invalid_argument when `hole` is not an induced 5-cycle.
HoleLabelResult label_five_hole(const Graph& g, const Cycle& hole);

/// Truth of observation `obs` (1..6) at rotation i (1..5), including the
/// mirrored variant where one is stated. Edges at absent u-vertices count as
/// missing.
bool check_observation(const Graph& g, const HoleLabeling& lab, int obs, int i);

/// 3 <= d(v) <= 5 for every vertex.
bool degree_bounded(const Graph& g);
/// 2 < d(u) < n - 3 for every vertex off the hole.
bool degree_window_ok(const Graph& g, const HoleLabeling& lab);
/// Same, on the first 5-hole of g; throws std::invalid_argument if none.
bool degree_window_ok(const Graph& g);

}  // namespace tperf
