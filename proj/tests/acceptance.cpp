// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "properties.hpp"
#include "tperf/canonical.hpp"
#include "tperf/decision.hpp"
#include "tperf/generators.hpp"
#include "tperf/graph6.hpp"
#include "tperf/pattern.hpp"
#include "tperf/verify.hpp"

using namespace tperf;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

const CheckRecord* find_check(const CampaignReport& r, const std::string& anchor) {
  for (const auto& c : r.checks)
    if (c.anchor == anchor) return &c;
  return nullptr;
}

std::string summary(const CampaignReport& r) {
  std::string s = r.campaign + " " + std::to_string(r.passed()) + "/" + std::to_string(r.total());
  for (const auto& c : r.checks)
    if (!c.ok) return s + "; first failure " + c.anchor + ": observed " + c.observed;
  return s;
}

Outcome campaign(const std::string& name) {
  Classifier c;
  CampaignContext ctx{c, jobs()};
  const auto r = run_campaign(name, ctx);
  return {r.ok(), summary(r)};
}

Outcome k4_witness() {
  Classifier c;
  const Verdict v = c.classify(graph6_decode("C~"));
  const std::string w = v.witness ? v.witness->to_string() : "none";
  return {!v.t_perfect && w == "1/3 1/3 1/3 1/3", "witness " + w};
}

Outcome clique_deletion_list() {
  Classifier c;
  CampaignContext ctx{c, jobs()};
  const auto r = verify_clique_deletion_list(ctx);
  std::size_t direct = 0;
  for (const auto& check : r.checks)
    if (check.ok && check.claim.find("is t-perfect (direct)") != std::string::npos &&
        check.anchor.rfind("t-perfect-list/", 0) == 0)
      ++direct;
  return {r.ok() && direct == 31, std::to_string(direct) + "/31 direct; " + summary(r)};
}

Outcome complement_pairs() {
  Classifier c;
  CampaignContext ctx{c, jobs()};
  const auto r = verify_complement_pairs(ctx);
  const auto* count = find_check(r, "sweep/order10/count");
  const auto* set = find_check(r, "sweep/order10/set");
  const bool ok = r.ok() && count && count->ok && set && set->ok;
  return {ok, "order-10 forms " + (count ? count->observed : std::string("?")) + "; " + summary(r)};
}

Outcome self_complementary() {
  Classifier c;
  CampaignContext ctx{c, jobs()};
  const auto r = verify_self_complementary(ctx);
  const auto* all = find_check(r, "self-complementary/all");
  const auto* eight = find_check(r, "self-complementary/order8");
  return {r.ok() && all && all->ok && eight && eight->observed == "0", summary(r)};
}

Outcome grid_and_order_nine() {
  Classifier c;
  CampaignContext ctx{c, jobs()};
  const auto grid = verify_order_eight_grid(ctx);
  const auto nine = verify_order_nine(ctx);
  const auto* sc = find_check(nine, "order9/self-complementary/count");
  return {grid.ok() && nine.ok() && sc && sc->observed == "5",
          summary(grid) + "; " + summary(nine)};
}

Outcome small_census() {
  Classifier c;
  CampaignContext ctx{c, jobs()};
  const auto r = verify_small_census(ctx);
  const auto* classes = find_check(r, "census/order7/classes");
  return {r.ok(), summary(r) + "; counts 1, 2, 16 as named pattern graphs, order 7 gives " +
                      (classes ? classes->observed : std::string("?")) +
                      " isomorphism classes since reflection identifies (1*2) with (12*)"};
}

Outcome properties() {
  Classifier c;
  std::vector<std::string> parts;
  bool ok = true;
  auto add = [&](const char* name, const testing::SuiteResult& r, std::size_t want) {
    ok = ok && r.violations == 0 && r.cases >= want;
    parts.push_back(std::string(name) + " " + std::to_string(r.violations) + "/" +
                    std::to_string(r.cases));
  };
  add("closure", testing::t_minor_closure(37, 200, c), 200);
  add("non-induced rows", testing::noninduced_rows(23, 100), 100);
  add("graph6", testing::graph6_round_trip(7, 3, 200), 1452);
  add("pattern", testing::pattern_round_trip(3), 731);
  std::vector<Graph> graphs = {cycle(5), wheel(5), mobius_ladder(4), complement(cycle(7))};
  for (const auto& p : partitionable_patterns()) graphs.push_back(realize_expression(p.pattern));
  add("relabel", testing::relabel_invariance(graphs, 1000, 5), 1000 * graphs.size());
  std::string detail = "violations/cases:";
  for (const auto& p : parts) detail += " " + p + ";";
  detail.pop_back();
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "K4 witness", 1, k4_witness},
      {2, "31 listed graphs t-perfect, direct and by clique deletion", 120, clique_deletion_list},
      {3, "ten (3,3)-partitionable graphs", 600, [] { return campaign("fig2"); }},
      {4, "complement-pair sweep gives the ten partitionable graphs", 3600, complement_pairs},
      {5, "self-complementary sweep gives C5 and five graphs", 600, self_complementary},
      {6, "order-8 grid and order-9 degree-bounded census", 900, grid_and_order_nine},
      {7, "small core-graph census", 300, small_census},
      {8, "named families", 300, [] { return campaign("families"); }},
      {9, "oracle equivalence on all graphs up to order 7", 1800, [] { return campaign("oracle"); }},
      {10, "property suites", 1800, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.ok && s <= c.limit_s;
    failed += !ok;
    std::printf("criterion %2d %s: %s (%.2f s, limit %.0f s) %s\n", c.id, c.title,
                ok ? "PASS" : "FAIL", s, c.limit_s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
