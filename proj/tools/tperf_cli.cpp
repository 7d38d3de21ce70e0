#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tperf/canonical.hpp"
#include "tperf/decision.hpp"
#include "tperf/generators.hpp"
#include "tperf/graph6.hpp"
#include "tperf/parallel.hpp"
#include "tperf/pattern.hpp"
#include "tperf/verify.hpp"

namespace {

using namespace tperf;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultMaxOrder = 10;

const char* kFooter = R"(Graphs are given as graph6 or, with a leading '(', in pattern notation
around a fixed 5-cycle v1..v5 (vertices 0..4, then u_j in ascending j):
  digit j        u_j, joined to v_{j+2} and v_{j+3}
  j*             ring: u_j is also joined to v_j
  12             U-edge u1 u2 (consecutive digits in a component)
  1|2            '|' separates components
  12341          first digit repeated last closes a U-cycle
  (U=123;E=12,13,23;R=1)   explicit U-edge set
  (P)-u2, (P)-{u3,u4}, (P)-v3   vertex deletions

Exit status: 0 all requested checks passed, 1 a check failed,
2 usage or input error.)";

struct Globals {
  std::string format = "text";
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int dim_cap = 20;
  bool allow_large = false;
  double time_budget = 0;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& text) {
  try {
    if (!text.empty() && text.front() == '(') return realize_expression(text);
    return graph6_decode(text);
  } catch (const ParseError& e) {
    throw InputError("cannot parse graph '" + text + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError("cannot parse graph '" + text + "': " + e.what());
  }
}

DecisionOptions decision_options(const Globals& g) {
  DecisionOptions opts;
  opts.dim_cap = g.allow_large ? g.dim_cap : std::min(g.dim_cap, kDefaultMaxOrder);
  return opts;
}

bool json_out(const Globals& g) { return g.format == "json"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void start_watchdog(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::fprintf(stderr, "error: time budget of %.1f s exceeded\n", seconds);
    std::fflush(stdout);
    std::_Exit(kExitFail);
  }).detach();
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& arg) {
  const Graph graph = read_graph(arg);
  Classifier classifier(decision_options(g));
  const Verdict v = classifier.classify(graph);
  if (json_out(g)) {
    json j = v.to_json();
    j["input"] = arg;
    print_json(j);
  } else {
    std::cout << "input       " << arg << "\n" << v.to_text();
  }
  return 0;
}

int cmd_minors(const Globals& g, const std::string& arg) {
  const Graph graph = read_graph(arg);
  Classifier classifier(decision_options(g));
  const auto minors = one_step_t_minors(graph);
  const auto tp = parallel_map(minors.size(), g.jobs, [&](std::size_t i) -> char {
    return classifier.t_perfect(minors[i]).t_perfect ? 1 : 0;
  });
  if (json_out(g)) {
    json j{{"input", arg}, {"graph6", graph6_encode(graph)}, {"minors", json::array()}};
    for (std::size_t i = 0; i < minors.size(); ++i)
      j["minors"].push_back({{"graph6", graph6_encode(minors[i])},
                             {"n", minors[i].order()},
                             {"t_perfect", tp[i] != 0}});
    print_json(j);
  } else {
    std::cout << minors.size() << " one-step t-minors of " << graph6_encode(graph) << "\n";
    for (std::size_t i = 0; i < minors.size(); ++i)
      std::cout << graph6_encode(minors[i]) << "  n=" << minors[i].order()
                << (tp[i] ? "  t-perfect" : "  t-imperfect") << "\n";
  }
  return 0;
}

struct Generated {
  std::string name;
  Graph graph;
};

int cmd_gen(const Globals& g, const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw InputError(std::string("usage: gen ") + usage);
  };
  std::vector<Generated> out;
  auto add_patterns = [&](const std::vector<std::string>& names) {
    for (const auto& p : names) out.push_back({p, realize_expression(p)});
  };
  try {
    if (family == "cycle") {
      need(1, "cycle N");
      out.push_back({"C" + std::to_string(params[0]), cycle(params[0])});
    } else if (family == "path") {
      need(1, "path N");
      out.push_back({"P" + std::to_string(params[0]), path(params[0])});
    } else if (family == "complete") {
      need(1, "complete N");
      out.push_back({"K" + std::to_string(params[0]), complete(params[0])});
    } else if (family == "wheel") {
      need(1, "wheel N   (N rim vertices)");
      out.push_back({"W" + std::to_string(params[0]), wheel(params[0])});
    } else if (family == "cyclepower") {
      need(2, "cyclepower L K");
      out.push_back({"C" + std::to_string(params[0]) + "^" + std::to_string(params[1]),
                     cycle_power(params[0], params[1])});
    } else if (family == "mobius") {
      need(1, "mobius N   (N even; 2N vertices)");
      out.push_back({"M" + std::to_string(params[0]), mobius_ladder(params[0])});
    } else if (family == "fig2") {
      need(0, "fig2");
      std::vector<std::string> names;
      for (const auto& p : partitionable_patterns()) names.push_back(p.pattern);
      add_patterns(names);
    } else if (family == "fig3") {
      need(0, "fig3");
      std::vector<std::string> names;
      for (const auto& p : self_complementary_patterns()) names.push_back(p.pattern);
      add_patterns(names);
    } else if (family == "prop7") {
      need(0, "prop7");
      add_patterns(t_perfect_patterns());
    } else {
      throw InputError("unknown family '" + family +
                       "' (cycle, path, complete, wheel, cyclepower, mobius, fig2, fig3, prop7)");
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (json_out(g)) {
    json j{{"family", family}, {"params", params}, {"graphs", json::array()}};
    for (const auto& [name, graph] : out)
      j["graphs"].push_back({{"name", name}, {"n", graph.order()}, {"graph6", graph6_encode(graph)}});
    print_json(j);
  } else {
    for (const auto& [name, graph] : out)
      std::cout << graph6_encode(graph) << "  " << name << "\n";
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::string& which, bool verbose, bool no_timing,
               int oracle_max_order) {
  std::vector<std::string> names;
  if (which == "all") {
    names = campaign_names();
  } else if (std::find(campaign_names().begin(), campaign_names().end(), which) !=
             campaign_names().end()) {
    names = {which};
  } else {
    throw InputError("unknown campaign '" + which + "'");
  }
  Classifier classifier(decision_options(g));
  CampaignContext ctx{classifier, g.jobs, oracle_max_order};
  std::vector<CampaignReport> reports;
  bool ok = true;
  for (const auto& name : names) {
    reports.push_back(run_campaign(name, ctx));
    ok = ok && reports.back().ok();
    if (!json_out(g)) std::cout << reports.back().to_text(verbose) << std::flush;
  }
  if (json_out(g)) {
    if (reports.size() == 1) {
      print_json(reports.front().to_json(!no_timing));
    } else {
      json j{{"schema", 1}, {"campaigns", json::array()}};
      std::size_t total = 0, passed = 0;
      for (const auto& r : reports) {
        j["campaigns"].push_back(r.to_json(!no_timing));
        total += r.total();
        passed += r.passed();
      }
      j["total"] = total;
      j["passed"] = passed;
      j["failed"] = total - passed;
      print_json(j);
    }
  } else if (reports.size() > 1) {
    std::size_t total = 0, passed = 0;
    for (const auto& r : reports) total += r.total(), passed += r.passed();
    std::cout << "all: " << passed << "/" << total << " checks passed\n";
  }
  return ok ? 0 : kExitFail;
}

int cmd_enumerate(const Globals& g, int order, bool core_only) {
  const int k = order - 5;
  Classifier classifier(decision_options(g));
  struct Item {
    std::string pattern;
    Graph graph;
  };
  std::vector<Item> items;
  std::set<std::string> seen;
  for (unsigned sub = 0; sub < 32; ++sub) {
    if (std::popcount(sub) != k) continue;
    enumerate_pattern_graphs(sub << 1, false, [&](const PatternSpec& spec, const Graph& graph) {
      if (seen.insert(canonical_form(graph)).second) items.push_back({format_pattern(spec), graph});
    });
  }
  std::vector<char> keep(items.size(), 1);
  if (core_only)
    keep = parallel_map(items.size(), g.jobs, [&](std::size_t i) -> char {
      return classifier.core(items[i].graph) ? 1 : 0;
    });
  if (json_out(g)) {
    json j{{"order", order}, {"core_only", core_only}, {"graphs", json::array()}};
    for (std::size_t i = 0; i < items.size(); ++i)
      if (keep[i])
        j["graphs"].push_back({{"pattern", items[i].pattern},
                               {"graph6", graph6_encode(items[i].graph)}});
    j["count"] = j["graphs"].size();
    print_json(j);
  } else {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (keep[i]) std::cout << graph6_encode(items[i].graph) << "  " << items[i].pattern << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide t-perfection of small graphs and replay the classification campaigns.",
               "tperf"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
  app.add_option("--dim-cap", g.dim_cap, "Largest order for a polytope run")
      ->check(CLI::Range(1, 31))
      ->capture_default_str();
  app.add_flag("--allow-large", g.allow_large, "Allow polytope runs above order 10");
  app.add_option("--time-budget", g.time_budget, "Wall-clock limit in seconds (0 = none)");

  std::string graph_arg;
  auto* check = app.add_subcommand("check", "Classify one graph");
  check->add_option("graph", graph_arg, "graph6 or pattern")->required();

  auto* minors = app.add_subcommand("minors", "List the one-step t-minors of a graph");
  minors->add_option("graph", graph_arg, "graph6 or pattern")->required();

  std::string family;
  std::vector<int> params;
  auto* gen = app.add_subcommand("gen", "Generate a named family");
  gen->add_option("family", family,
                  "cycle, path, complete, wheel, cyclepower, mobius, fig2, fig3, prop7")
      ->required();
  gen->add_option("params", params, "Integer parameters");

  std::string campaign;
  bool verbose = false, no_timing = false;
  int oracle_max_order = 7;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  std::vector<std::string> choices = campaign_names();
  choices.push_back("all");
  verify->add_option("campaign", campaign, "Campaign name")
      ->required()
      ->check(CLI::IsMember(choices));
  verify->add_flag("--verbose,-v", verbose, "List passing checks too");
  verify->add_flag("--no-timing", no_timing, "Omit per-check timings from JSON");
  verify->add_option("--oracle-max-order", oracle_max_order, "Largest order in the oracle sweep")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();

  int order = 0;
  bool core_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List pattern graphs of one order");
  enumerate->add_option("--order", order, "Order 6..10")->required()->check(CLI::Range(6, 10));
  enumerate->add_flag("--core-only", core_only, "Keep only core graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  start_watchdog(g.time_budget);
  try {
    if (check->parsed()) return cmd_check(g, graph_arg);
    if (minors->parsed()) return cmd_minors(g, graph_arg);
    if (gen->parsed()) return cmd_gen(g, family, params);
    if (verify->parsed()) return cmd_verify(g, campaign, verbose, no_timing, oracle_max_order);
    if (enumerate->parsed()) return cmd_enumerate(g, order, core_only);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
