#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tperf/decision.hpp"

namespace tperf {

struct CheckRecord {
  std::string claim;
  std::string anchor;
  std::string input;  // graph6 where a single graph is involved
  std::string expected;
  std::string observed;
  bool ok = false;
  double ms = 0;
};

struct CampaignReport {
  std::string campaign;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

  std::size_t total() const { return checks.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool ok() const { return failed() == 0; }

  /// {schema, campaign, total, passed, failed, notes, checks: [...]}
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text(bool verbose = false) const;
};

struct CampaignContext {
  Classifier& classifier;
  int jobs = 1;
  int oracle_max_order = 7;
};

CampaignReport verify_clique_deletion_list(CampaignContext& ctx);  // prop7
CampaignReport verify_imperfect_pair(CampaignContext& ctx);        // lemma20
CampaignReport verify_partitionable(CampaignContext& ctx);         // fig2
CampaignReport verify_complement_pairs(CampaignContext& ctx);      // theorem1
CampaignReport verify_self_complementary(CampaignContext& ctx);    // theorem2
CampaignReport verify_order_eight_grid(CampaignContext& ctx);      // table1
CampaignReport verify_order_nine(CampaignContext& ctx);            // section3
CampaignReport verify_small_census(CampaignContext& ctx);          // census
CampaignReport verify_named_families(CampaignContext& ctx);        // families
CampaignReport verify_oracle_sweep(CampaignContext& ctx);          // oracle

/// CLI names in run order, without "all".
const std::vector<std::string>& campaign_names();
/// Throws std::invalid_argument for an unknown name.
CampaignReport run_campaign(const std::string& name, CampaignContext& ctx);

/// Published counts of graphs on n = 1..10 vertices up to isomorphism.
inline constexpr long kGraphCensus[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};

}  // namespace tperf
