#include <doctest.h>

#include "tperf/verify.hpp"

using namespace tperf;

TEST_CASE("campaign names") {
  CHECK(campaign_names().size() == 10);
  Classifier c;
  CampaignContext ctx{c};
  CHECK_THROWS_AS(run_campaign("nope", ctx), std::invalid_argument);
}

TEST_CASE("report bookkeeping") {
  CampaignReport r{"demo", {}, {"a note"}};
  r.checks.push_back({"holds", "x/1", "Bw", "true", "true", true, 1.5});
  r.checks.push_back({"fails", "x/2", "C~", "true", "false", false, 0.25});
  CHECK(r.total() == 2);
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.ok());
  const auto j = r.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["checks"][1]["input"] == "C~");
  CHECK(j["checks"][0].contains("ms"));
  CHECK_FALSE(r.to_json(false)["checks"][0].contains("ms"));
  const std::string text = r.to_text();
  CHECK(text.find("FAIL x/2") != std::string::npos);
  CHECK(text.find("x/1") == std::string::npos);
  CHECK(r.to_text(true).find("ok   x/1") != std::string::npos);
}

TEST_CASE("quick campaigns pass and are deterministic") {
  for (const char* name : {"families", "fig2", "census", "prop7", "lemma20", "table1"}) {
    Classifier a, b;
    CampaignContext ca{a, 1}, cb{b, 4};
    const auto ra = run_campaign(name, ca);
    const auto rb = run_campaign(name, cb);
    CHECK_MESSAGE(ra.ok(), ra.to_text());
    CHECK(ra.to_json(false).dump() == rb.to_json(false).dump());
  }
}

TEST_CASE("failed checks carry a reproducible graph6 input") {
  Classifier c;
  CampaignContext ctx{c};
  for (const char* name : {"prop7", "fig2", "table1"}) {
    const auto r = run_campaign(name, ctx);
    std::size_t with_input = 0;
    for (const auto& check : r.checks) with_input += !check.input.empty();
    CHECK(with_input > r.total() / 2);
  }
}
