#include "hkverify/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace hkverify;

TEST_CASE("default report") {
    const Report r = run_report(ReportConfig{});
    CHECK(r.records.size() >= 30);
    CHECK(std::is_sorted(r.records.begin(), r.records.end(),
                         [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; }));
    for (const auto& rec : r.records) {
        if (rec.verdict == Verdict::Pass) CHECK(rec.computed == rec.stated);
        if (rec.computed == rec.stated) CHECK(rec.verdict == Verdict::Pass);
        CHECK(rec.verdict != Verdict::Fail);
    }
    CHECK(r.summary().fail == 0);

    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j.contains("version"));
    CHECK(j.contains("config"));
    CHECK(j["records"].size() == r.records.size());
    CHECK(j["summary"]["pass"] == r.summary().pass);
    CHECK(to_json(r) == to_json(run_report(ReportConfig{})));
}

TEST_CASE("filtered report") {
    ReportConfig cfg;
    cfg.only = "chi-end";
    const Report r = run_report(cfg);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].verdict == Verdict::Pass);

    cfg.only = "ch1sq-ch2";
    const Report d = run_report(cfg);
    const auto it = std::find_if(d.records.begin(), d.records.end(),
                                 [](const ClaimRecord& c) { return c.claim_id == "ch1sq-ch2"; });
    REQUIRE(it != d.records.end());
    CHECK(it->verdict == Verdict::Discrepancy);
    CHECK(it->stated == "576a^2 - 540a + 81");
    CHECK(it->computed == "288a^2 - 324a + 81");
    CHECK(to_markdown(d).find("## Warnings") != std::string::npos);
}

TEST_CASE("invalid configuration") {
    ReportConfig cfg;
    cfg.a_max = 0;
    CHECK_THROWS_AS(run_report(cfg), PreconditionError);
    cfg = ReportConfig{};
    cfg.abar_max = -1;
    CHECK_THROWS_AS(run_report(cfg), PreconditionError);
}
