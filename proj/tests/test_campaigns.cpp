#include <gtest/gtest.h>

#include "skg/campaigns.hpp"

using namespace skg;

TEST(Report, JsonShapeAndSummary)
{
    VerificationReport rep{"demo", {{"max_n", 3}}, {}};
    rep.check(Record{"ks", 3, 2, "chi_b", 2, 2, RecordStatus::pass, 1.5, 7, {}});
    rep.check(Record{"ks", 3, 3, "chi_b", 1, 2, RecordStatus::pass, 0.5, 7, {}});
    rep.add(Record{"ss", 4, 2, "seen", nullptr, 3, RecordStatus::observed, 0.0, 0, {{"x", 1}}});
    auto s = rep.summary();
    EXPECT_EQ(s.pass, 1);
    EXPECT_EQ(s.fail, 1);
    EXPECT_EQ(s.observed, 1);
    EXPECT_FALSE(rep.passed());

    auto j = rep.to_json();
    EXPECT_EQ(j["campaign"], "demo");
    ASSERT_EQ(j["records"].size(), 3u);
    EXPECT_EQ(j["records"][1]["status"], "fail");
    EXPECT_EQ(j["records"][1]["ok"], false);
    EXPECT_EQ(j["records"][2]["ok"], true);
    EXPECT_FALSE(j["records"][0].contains("elapsed_ms"));
    EXPECT_FALSE(j["summary"].contains("total_ms"));
    EXPECT_TRUE(rep.to_json(true)["records"][0].contains("elapsed_ms"));
    EXPECT_EQ(j["summary"]["records"], 3);
    std::vector<std::string> keys;
    for (auto it = j["records"][0].begin(); it != j["records"][0].end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"family", "n", "k", "statistic", "expected",
                                              "observed", "ok", "status", "seed"}));
}

TEST(Campaigns, ReportsAreByteStable)
{
    CampaignOptions opt;
    opt.max_n = 4;
    EXPECT_EQ(run_campaign("signedK", opt).dump(), run_campaign("signedK", opt).dump());
    opt.samples = 20;
    EXPECT_EQ(run_campaign("oracle", opt).dump(), run_campaign("oracle", opt).dump());
}

TEST(Campaigns, SmallRunsPass)
{
    CampaignOptions opt;
    opt.max_n = 4;
    opt.samples = 20;
    for (const char* name : {"signedK", "signedS", "neg-hat", "prop24", "oracle", "counts",
                             "embedding", "k2-matching", "gale"}) {
        auto rep = run_campaign(name, opt);
        EXPECT_TRUE(rep.passed()) << name;
        EXPECT_FALSE(rep.records.empty()) << name;
    }
    EXPECT_THROW(run_campaign("nope", opt), input_error);
}

TEST(Campaigns, FullSchrijverNegativeFailsOnlyForSingletons)
{
    CampaignOptions opt;
    opt.max_n = 4;
    auto rep = run_campaign("neg-full", opt);
    for (const auto& r : rep.records) {
        if (r.family == "ss-" && r.k == 1 && r.n >= 2)
            EXPECT_EQ(r.status, RecordStatus::fail) << r.n;
        else
            EXPECT_TRUE(r.ok()) << r.family << " " << r.n << "," << r.k;
    }
}

TEST(Campaigns, RegistryNames)
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : campaign_registry())
        names.push_back(name);
    EXPECT_EQ(names.size(), 16u);
    EXPECT_EQ(names.front(), "signedK");
}
