#include <magiclab/verifier.hpp>

#include <gtest/gtest.h>

using namespace magiclab;

TEST(Verifier, CatalogIsComplete)
{
    auto names = suite_names();
    EXPECT_EQ(names.size(), 15u);
    EXPECT_NE(std::ranges::find(names, "c3-family"), names.end());
    EXPECT_THROW(run_suite("no-such-suite"), UnknownSuiteError);
}

TEST(Verifier, C3FamilyPasses)
{
    auto r = run_suite("c3-family");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.count(Verdict::pass), static_cast<int>(r.cases.size()));
}

TEST(Verifier, PassingSuites)
{
    for (auto name : {"sigma-q2p3", "sigma-q2p4", "forbidden-valence-girth4", "star-T1T2", "star-ST1-consecutive",
                      "star-fk", "star-E3F2", "paths-perfect", "complement-identities", "interval-oracle"}) {
        auto r = run_suite(name);
        EXPECT_TRUE(r.passed()) << to_text(r);
        EXPECT_FALSE(r.cases.empty()) << name;
    }
}

TEST(Verifier, DiscrepanciesAreDocumentedNotFailed)
{
    auto r = run_suite("star-interval-discrepancy");
    EXPECT_TRUE(r.passed()) << to_text(r);
    EXPECT_GT(r.count(Verdict::discrepancy_documented), 0);
    for (const auto & c : r.cases)
        if (c.verdict == Verdict::discrepancy_documented) {
            EXPECT_NE(c.expected, c.observed);
        }
}

TEST(Verifier, OnlyDiscrepancySuiteDocuments)
{
    for (const auto & r : run_suites("all"))
        if (r.suite != "star-interval-discrepancy") {
            EXPECT_EQ(r.count(Verdict::discrepancy_documented), 0) << r.suite;
        }
}

TEST(Verifier, DeterministicAcrossWorkers)
{
    SuiteParams two;
    two.workers = 2;
    for (auto name : {"star-count", "sigma-q2p4", "star-perfect-iff"}) {
        auto a = to_json(run_suite(name));
        auto b = to_json(run_suite(name, two));
        EXPECT_EQ(a.dump(), b.dump()) << name;
    }
}

TEST(Verifier, ReportJsonShape)
{
    auto j = to_json(run_suite("c3-family"));
    EXPECT_EQ(j["suite"], "c3-family");
    EXPECT_TRUE(j["passed"].get<bool>());
    ASSERT_FALSE(j["cases"].empty());
    for (auto key : {"instance", "expected", "observed", "verdict"})
        EXPECT_TRUE(j["cases"][0].contains(key));
}
