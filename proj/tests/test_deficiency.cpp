#include "oracles.hpp"

#include <magiclab/deficiency.hpp>
#include <magiclab/star_family.hpp>

#include <gtest/gtest.h>

using namespace magiclab;

namespace {

Graph cycle(int m) { return build_family({family::Cycle{m}}); }

/// Value n implies failures at every earlier n in the trace.
void expect_monotone_trace(const DeficiencyResult & r)
{
    if (! r.value)
        return;
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.back().n, *r.value);
    EXPECT_NE(r.trace.back().verdict, StepVerdict::fail);
    for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
        EXPECT_EQ(r.trace[i].n, static_cast<int>(i));
        EXPECT_EQ(r.trace[i].verdict, StepVerdict::fail);
    }
}

} // namespace

TEST(MuS, Examples)
{
    auto c3 = mu_s(cycle(3));
    EXPECT_EQ(c3.value, 0);
    EXPECT_TRUE(c3.witness && c3.witness->is_super());

    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(mu_s(*star::graph(n, 0)).value, 0);

    auto c4 = mu_s(cycle(4));
    EXPECT_EQ(c4.value, 1);
    expect_monotone_trace(c4);
    ASSERT_TRUE(c4.witness);
    EXPECT_EQ(c4.witness->graph().order(), 5);
}

TEST(MuS, SizeBoundSkipsHopelessCounts)
{
    // K4: q = 6 > 2p - 3 = 5, so n >= ceil(9/2) - 4 = 1
    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto r = mu_s(k4);
    ASSERT_TRUE(r.value);
    EXPECT_GE(*r.value, 1);
    expect_monotone_trace(r);
    EXPECT_EQ(r.trace.front().verdict, StepVerdict::fail);
}

TEST(MuS, ExceededCapIsNotInfinity)
{
    DeficiencyOptions opts;
    opts.cap = 0;
    auto r = mu_s(cycle(4), opts);
    EXPECT_EQ(r.status, DeficiencyStatus::exceeded_cap);
    EXPECT_FALSE(r.value);
    EXPECT_EQ(r.cap, 0);
    EXPECT_EQ(r.trace.size(), 1u);
}

TEST(Mu, Examples)
{
    EXPECT_EQ(mu(Graph(2, {{1, 2}})).value, 0);
    EXPECT_EQ(mu(cycle(4)).value, 0);
    EXPECT_EQ(mu(cycle(3)).value, 0);
}

TEST(Mu, NeverAboveMuS)
{
    for (const auto & g : {cycle(4), cycle(6), Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})}) {
        auto a = mu(g);
        auto b = mu_s(g);
        if (a.value && b.value) {
            EXPECT_LE(*a.value, *b.value);
        }
    }
}

TEST(MuPS, C3IsZero) { EXPECT_EQ(mu_p_s(cycle(3)).value, 0); }

// Closed form ceil((n-2)/2) for plain stars, confirmed against exhaustive SEM spectra.
TEST(MuPS, PlainStarsAgainstOracle)
{
    for (int n = 1; n <= 5; ++n) {
        auto r = mu_p_s(*star::graph(n, 0));
        ASSERT_TRUE(r.value) << "n=" << n;
        EXPECT_EQ(*r.value, std::max(0, (n - 1) / 2)) << "n=" << n;
        expect_monotone_trace(r);

        for (int t = 0; t <= *r.value; ++t) {
            auto g = star::graph(n, t);
            auto naive = oracle::naive_sem(*g);
            auto iv = sem_interval(*g).interval();
            const bool perfect = iv && static_cast<int>(naive.valences.size()) == iv->second - iv->first + 1;
            EXPECT_EQ(perfect, t == *r.value) << "n=" << n << " t=" << t;
        }
    }
}

TEST(MuPS, StarsPerfectExactlyWhenNAtMost2lPlus2)
{
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l <= 4; ++l) {
            auto v = is_perfect(*star::graph(n, l), Mode::sem);
            ASSERT_TRUE(v.perfect.has_value());
            EXPECT_EQ(*v.perfect, n <= 2 * l + 2) << "n=" << n << " l=" << l;
        }
}

TEST(MuP, StarsFinite)
{
    DeficiencyOptions opts;
    opts.cap = 6;
    for (int n = 1; n <= 4; ++n) {
        auto r = mu_p(*star::graph(n, 0), opts);
        EXPECT_EQ(r.status, DeficiencyStatus::determined) << "n=" << n;
        ASSERT_TRUE(r.spectrum);
        EXPECT_TRUE(r.spectrum->perfect);
        expect_monotone_trace(r);
    }
}

TEST(StrongMuPS, C3NeedsPositiveT)
{
    DeficiencyOptions opts;
    opts.cap = 3;
    auto r = strong_mu_p_s(cycle(3), 3, opts);
    EXPECT_NE(r.value, 0);
    EXPECT_EQ(r.window, 3);
    ASSERT_GE(r.trace.size(), 2u);
    EXPECT_EQ(r.trace[0].verdict, StepVerdict::perfect);
    EXPECT_EQ(r.trace[1].verdict, StepVerdict::fail);
    EXPECT_EQ(r.status, DeficiencyStatus::exceeded_cap);
}

TEST(StrongMuPS, WindowOneCapZero)
{
    // K2 and K2 + K1 are both perfect
    DeficiencyOptions opts;
    opts.cap = 0;
    auto r = strong_mu_p_s(Graph(2, {{1, 2}}), 1, opts);
    EXPECT_EQ(r.value, 0);
    EXPECT_EQ(r.trace.size(), 2u);
}

TEST(StrongMuPS, StarsSettleAtThreshold)
{
    for (int n = 1; n <= 5; ++n) {
        auto r = strong_mu_p_s(*star::graph(n, 0), 3);
        ASSERT_TRUE(r.value);
        EXPECT_EQ(*r.value, std::max(0, (n - 1) / 2));
    }
}

TEST(Deficiency, ParameterChecks)
{
    DeficiencyOptions bad;
    bad.cap = -1;
    EXPECT_THROW(mu_s(cycle(3), bad), ParameterError);
    EXPECT_THROW(strong_mu_p_s(cycle(3), 0), ParameterError);
}

TEST(Deficiency, GuardMakesResultInexact)
{
    DeficiencyOptions opts;
    opts.search.max_vertices = 4;
    auto r = mu_s(cycle(4), opts);
    EXPECT_EQ(r.status, DeficiencyStatus::inexact);
    EXPECT_EQ(r.trace.back().verdict, StepVerdict::inexact);

    DeficiencyOptions limited;
    limited.search.node_limit = 1;
    auto p = mu_p_s(build_family({family::Path{8}}), limited);
    EXPECT_EQ(p.status, DeficiencyStatus::inexact);
}
