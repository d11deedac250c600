#include "oracles.hpp"

#include <magiclab/enumeration.hpp>
#include <magiclab/graph_pool.hpp>
#include <magiclab/star_family.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace magiclab;

namespace {

std::set<int> as_set(const std::vector<int> & v) { return {v.begin(), v.end()}; }

void expect_valid_witnesses(const SpectrumReport & r)
{
    for (const auto & [k, f] : r.witnesses) {
        EXPECT_EQ(valence(f), k);
        if (r.kind == Mode::sem) {
            EXPECT_TRUE(f.is_super());
        }
    }
}

} // namespace

TEST(EnumerateSem, C3)
{
    auto r = enumerate_sem(build_family({family::Cycle{3}}));
    EXPECT_EQ(r.achieved, std::vector{9});
    EXPECT_TRUE(r.perfect);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.labeling_count, 1u);
    expect_valid_witnesses(r);
}

TEST(EnumerateSem, C3PlusK1)
{
    auto r = enumerate_sem(build_family({family::Cycle{3}}).with_isolated(1));
    EXPECT_EQ(r.achieved, (std::vector{10, 12}));
    EXPECT_EQ(*r.interval.interval(), std::pair(10, 12));
    EXPECT_FALSE(r.perfect);
}

TEST(EnumerateSem, PrunedGraphsAreNotSearched)
{
    auto c4 = build_family({family::Cycle{4}});
    auto r = enumerate_sem(c4);
    EXPECT_TRUE(r.achieved.empty());
    EXPECT_FALSE(r.stats.pruned_by.empty());
    EXPECT_EQ(r.stats.nodes, 0u);

    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    EXPECT_FALSE(prune_feasibility(k4).possibly_sem);
    EXPECT_TRUE(prune_feasibility(Graph(2, {{1, 2}})).possibly_sem);
    EXPECT_TRUE(prune_feasibility(build_family({family::Path{3}})).possibly_sem);
}

// The size and triangle rules never reject a super edge-magic graph.
TEST(Feasibility, SoundOnPool)
{
    for (const auto & g : small_graph_pool(2, 6)) {
        if (g.size() == 0 || prune_feasibility(g).possibly_sem)
            continue;
        EXPECT_TRUE(oracle::naive_sem(g).valences.empty()) << serialize_graph(g);
    }
}

TEST(EnumerateSem, CountsSignatureClasses)
{
    EXPECT_EQ(enumerate_sem(*star::graph(3, 2)).labeling_count, 12u);
    SearchOptions raw;
    raw.dedup = false;
    // raw labelings permute the leaves; isolated vertices take leftover labels in order
    EXPECT_EQ(enumerate_sem(*star::graph(3, 2), raw).labeling_count, 12u * 6u);
}

TEST(EnumerateEm, StarValences)
{
    auto r = enumerate_em(*star::graph(3, 0));
    EXPECT_EQ(r.achieved, (std::vector{10, 12, 14}));
    expect_valid_witnesses(r);
}

TEST(EnumerateEm, C4)
{
    auto r = enumerate_em(build_family({family::Cycle{4}}));
    EXPECT_EQ(r.achieved, (std::vector{12, 13, 14, 15}));
    EXPECT_TRUE(r.perfect);
}

TEST(Guards, RefuseLargeInputs)
{
    SearchOptions opts;
    opts.max_vertices = 5;
    EXPECT_THROW(enumerate_sem(build_family({family::Path{6}}), opts), GuardError);
    opts.max_labels = 8;
    EXPECT_THROW(enumerate_em(build_family({family::Cycle{5}}), opts), GuardError);
    EXPECT_THROW(enumerate_sem(Graph(3, {})), IntervalError);
}

TEST(Limits, NodeLimitMakesResultInexact)
{
    SearchOptions opts;
    opts.node_limit = 50;
    auto r = enumerate_em(build_family({family::Cycle{6}}), opts);
    EXPECT_FALSE(r.exact);
    EXPECT_FALSE(r.perfect);
    expect_valid_witnesses(r);

    auto verdict = is_perfect(build_family({family::Cycle{6}}), Mode::em, opts);
    EXPECT_FALSE(verdict.perfect.has_value());

    auto found = find_labeling(build_family({family::Cycle{6}}), Mode::sem, opts);
    EXPECT_FALSE(found.witness);
}

TEST(Limits, TimeLimitZeroStopsSearch)
{
    SearchOptions opts;
    opts.time_limit = 0.0;
    auto r = enumerate_sem(build_family({family::Path{10}}), opts);
    EXPECT_FALSE(r.exact);
}

TEST(FindLabeling, ExistenceAndNonExistence)
{
    auto found = find_labeling(build_family({family::Cycle{4}}).with_isolated(1), Mode::sem);
    ASSERT_TRUE(found.witness);
    EXPECT_TRUE(found.witness->is_super());
    EXPECT_NO_THROW(valence(*found.witness));

    auto none = find_labeling(build_family({family::Cycle{4}}), Mode::sem);
    EXPECT_FALSE(none.witness);
    EXPECT_TRUE(none.exact);

    auto em = find_labeling(build_family({family::Cycle{4}}), Mode::em);
    ASSERT_TRUE(em.witness);
}

TEST(IsPerfect, Paths)
{
    for (int n = 2; n <= 8; ++n) {
        auto v = is_perfect(build_family({family::Path{n}}), Mode::sem);
        ASSERT_TRUE(v.perfect.has_value());
        EXPECT_TRUE(*v.perfect) << "P" << n;
    }
}

TEST(Workers, ResultsIndependentOfWorkerCount)
{
    for (const auto & g : {*star::graph(4, 3), build_family({family::Cycle{5}}).with_isolated(1),
                           build_family({family::Path{7}})}) {
        SearchOptions one;
        one.collect_all = true;
        auto base_sem = enumerate_sem(g, one);
        auto base_em = enumerate_em(g, one);
        for (int w : {2, 4}) {
            SearchOptions many = one;
            many.workers = w;
            auto sem = enumerate_sem(g, many);
            auto em = enumerate_em(g, many);
            EXPECT_EQ(sem.achieved, base_sem.achieved);
            EXPECT_EQ(sem.labeling_count, base_sem.labeling_count);
            EXPECT_EQ(sem.stats.nodes, base_sem.stats.nodes);
            EXPECT_EQ(sem.labelings, base_sem.labelings);
            EXPECT_EQ(em.achieved, base_em.achieved);
            EXPECT_EQ(em.labelings, base_em.labelings);
            for (const auto & [k, f] : sem.witnesses)
                EXPECT_EQ(f, base_sem.witnesses.at(k));
            auto a = find_labeling(g, Mode::sem, one);
            auto b = find_labeling(g, Mode::sem, many);
            ASSERT_TRUE(a.witness && b.witness);
            EXPECT_EQ(*a.witness, *b.witness);
        }
    }
}

// Pruned search against exhaustive permutation search.
TEST(Oracle, SemSpectrumMatchesNaiveOnPool)
{
    for (const auto & g : small_graph_pool(2, 6)) {
        if (g.size() == 0)
            continue;
        auto naive = oracle::naive_sem(g);
        auto r = enumerate_sem(g);
        EXPECT_EQ(as_set(r.achieved), naive.valences) << serialize_graph(g);
        EXPECT_EQ(r.labeling_count.value_or(0), naive.classes) << serialize_graph(g);
        EXPECT_FALSE(r.signature_collision);
    }
}

TEST(Oracle, EmSpectrumMatchesNaiveOnPool)
{
    for (const auto & g : small_graph_pool(2, 6)) {
        if (g.size() == 0 || g.order() + g.size() > 8)
            continue;
        auto naive = oracle::naive_em(g);
        auto r = enumerate_em(g);
        EXPECT_EQ(as_set(r.achieved), naive.valences) << serialize_graph(g);
        EXPECT_EQ(r.labeling_count.value_or(0), naive.classes) << serialize_graph(g);
    }
}

TEST(Spectrum, AchievedInsideInterval)
{
    for (const auto & g : small_graph_pool(2, 6)) {
        if (g.size() == 0 || g.order() + g.size() > 10)
            continue;
        for (Mode mode : {Mode::sem, Mode::em}) {
            SearchOptions opts;
            opts.count = false;
            auto r = enumerate(g, mode, opts);
            for (int k : r.achieved)
                EXPECT_TRUE(r.interval.contains(k)) << serialize_graph(g) << " k=" << k;
        }
    }
}
