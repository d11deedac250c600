// Randomized properties over seeded graphs.

#include "oracles.hpp"

#include <magiclab/enumeration.hpp>
#include <magiclab/intervals.hpp>
#include <magiclab/json_io.hpp>

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace magiclab;

namespace {

Graph random_graph(std::mt19937 & rng, int p, double density)
{
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    if (edges.empty())
        edges.push_back({1, 2});
    std::ranges::shuffle(edges, rng);
    return Graph(p, std::move(edges));
}

} // namespace

TEST(Properties, ValencesInsideIntervals)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> order(2, 8);
    std::uniform_real_distribution<double> density(0.15, 0.6);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, order(rng), density(rng));
        SearchOptions opts;
        opts.count = false;
        auto sem = enumerate_sem(g, opts);
        for (int k : sem.achieved)
            EXPECT_TRUE(sem.interval.contains(k)) << serialize_graph(g);
        if (g.order() + g.size() <= 12) {
            auto em = enumerate_em(g, opts);
            for (int k : em.achieved)
                EXPECT_TRUE(em.interval.contains(k)) << serialize_graph(g);
            // super edge-magic valences are edge-magic valences
            for (int k : sem.achieved)
                EXPECT_TRUE(em.achieves(k)) << serialize_graph(g);
        }
    }
}

TEST(Properties, ComplementIdentitiesOnRandomGraphs)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> order(3, 7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, order(rng), 0.35);
        const int p = g.order();
        const int q = g.size();
        SearchOptions opts;
        opts.collect_all = true;
        opts.dedup = false;
        for (const auto & f : enumerate_sem(g, opts).labelings) {
            auto c = complement(f, Mode::sem);
            ASSERT_EQ(valence(f) + valence(c), 4 * p + q + 3);
            ASSERT_EQ(complement(c, Mode::sem), f);
        }
        if (p + q > 9)
            continue;
        for (const auto & f : enumerate_em(g, opts).labelings) {
            auto c = complement(f, Mode::em);
            ASSERT_EQ(valence(f) + valence(c), 3 * (p + q + 1));
            ASSERT_EQ(complement(c, Mode::em), f);
        }
    }
}

TEST(Properties, RandomVertexLabelingsExtendIffConsecutive)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = std::make_shared<const Graph>(random_graph(rng, 6, 0.4));
        std::vector<int> labels{1, 2, 3, 4, 5, 6};
        std::ranges::shuffle(labels, rng);
        VertexLabeling f(g, labels);
        auto sums = f.edge_sums();
        std::ranges::sort(sums);
        bool consecutive = true;
        for (std::size_t i = 1; i < sums.size(); ++i)
            consecutive = consecutive && sums[i] == sums[i - 1] + 1;
        if (consecutive) {
            auto t = extend_sem(f);
            EXPECT_EQ(valence(t), g->order() + g->size() + sums.front());
        }
        else {
            EXPECT_THROW(extend_sem(f), NotExtendableError);
        }
    }
}

TEST(Properties, EdgeOrderDoesNotChangeSpectrum)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(rng, 6, 0.4);
        auto edges = std::vector<Edge>(g.edges().begin(), g.edges().end());
        std::ranges::shuffle(edges, rng);
        Graph h(g.order(), edges);
        auto a = enumerate_sem(g);
        auto b = enumerate_sem(h);
        EXPECT_EQ(a.achieved, b.achieved);
        EXPECT_EQ(a.labeling_count, b.labeling_count);
    }
}

TEST(Properties, ParallelRunsSerializeIdentically)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = random_graph(rng, 7, 0.3);
        SearchOptions base;
        base.collect_all = true;
        std::string reference;
        for (int w : {1, 2, 4}) {
            SearchOptions opts = base;
            opts.workers = w;
            auto r = enumerate_sem(g, opts);
            json j = to_json(r);
            for (const auto & f : r.labelings)
                j["labelings"].push_back(to_json(f));
            if (w == 1)
                reference = j.dump();
            else
                EXPECT_EQ(j.dump(), reference) << "workers=" << w;
        }
    }
}
