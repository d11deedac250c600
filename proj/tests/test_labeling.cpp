#include <magiclab/labeling.hpp>

#include <gtest/gtest.h>

#include <memory>

using namespace magiclab;

namespace {

std::shared_ptr<const Graph> cycle3() { return std::make_shared<const Graph>(build_family({family::Cycle{3}})); }

} // namespace

TEST(TotalLabeling, ChecksBijection)
{
    auto g = cycle3();
    EXPECT_NO_THROW(TotalLabeling(g, {1, 2, 3}, {6, 4, 5}));
    EXPECT_THROW(TotalLabeling(g, {1, 2, 3}, {6, 4, 4}), ParameterError);
    EXPECT_THROW(TotalLabeling(g, {1, 2, 7}, {6, 4, 5}), ParameterError);
    EXPECT_THROW(TotalLabeling(g, {1, 2}, {6, 4, 5}), ParameterError);
    EXPECT_THROW(VertexLabeling(g, {1, 1, 2}), ParameterError);
}

TEST(Valence, AcceptsMagicAndNamesConflictingEdges)
{
    auto g = cycle3();
    // edges 1-2, 2-3, 1-3
    TotalLabeling f(g, {1, 2, 3}, {6, 4, 5});
    EXPECT_EQ(valence(f), 9);
    EXPECT_TRUE(is_edge_magic(f));

    TotalLabeling bad(g, {1, 2, 3}, {4, 5, 6});
    EXPECT_FALSE(is_edge_magic(bad));
    try {
        valence(bad);
        FAIL();
    }
    catch (const NotEdgeMagicError & e) {
        EXPECT_NE(e.first_edge(), e.second_edge());
    }
}

TEST(Valence, UndefinedWithoutEdges)
{
    auto g = std::make_shared<const Graph>(Graph(2, {}));
    EXPECT_THROW(valence(TotalLabeling(g, {1, 2}, {})), IntervalError);
}

TEST(ExtendSem, ConsecutiveSumsExtend)
{
    auto g = std::make_shared<const Graph>(build_family({family::Path{4}}));
    // sums 3+1, 1+4, 4+2 = 4,5,6
    auto f = extend_sem(VertexLabeling(g, {3, 1, 4, 2}));
    EXPECT_TRUE(f.is_super());
    EXPECT_EQ(valence(f), 4 + 3 + 4);
}

TEST(ExtendSem, GapsAreReported)
{
    auto g = std::make_shared<const Graph>(build_family({family::Path{3}}));
    EXPECT_NO_THROW(extend_sem(VertexLabeling(g, {1, 3, 2})));
    auto p4 = std::make_shared<const Graph>(build_family({family::Path{4}}));
    try {
        extend_sem(VertexLabeling(p4, {1, 2, 3, 4}));
        FAIL();
    }
    catch (const NotExtendableError & e) {
        EXPECT_EQ(e.sums(), (std::vector<int>{3, 5, 7}));
    }
}

TEST(Complement, IdentitiesAndInvolution)
{
    auto g = cycle3();
    TotalLabeling f(g, {1, 2, 3}, {6, 4, 5});
    const int p = 3;
    const int q = 3;

    auto s = complement(f, Mode::sem);
    EXPECT_TRUE(s.is_super());
    EXPECT_EQ(valence(f) + valence(s), 4 * p + q + 3);
    EXPECT_EQ(complement(s, Mode::sem), f);

    auto e = complement(f, Mode::em);
    EXPECT_EQ(valence(f) + valence(e), 3 * (p + q + 1));
    EXPECT_EQ(complement(e, Mode::em), f);
}

TEST(Complement, SuperModeNeedsSuperLabeling)
{
    auto g = std::make_shared<const Graph>(Graph(2, {{1, 2}}));
    TotalLabeling f(g, {1, 3}, {2});
    EXPECT_FALSE(f.is_super());
    EXPECT_THROW(complement(f, Mode::sem), ModeError);
    EXPECT_NO_THROW(complement(f, Mode::em));
}

TEST(Characteristics, LowAndHighSums)
{
    auto g = std::make_shared<const Graph>(build_family({family::Path{4}}));
    auto f = extend_sem(VertexLabeling(g, {3, 1, 4, 2}));
    auto c = characteristics(f);
    EXPECT_EQ(c.low, 4);
    EXPECT_EQ(c.high, 6);
}

TEST(Isomorphism, SignaturesIgnoreVertexNames)
{
    auto g = cycle3();
    TotalLabeling a(g, {1, 2, 3}, {6, 4, 5});
    TotalLabeling b(g, {2, 3, 1}, {4, 5, 6});
    EXPECT_EQ(valence(b), 9);
    EXPECT_TRUE(isomorphic(a, b));

    auto path = std::make_shared<const Graph>(build_family({family::Path{3}}));
    TotalLabeling c(path, {1, 3, 2}, {5, 4});
    TotalLabeling d(path, {3, 1, 2}, {5, 4});
    EXPECT_FALSE(isomorphic(c, d));

    auto other = std::make_shared<const Graph>(Graph(3, {{1, 2}, {1, 3}}));
    TotalLabeling e(other, {1, 3, 2}, {5, 4});
    EXPECT_THROW(isomorphic(c, e), ComparisonError);
}
