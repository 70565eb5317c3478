#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "skg/constructions.hpp"
#include "skg/random.hpp"
#include "skg/sgcore.hpp"

using namespace skg;
using skg::test::signed_graph;

namespace {

bool brute_force_balanced(const SignedGraph& g)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        auto h = apply_switching(g, test::switching_from_mask(g.order(), mask));
        bool all_positive = true;
        for (const auto& e : h.edges())
            all_positive = all_positive && e.sign == Sign::positive;
        if (all_positive)
            return true;
    }
    return g.order() == 0;
}

// Sign products of all simple cycles of length >= 3, one entry per sign choice.
std::vector<int> cycle_products(const SignedGraph& g)
{
    std::vector<int> out;
    const int n = g.order();
    std::vector<int> path;
    std::vector<char> on(n, 0);
    std::function<void(int, int, int)> dfs = [&](int start, int v, int product) {
        for (auto nb : g.neighbors(v)) {
            int w = nb.vertex;
            int p = product * to_int(nb.sign);
            if (w == start && path.size() >= 3) {
                out.push_back(p);
                continue;
            }
            if (w <= start || on[w])
                continue;
            on[w] = 1;
            path.push_back(w);
            dfs(start, w, p);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, 0);
        on[s] = 1;
        dfs(s, s, 1);
    }
    // Digon edges are listed in sign order, so only the multiset is stable.
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Switch, PathMiddleVertexFlipsBothEdges)
{
    auto g = signed_graph(3, {{0, 1, +1}, {1, 2, +1}});
    std::vector<int> x{1};
    auto h = switch_vertices(g, x);
    EXPECT_TRUE(h.has_edge(0, 1, Sign::negative));
    EXPECT_TRUE(h.has_edge(1, 2, Sign::negative));
    EXPECT_EQ(h.edges().size(), 2u);
}

TEST(Switch, EmptySetIsIdentity)
{
    auto g = signed_graph(4, {{0, 1, +1}, {1, 2, -1}, {2, 3, +1}, {0, 3, -1}, {0, 3, +1}});
    std::vector<int> none;
    EXPECT_EQ(switch_vertices(g, none), g);
}

TEST(Switch, TriangleMovesTheNegativeEdge)
{
    auto g = signed_graph(3, {{0, 1, -1}, {1, 2, +1}, {0, 2, +1}});
    std::vector<int> x{0};
    auto h = switch_vertices(g, x);
    EXPECT_TRUE(h.has_edge(0, 1, Sign::positive));
    EXPECT_TRUE(h.has_edge(0, 2, Sign::negative));
    EXPECT_TRUE(h.has_edge(1, 2, Sign::positive));
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        auto s = apply_switching(g, test::switching_from_mask(3, mask));
        int negatives = 0;
        for (const auto& e : s.edges())
            negatives += e.sign == Sign::negative;
        EXPECT_EQ(negatives % 2, 1);
    }
}

TEST(Switch, DigonStaysDigon)
{
    auto g = signed_graph(2, {{0, 1, +1}, {0, 1, -1}});
    std::vector<int> x{0};
    EXPECT_EQ(switch_vertices(g, x), g);
}

TEST(SignedGraph, LoopsAndDuplicates)
{
    auto g = signed_graph(3, {{0, 0, +1}, {0, 1, +1}, {1, 0, +1}, {1, 2, -1}});
    EXPECT_EQ(g.edges().size(), 2u);
    EXPECT_THROW(signed_graph(2, {{1, 1, -1}}), input_error);
    EXPECT_THROW(signed_graph(2, {{0, 2, +1}}), input_error);
}

TEST(Balance, Triangles)
{
    auto bad = signed_graph(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}});
    auto v = is_balanced(bad);
    EXPECT_FALSE(v.balanced);
    EXPECT_EQ(v.cycle.size(), 3u);

    auto good = signed_graph(3, {{0, 1, +1}, {1, 2, -1}, {0, 2, -1}});
    auto w = is_balanced(good);
    ASSERT_TRUE(w.balanced);
    for (const auto& e : good.edges())
        EXPECT_EQ(w.witness[e.u] * w.witness[e.v] * e.sign, Sign::positive);
}

TEST(Balance, SingleEdges)
{
    EXPECT_TRUE(is_balanced(signed_graph(2, {{0, 1, +1}})).balanced);
    EXPECT_TRUE(is_balanced(signed_graph(2, {{0, 1, -1}})).balanced);
}

TEST(Balance, SetsAndDigons)
{
    auto g = signed_graph(3, {{0, 1, +1}, {0, 1, -1}, {1, 2, +1}});
    std::vector<int> one{2};
    EXPECT_TRUE(is_balanced_set(g, one).balanced);
    std::vector<int> pair{0, 1};
    auto v = is_balanced_set(g, pair);
    EXPECT_FALSE(v.balanced);
    EXPECT_EQ(v.cycle.size(), 2u);
}

TEST(Balance, HatSchrijverTrianglePairs)
{
    // {1,-2}, {1,-3}, {2,-3}: two positive edges and one negative edge.
    auto g = signed_graph(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}});
    EXPECT_FALSE(is_balanced(g).balanced);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            std::vector<int> s{a, b};
            EXPECT_TRUE(is_balanced_set(g, s).balanced);
        }
}

TEST(Balance, CycleWitnessIsUnbalanced)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto g = random_signed_graph(1 + t % 9, rng, 0.5, 0.1);
        auto v = is_balanced(g);
        if (v.balanced)
            continue;
        ASSERT_GE(v.cycle.size(), 2u);
        ASSERT_EQ(v.cycle.size(), v.cycle_signs.size());
        int product = 1;
        for (std::size_t i = 0; i < v.cycle.size(); ++i) {
            int a = v.cycle[i], b = v.cycle[(i + 1) % v.cycle.size()];
            EXPECT_TRUE(g.has_edge(a, b, v.cycle_signs[i]));
            product *= to_int(v.cycle_signs[i]);
        }
        EXPECT_EQ(product, -1);
    }
}

TEST(BalanceProperty, MatchesBruteForceAndIsSwitchingInvariant)
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int order = 1 + t % 10;
        auto g = random_signed_graph(order, rng, 0.35, 0.05);
        const bool expected = brute_force_balanced(g);
        ASSERT_EQ(is_balanced(g).balanced, expected) << "instance " << t;
        if (order <= 7) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << order); ++mask)
                ASSERT_EQ(is_balanced(apply_switching(g, test::switching_from_mask(order, mask))).balanced,
                          expected);
        }
    }
}

TEST(BalanceProperty, CycleParityInvariantUnderSwitching)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const int order = 3 + t % 5;
        auto g = random_signed_graph(order, rng, 0.5, 0.1);
        auto before = cycle_products(g);
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << order) - 1);
        auto h = apply_switching(g, test::switching_from_mask(order, pick(rng)));
        EXPECT_EQ(cycle_products(h), before);
    }
}

TEST(EquivalenceProperty, SwitchingsOfDigonGraphsAreRecognised)
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const int order = 2 + t % 9;
        auto g = random_signed_graph(order, rng, 0.6, 0.35);
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << order) - 1);
        auto h = apply_switching(g, test::switching_from_mask(order, pick(rng)));
        auto v = switching_equivalent(g, h);
        ASSERT_TRUE(v.equivalent) << "instance " << t;
        EXPECT_EQ(switch_vertices(g, v.cut_side), h);
    }
}

TEST(NegativeSubgraph, Examples)
{
    auto pos = signed_graph(3, {{0, 1, +1}, {1, 2, +1}});
    EXPECT_TRUE(negative_subgraph(pos).edges().empty());
    EXPECT_EQ(negative_subgraph(pos).order(), 3);
    auto k3 = all_negative(test::complete_graph(3));
    EXPECT_EQ(negative_subgraph(k3).edges().size(), 3u);
    auto tri = signed_graph(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}});
    auto h = negative_subgraph(tri);
    ASSERT_EQ(h.edges().size(), 1u);
    EXPECT_EQ(h.edges()[0], std::make_pair(0, 2));
}

TEST(Equivalence, Examples)
{
    auto g = signed_graph(4, {{0, 1, +1}, {1, 2, -1}, {2, 3, +1}, {0, 3, -1}, {0, 2, +1}});
    std::vector<int> x{1, 3};
    EXPECT_TRUE(switching_equivalent(g, switch_vertices(g, x)).equivalent);

    auto plus = signed_graph(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, +1}});
    auto one = signed_graph(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}});
    EXPECT_FALSE(switching_equivalent(plus, one).equivalent);

    auto p = signed_graph(3, {{0, 1, +1}, {1, 2, +1}});
    auto n = signed_graph(3, {{0, 1, -1}, {1, 2, -1}});
    auto v = switching_equivalent(p, n);
    ASSERT_TRUE(v.equivalent);
    EXPECT_EQ(switch_vertices(p, v.cut_side), n);
}

TEST(EquivalenceProperty, IsAnEquivalenceRelation)
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const int order = 2 + t % 7;
        auto base = random_signed_graph(order, rng, 0.5, 0.0);
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << order) - 1);
        // Random re-signings of the same underlying graph.
        auto resign = [&](const SignedGraph& g) {
            std::vector<SignedEdge> es;
            for (auto e : g.edges())
                es.push_back({e.u, e.v, rng() & 1 ? Sign::positive : Sign::negative});
            return SignedGraph(g.order(), es);
        };
        auto a = base;
        auto b = rng() & 1 ? apply_switching(a, test::switching_from_mask(order, pick(rng))) : resign(a);
        auto c = rng() & 1 ? apply_switching(b, test::switching_from_mask(order, pick(rng))) : resign(a);
        if (b.edges().size() != a.edges().size() || c.edges().size() != a.edges().size())
            continue;
        EXPECT_TRUE(switching_equivalent(a, a).equivalent);
        EXPECT_EQ(switching_equivalent(a, b).equivalent, switching_equivalent(b, a).equivalent);
        if (switching_equivalent(a, b).equivalent && switching_equivalent(b, c).equivalent) {
            EXPECT_TRUE(switching_equivalent(a, c).equivalent);
        }
        auto v = switching_equivalent(a, b);
        if (v.equivalent) {
            EXPECT_EQ(switch_vertices(a, v.cut_side), b);
        }
    }
}

TEST(Colouring, InjectiveAccepted)
{
    auto g = signed_graph(3, {{0, 1, +1}, {0, 1, -1}, {1, 2, -1}, {0, 2, +1}});
    std::vector<int> c{0, 1, 2};
    auto v = verify_balanced_colouring(g, c);
    EXPECT_TRUE(v.accepted);
    EXPECT_EQ(v.colouring.classes, 3);
}

TEST(Colouring, DigonSameColourRejected)
{
    auto g = signed_graph(2, {{0, 1, +1}, {0, 1, -1}});
    std::vector<int> c{0, 0};
    auto v = verify_balanced_colouring(g, c);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.offending_class, 0);
    EXPECT_EQ(v.cycle.size(), 2u);
}

TEST(Colouring, CoverOfHatKneser)
{
    auto cert = cover_B_i(4, 2, {1, 2, 3});
    auto v = verify_balanced_colouring(cert.graph, cert.colouring.colour);
    EXPECT_TRUE(v.accepted);
    EXPECT_EQ(v.colouring.classes, 3);
}

TEST(ColouringProperty, WitnessesRecheck)
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
        const int order = 1 + t % 9;
        auto g = random_signed_graph(order, rng, 0.5, 0.1);
        std::vector<int> c(order);
        std::uniform_int_distribution<int> col(0, 2);
        for (auto& x : c)
            x = col(rng);
        auto v = verify_balanced_colouring(g, c);
        if (v.accepted)
            EXPECT_TRUE(check_witnesses(g, v.colouring));
        else
            EXPECT_FALSE(is_balanced_set(g, [&] {
                             std::vector<int> m;
                             for (int u = 0; u < order; ++u)
                                 if (c[u] == v.offending_class)
                                     m.push_back(u);
                             return m;
                         }())
                             .balanced);
    }
}

TEST(Colouring, RejectsBadInput)
{
    auto g = signed_graph(2, {{0, 1, +1}});
    std::vector<int> short_c{0};
    EXPECT_THROW(verify_balanced_colouring(g, short_c), input_error);
    std::vector<int> neg{0, -1};
    EXPECT_THROW(verify_balanced_colouring(g, neg), input_error);
}

TEST(Wrappers, AllNegativeAndPlusMinus)
{
    auto k3 = test::complete_graph(3);
    auto n = all_negative(k3);
    auto pm = plus_minus(k3);
    EXPECT_EQ(n.edges().size(), 3u);
    EXPECT_EQ(pm.edges().size(), 6u);
    EXPECT_TRUE(pm.is_digon(0, 2));
    EXPECT_EQ(underlying_graph(pm).edges().size(), 3u);
}

TEST(InducedSubgraph, KeepsLabelsAndEdges)
{
    std::vector<SignedEdge> es{{0, 1, Sign::positive}, {1, 2, Sign::negative}, {0, 2, Sign::negative}};
    SignedGraph g(3, es, {"a", "b", "c"});
    std::vector<int> keep{0, 2};
    auto h = induced_subgraph(g, keep);
    EXPECT_EQ(h.order(), 2);
    EXPECT_EQ(h.label(1), "c");
    EXPECT_TRUE(h.has_edge(0, 1, Sign::negative));
    auto d = delete_vertex(g, 1);
    EXPECT_EQ(d, h);
}
