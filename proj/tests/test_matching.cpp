#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "skg/matching.hpp"

using namespace skg;

namespace {

// Maximum matching by trying every subset of left vertices' choices.
int brute_matching(const BipartiteGraph& g)
{
    std::vector<char> used(g.right(), 0);
    auto rec = [&](auto& self, int l) -> int {
        if (l == g.left())
            return 0;
        int best = self(self, l + 1);
        for (int r : g.neighbors(l))
            if (!used[r]) {
                used[r] = 1;
                best = std::max(best, 1 + self(self, l + 1));
                used[r] = 0;
            }
        return best;
    };
    return rec(rec, 0);
}

BipartiteGraph random_bipartite(int left, int right, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int l = 0; l < left; ++l)
        for (int r = 0; r < right; ++r)
            if (coin(rng))
                es.emplace_back(l, r);
    return BipartiteGraph(left, right, es);
}

} // namespace

TEST(Bipartite, BaseGraph)
{
    auto b = gen_B(4);
    EXPECT_EQ(b.edges().size(), 6u);
    EXPECT_TRUE(b.has_edge(0, 1));
    EXPECT_FALSE(b.has_edge(1, 0));
    EXPECT_FALSE(b.has_edge(2, 2));
    EXPECT_EQ(b.left_degree(0), 3);
    EXPECT_EQ(b.right_degree(3), 3);
    EXPECT_EQ(max_matching(b).size, 3);
}

TEST(Bipartite, FlipReplacesEdge)
{
    auto f = flip_edges(FlipInstance{3, {{1, 3}}});
    EXPECT_FALSE(f.has_edge(0, 2));
    EXPECT_TRUE(f.has_edge(2, 0));
    EXPECT_TRUE(f.has_edge(0, 1));
    EXPECT_TRUE(f.has_edge(1, 2));
    EXPECT_EQ(max_matching(f).size, 3);
    EXPECT_THROW(flip_edges(FlipInstance{3, {{2, 1}}}), input_error);
}

TEST(Bipartite, RejectsBadEndpoints)
{
    EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}}), input_error);
}

TEST(MatchingProperty, AgreesWithBruteForceAndKoenig)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        auto g = random_bipartite(1 + t % 7, 1 + (t / 7) % 7, 0.15 + 0.1 * (t % 8), rng);
        auto m = max_matching(g);
        ASSERT_TRUE(is_matching(g, m.pairs));
        EXPECT_EQ(static_cast<int>(m.pairs.size()), m.size);
        EXPECT_EQ(m.size, brute_matching(g));
        auto c = min_vertex_cover(g);
        EXPECT_TRUE(is_vertex_cover(g, c));
        EXPECT_EQ(c.size, m.size);
        EXPECT_EQ(static_cast<int>(c.left.size() + c.right.size()), c.size);
    }
}

TEST(MatchingProperty, DegreeSumsMatchEdgeCount)
{
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 8; ++n) {
        std::vector<std::pair<int, int>> flips;
        auto base = gen_B(n);
        for (auto [l, r] : base.edges())
            if (rng() & 1)
                flips.emplace_back(l + 1, r + 1);
        auto g = flip_edges(FlipInstance{n, flips});
        long long left = 0, right = 0;
        for (int v = 0; v < n; ++v) {
            left += g.left_degree(v);
            right += g.right_degree(v);
        }
        EXPECT_EQ(left, static_cast<long long>(g.edges().size()));
        EXPECT_EQ(right, left);
        EXPECT_EQ(left, n * (n - 1) / 2);
    }
}

TEST(KTwo, ExhaustiveSmall)
{
    auto four = verify_k2_matchings(4, CampaignMode::exhaustive);
    EXPECT_EQ(four.instances, 64);
    EXPECT_TRUE(four.ok());
    auto five = verify_k2_matchings(5, CampaignMode::exhaustive);
    EXPECT_EQ(five.instances, 1024);
    EXPECT_TRUE(five.ok());
    EXPECT_EQ(verify_k2_matchings(2, CampaignMode::exhaustive).instances, 2);
    EXPECT_THROW(verify_k2_matchings(1, CampaignMode::exhaustive), input_error);
    EXPECT_THROW(verify_k2_matchings(8, CampaignMode::exhaustive), input_error);
}

TEST(KTwo, RandomIsDeterministic)
{
    auto a = verify_k2_matchings(8, CampaignMode::random, 300, 9);
    auto b = verify_k2_matchings(8, CampaignMode::random, 300, 9);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.instances, 300);
    EXPECT_EQ(a.oversize, b.oversize);
}

TEST(Subgraph, FindsCycleInPetersen)
{
    auto c5 = test::cycle_graph(5);
    auto petersen = kneser_graph(5, 2);
    auto m = find_subgraph(c5, petersen);
    ASSERT_EQ(m.status, EmbedStatus::found);
    for (auto [u, v] : c5.edges())
        EXPECT_TRUE(petersen.adjacent(m.mapping[u], m.mapping[v]));
    EXPECT_EQ(find_subgraph(test::cycle_graph(4), petersen).status, EmbedStatus::not_found);
    EXPECT_EQ(find_subgraph(test::complete_graph(3), test::cycle_graph(4)).status,
              EmbedStatus::not_found);
    EXPECT_EQ(find_subgraph(test::complete_graph(4), test::complete_graph(3)).status,
              EmbedStatus::not_found);
}

TEST(Conjecture, SmallCases)
{
    EXPECT_EQ(conjecture_target(4, 2).order(), schrijver_graph(3, 1).order());
    EXPECT_EQ(conjecture_target(5, 3).order(), schrijver_graph(5, 2).order());
    auto r = check_conjecture_small(4, 2, CampaignMode::exhaustive, 0, 0);
    EXPECT_EQ(r.host_vertices, 6);
    EXPECT_EQ(r.switchings, 32);
    EXPECT_EQ(r.found + r.not_found + r.timeouts, r.switchings);
    EXPECT_EQ(r.not_found, 0);
    auto s = check_conjecture_small(5, 3, CampaignMode::exhaustive, 0, 0);
    EXPECT_EQ(s.switchings, 512);
    EXPECT_EQ(std::min<long long>(s.not_found, 16), static_cast<long long>(s.misses.size()));
    EXPECT_THROW(check_conjecture_small(3, 4, CampaignMode::exhaustive, 0, 0), input_error);
}
