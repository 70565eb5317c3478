#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "skg/dimacs.hpp"
#include "skg/families.hpp"
#include "skg/random.hpp"

using namespace skg;

TEST(Dimacs, WritesSortedOneIndexedLines)
{
    auto g = test::signed_graph(3, {{2, 0, -1}, {0, 1, +1}, {0, 2, +1}});
    EXPECT_EQ(dimacs::to_string(g, {"tiny"}),
              "c tiny\n"
              "p sgraph 3 3\n"
              "e 1 2 +\n"
              "e 1 3 -\n"
              "e 1 3 +\n");
}

TEST(Dimacs, RoundTripIsBitExact)
{
    auto g = signed_family(SignedFamily::hss, 4, 2).graph;
    auto text = dimacs::to_string(g, {"family hss"});
    auto back = dimacs::read_string(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.labels(), g.labels());
    EXPECT_EQ(dimacs::to_string(back, {"family hss"}), text);
}

TEST(Dimacs, RandomRoundTrips)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto g = random_signed_graph(1 + t % 12, rng, 0.4, 0.2);
        auto text = dimacs::to_string(g);
        EXPECT_EQ(dimacs::to_string(dimacs::read_string(text)), text);
    }
}

TEST(Dimacs, AcceptsCommentsLabelsAndPositiveLoops)
{
    auto g = dimacs::read_string("c hello\np sgraph 2 2\ne 1 1 +\ne 1 2 -\nl 2 {1,-2}\n");
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.label(1), "{1,-2}");
    EXPECT_EQ(g.label(0), "");
}

TEST(Dimacs, Rejects)
{
    EXPECT_THROW(dimacs::read_string("p sgraph 2 1\ne 1 1 -\n"), input_error);
    EXPECT_THROW(dimacs::read_string("p sgraph 2 1\ne 1 3 +\n"), input_error);
    EXPECT_THROW(dimacs::read_string("p sgraph 2 0\np sgraph 2 0\n"), input_error);
    EXPECT_THROW(dimacs::read_string("e 1 2 +\np sgraph 2 1\n"), input_error);
    EXPECT_THROW(dimacs::read_string("p sgraph 2 1\ne 1 2 *\n"), input_error);
    EXPECT_THROW(dimacs::read_string("p sgraph 2 2\ne 1 2 +\n"), input_error);
    EXPECT_THROW(dimacs::read_string("p graph 2 0\n"), input_error);
    EXPECT_THROW(dimacs::read_string("q\n"), input_error);
    EXPECT_THROW(dimacs::read_string(""), input_error);
    EXPECT_THROW(dimacs::read_file("/nonexistent/graph.sdim"), std::runtime_error);
}
