#include <gtest/gtest.h>

#include "skg/constructions.hpp"
#include "skg/solver.hpp"

using namespace skg;

namespace {

void expect_valid(const CoverCertificate& c)
{
    auto v = verify_balanced_colouring(c.graph, c.colouring.colour);
    EXPECT_TRUE(v.accepted);
    EXPECT_TRUE(check_witnesses(c.graph, c.colouring));
}

} // namespace

TEST(CoverBi, FourTwo)
{
    auto c = cover_B_i(4, 2, {1, 2, 3});
    EXPECT_EQ(c.colouring.classes, 3);
    EXPECT_EQ(c.index, (std::vector<int>{1, 2, 3}));
    expect_valid(c);
    // Nothing better exists.
    EXPECT_EQ(chi_b_exact(c.graph).value, 3);
}

TEST(CoverBi, SingleIndexWhenKEqualsN)
{
    auto c = cover_B_i(3, 3, {2});
    EXPECT_EQ(c.graph.order(), 4);
    EXPECT_EQ(c.colouring.classes, 1);
    expect_valid(c);
}

TEST(CoverBi, AnyIndexSetWorks)
{
    expect_valid(cover_B_i(3, 2, {1, 2}));
    expect_valid(cover_B_i(3, 2, {3, 1}));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<int> last;
            for (int i = k; i <= n; ++i)
                last.push_back(i);
            expect_valid(cover_B_i(n, k, last));
        }
}

TEST(CoverBi, RejectsBadIndices)
{
    EXPECT_THROW(cover_B_i(4, 2, {1, 2}), input_error);
    EXPECT_THROW(cover_B_i(4, 2, {1, 1, 2}), input_error);
    EXPECT_THROW(cover_B_i(4, 2, {1, 2, 5}), input_error);
    EXPECT_THROW(cover_B_i(4, 5, {}), input_error);
}

TEST(CriticalCover, DeletedVertexLeavesFewerColours)
{
    auto a = SignedSubset::from_elements(4, {1, -2});
    auto c = critical_cover(4, 2, a);
    EXPECT_EQ(c.graph.order(), 5);
    EXPECT_EQ(c.colouring.classes, 2);
    EXPECT_EQ(c.index, (std::vector<int>{3, 4}));
    expect_valid(c);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& v : family_vertices(SignedFamily::hss, n, k))
                expect_valid(critical_cover(n, k, v));
    EXPECT_THROW(critical_cover(4, 2, SignedSubset::from_elements(4, {-1, 2})), input_error);
    EXPECT_THROW(critical_cover(4, 2, SignedSubset::from_elements(4, {1, 2})), input_error);
}

TEST(CoverPlus, HatTargetsAreProper)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto t : {PlusTarget::hat_ks, PlusTarget::hat_ss}) {
                auto c = cover_B_i_plus(n, k, n - k + 1, t);
                EXPECT_TRUE(c.total());
                EXPECT_TRUE(is_proper_colouring(c.graph, c.colour));
            }
}

TEST(CoverPlus, FullSchrijverForKAtLeastTwo)
{
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            auto c = cover_B_i_plus(n, k, n - k + 2, PlusTarget::ss);
            EXPECT_TRUE(c.total()) << n << "," << k;
            EXPECT_TRUE(is_proper_colouring(c.graph, c.colour));
        }
}

TEST(CoverPlus, SingletonNegativesAreUncovered)
{
    auto c = cover_B_i_plus(3, 1, 4, PlusTarget::ss);
    ASSERT_EQ(c.uncovered.size(), 3u);
    for (const auto& a : c.uncovered)
        EXPECT_EQ(a.k(), 1);
    EXPECT_EQ(c.uncovered[0], SignedSubset::from_elements(3, {-1}));
    EXPECT_THROW(cover_B_i_plus(4, 2, 4, PlusTarget::hat_ks), input_error);
}

TEST(Equator, CircleAndSphere)
{
    auto circle = gen_borsuk_disc(1, 0.05, 128, 0);
    auto c = equator_cover(circle, 0.05);
    EXPECT_EQ(c.colouring.classes, 2);
    EXPECT_TRUE(verify_balanced_colouring(circle.graph, c.colouring.colour).accepted);
    EXPECT_TRUE(check_witnesses(circle.graph, c.colouring));

    auto sphere = gen_borsuk_disc(2, 0.05, 1000, 3);
    auto s = equator_cover(sphere, 0.05);
    EXPECT_EQ(s.colouring.classes, 3);
    EXPECT_TRUE(verify_balanced_colouring(sphere.graph, s.colouring.colour).accepted);
    EXPECT_TRUE(check_witnesses(sphere.graph, s.colouring));
}

TEST(Equator, AxisPointAndErrors)
{
    auto disc = borsuk_from_points(1, 0.1, {{0.0, 1.0}, {0.6, 0.8}, {-0.0, -1.0}, {-0.6, -0.8}},
                                   {2, 3, 0, 1});
    auto c = equator_cover(disc, 0.1);
    EXPECT_EQ(c.colouring.colour[0], 1);
    EXPECT_EQ(c.colouring.witness[0], Sign::positive);
    EXPECT_EQ(c.colouring.colour[2], 1);
    EXPECT_EQ(c.colouring.witness[2], Sign::negative);
    EXPECT_EQ(c.colouring.colour[1], 0);
    EXPECT_THROW(equator_cover(disc, 0.05), input_error);
    EXPECT_THROW(equator_cover(disc, 0.9), input_error);
}
