#include <cmath>

#include <gtest/gtest.h>

#include <tangles/census.hpp>
#include <tangles/dihedral.hpp>
#include <tangles/torus.hpp>

using namespace tangles;
namespace dh = tangles::dihedral;

TEST(Dihedral, ComponentCounts)
{
    dh::BranchedCoverData d{3, 5, 1, {}};
    auto c = dh::bd_components(d, 512);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].shape, dh::Shape::arc);
    d = {3, 5, 5, {{0.3, 0.1}, {1.0, -0.4}}};
    c = dh::bd_components(d, 512);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1].shape, dh::Shape::circle);
    EXPECT_EQ(c[2].shape, dh::Shape::circle);
    EXPECT_TRUE(c[1].path.closed);
}

TEST(Dihedral, CurvesFollowTheirLines)
{
    const dh::BranchedCoverData d{3, 5, 3, {{0.3, 0.1}}};
    const auto c = dh::bd_components(d, 1024);
    const auto& arc = c[0].path.points;
    EXPECT_TRUE(pillowcase::is_corner(pillowcase::reduce(arc.front())));
    EXPECT_TRUE(pillowcase::is_corner(pillowcase::reduce(arc.back())));
    for (const auto& p : arc) ASSERT_LT(pillowcase::distance_to_linear_family(p, 3, -2), 1e-12);
    const auto& circ = c[1].path.points;
    for (const auto& p : circ)
        ASSERT_LT(pillowcase::distance_to_linear_family({p.gamma + 0.3, p.theta + 0.1}, 3, -2), 1e-12);
    EXPECT_LT(pillowcase::quotient_distance(circ.front(), circ.back()), 1e-12);
}

TEST(Dihedral, Slopes)
{
    EXPECT_EQ(dh::bd_slope({-3, 5, 1, {}}), (dh::Slope{-3, 5, false}));
    EXPECT_EQ(dh::bd_slope({3, -5, 1, {}}), (dh::Slope{-3, 5, false}));
    EXPECT_EQ(dh::bd_slope({6, -10, 1, {}}), (dh::Slope{-3, 5, false}));
    EXPECT_EQ(dh::bd_slope({-3, 5, 1, {}}).str(), "-3/5");
    const auto inf = dh::bd_slope({2, 0, 1, {}});
    EXPECT_TRUE(inf.infinite);
    EXPECT_TRUE(std::isinf(inf.value()));
    EXPECT_EQ(inf.str(), "inf");
    EXPECT_NEAR(dh::bd_slope({-3, 5, 1, {}}).value(), -0.6, 1e-15);
}

TEST(Dihedral, RejectsBadData)
{
    EXPECT_THROW(dh::bd_components({3, 5, 4, {}}), invalid_argument);
    EXPECT_THROW(dh::bd_components({3, 5, 3, {}}), invalid_argument);
    EXPECT_THROW(dh::bd_components({0, 0, 1, {}}), invalid_argument);
    EXPECT_THROW(dh::bd_slope({0, 0, 1, {}}), invalid_argument);
    EXPECT_THROW(dh::bd_components({3, 5, 1, {}}, 1), invalid_argument);
}

TEST(Dihedral, TorusDataReproducesTheArc)
{
    for (auto [p, q] : {std::pair{4, 5}, {3, 7}, {3, 10}, {4, 7}, {5, 8}, {5, 12}, {6, 7}, {5, 17}, {3, 8}}) {
        const auto t = make_torus_tangle(p, q);
        const auto data = dh::torus_cover_data(t);
        const auto [a, b] = torus::bd_direction(t);
        EXPECT_EQ(data.h_ba, a) << p << "," << q;
        EXPECT_EQ(data.h_ba - data.h_bc, b) << p << "," << q;
        const auto arc = dh::bd_components(data, 256)[0].path.points;
        const auto ref = torus::bd_arc(t, 256).points;
        for (std::size_t i = 0; i < arc.size(); ++i) {
            ASSERT_NEAR(arc[i].gamma, ref[i].gamma, 1e-12);
            ASSERT_NEAR(arc[i].theta, ref[i].theta, 1e-12);
        }
    }
    EXPECT_EQ(dh::bd_slope(dh::torus_cover_data(make_torus_tangle(4, 5))).str(), "-3/5");
}

TEST(Dihedral, CircleCensusIsEven)
{
    const dh::BranchedCoverData d{1, -1, 3, {{0.4, 1.1}}};
    const auto c = dh::bd_components(d, 2048);
    std::vector<census::CensusInput> in;
    for (const auto& x : c) in.push_back({Kind::binary_dihedral, x.shape == dh::Shape::circle, x.path, ""});
    const auto r = census::count_generators(in);
    ASSERT_EQ(r.components.size(), 2u);
    EXPECT_EQ(r.components[0].generators % 2, 1);
    EXPECT_EQ(r.components[1].generators % 2, 0);
    // (t - 0.4, 2t - 1.1) meets the diagonal once per period, at t = 0.7
    EXPECT_EQ(r.components[1].diagonal_crossings, 1);
    EXPECT_EQ(r.components[1].generators, 2);
}
