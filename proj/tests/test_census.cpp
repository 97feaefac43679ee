#include <cmath>

#include <gtest/gtest.h>

#include <tangles/census.hpp>
#include <tangles/components.hpp>

using namespace tangles;
using pillowcase::kPi;

namespace {

pillowcase::LiftedPath circle(double cg, double ct, double rad, int samples = 512)
{
    pillowcase::LiftedPath p;
    p.closed = true;
    for (int k = 0; k <= samples; ++k) {
        const double a = 2 * kPi * k / samples;
        p.points.push_back({cg + rad * std::cos(a), ct + rad * std::sin(a)});
    }
    return p;
}

pillowcase::LiftedPath segment(double a, double b, int samples = 1024)
{
    pillowcase::LiftedPath p;
    for (int k = 0; k < samples; ++k) {
        const double t = kPi * k / (samples - 1);
        p.points.push_back({a * t, b * t});
    }
    return p;
}

torus::ComponentSet compute(int p, int q, int grid)
{
    torus::ComputeOptions opt;
    opt.grid.nx = opt.grid.ny = grid;
    return torus::compute_components(make_torus_tangle(p, q), opt);
}

} // namespace

TEST(Census, FourFiveTotals)
{
    const auto r = census::count_generators(census::census_inputs(compute(4, 5, 512)));
    EXPECT_EQ(r.totals.bd, 5);
    EXPECT_EQ(r.totals.nonbd, 4);
    EXPECT_EQ(r.totals.total, 9);
    bool has_rule_note = false;
    for (const auto& n : r.notes) has_rule_note |= n == census::kArcRuleNote;
    EXPECT_TRUE(has_rule_note);
}

TEST(Census, CircleAwayFromTheDiagonal)
{
    const auto r = census::count_generators({{Kind::non_binary_dihedral, true, circle(kPi / 2, 3 * kPi / 2, 0.3), "far"}});
    EXPECT_EQ(r.totals.total, 0);
    const auto r2 =
        census::count_generators({{Kind::non_binary_dihedral, true, circle(kPi / 2, kPi / 2, 0.3), "near"}});
    EXPECT_EQ(r2.totals.nonbd, 4);
}

TEST(Census, ArcRule)
{
    auto r = census::count_generators({{Kind::binary_dihedral, false, segment(-3, -8), "arc"}});
    EXPECT_EQ(r.components[0].diagonal_crossings, 2);
    EXPECT_EQ(r.totals.bd, 5);
    r = census::count_generators({{Kind::binary_dihedral, false, segment(1, 2), "arc"}});
    EXPECT_EQ(r.totals.bd, 1);
    auto bad = segment(-3, -8);
    bad.points.pop_back();
    EXPECT_THROW(census::count_generators({{Kind::binary_dihedral, false, bad, "cut"}}), inconsistency_error);
}

TEST(Census, ShortPathsAreNoted)
{
    pillowcase::LiftedPath one;
    one.points.push_back({0.1, 0.2});
    const auto r = census::count_generators({{Kind::non_binary_dihedral, false, one, "dot"}});
    EXPECT_EQ(r.totals.total, 0);
    ASSERT_EQ(r.notes.size(), 1u);
}

TEST(Census, TopologyShapes)
{
    std::vector<torus::RepComponent> c(1);
    c[0].kind = Kind::binary_dihedral;
    EXPECT_EQ(census::topology_report(c).shape, "arc");
    c.push_back({});
    c[1].closed = true;
    EXPECT_EQ(census::topology_report(c).shape, "arc+1 disjoint circles");
    c[1].incidences = {{0, {}, true}, {0, {}, true}};
    c[0].incidences = {{1, {}, true}, {1, {}, true}};
    const auto phi = census::topology_report(c);
    EXPECT_EQ(phi.shape, "phi");
    EXPECT_EQ(phi.incidences, 2);
    c.push_back({});
    c[2].closed = true;
    EXPECT_EQ(census::topology_report(c).shape, "1 arcs+2 circles");
}

TEST(Census, StableUnderGridRefinement)
{
    for (auto [p, q] : {std::pair{4, 5}, {3, 7}, {4, 7}}) {
        const auto a = census::count_generators(census::census_inputs(compute(p, q, 256)));
        const auto b = census::count_generators(census::census_inputs(compute(p, q, 512)));
        EXPECT_EQ(a.totals.total, b.totals.total) << p << "," << q;
        EXPECT_EQ(a.totals.bd, b.totals.bd) << p << "," << q;
    }
}
