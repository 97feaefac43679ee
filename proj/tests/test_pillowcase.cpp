#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <tangles/error.hpp>
#include <tangles/pillowcase.hpp>

namespace pc = tangles::pillowcase;
using pc::kPi;
using pc::kTwoPi;

namespace {

pc::LiftedPath line(double a, double b, double t0, double t1, int samples, double offset = 0.0)
{
    pc::LiftedPath p;
    for (int k = 0; k < samples; ++k) {
        const double t = t0 + (t1 - t0) * k / (samples - 1);
        p.points.push_back({a * t, b * t + offset});
    }
    return p;
}

// interior solutions of (b - a) t = 0 mod 2 pi on (0, pi), skipping corner hits
int line_crossings_oracle(int a, int b)
{
    const int d = std::abs(b - a);
    int count = 0;
    for (int k = 1; 2 * k < d; ++k)
        if ((2 * a * k) % d != 0) ++count;  // t = 2 pi k / d, not at a corner
    return count;
}

} // namespace

TEST(Pillowcase, ReduceExamples)
{
    auto r = pc::reduce(-3 * kPi / 2, 0.0);
    EXPECT_NEAR(r.gamma, kPi / 2, 1e-15);
    EXPECT_NEAR(r.theta, 0.0, 1e-15);
    r = pc::reduce(1.0, kTwoPi);
    EXPECT_NEAR(r.gamma, 1.0, 1e-15);
    EXPECT_NEAR(r.theta, 0.0, 1e-15);
    r = pc::reduce(0.0, 5.0);
    EXPECT_NEAR(r.theta, kTwoPi - 5.0, 1e-15);
}

TEST(Pillowcase, ReduceIsIdempotentAndLiftInvariant)
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-20, 20);
    std::uniform_int_distribution<int> m(-3, 3);
    for (int k = 0; k < 10000; ++k) {
        const double g = u(rng), t = u(rng);
        const auto r = pc::reduce(g, t);
        const auto rr = pc::reduce(r.gamma, r.theta);
        ASSERT_NEAR(rr.gamma, r.gamma, 1e-12);
        ASSERT_NEAR(rr.theta, r.theta, 1e-12);
        ASSERT_GE(r.gamma, 0.0);
        ASSERT_LE(r.gamma, kPi);
        ASSERT_GE(r.theta, 0.0);
        ASSERT_LT(r.theta, kTwoPi);
        const auto other = pc::reduce(-g + kTwoPi * m(rng), -t + kTwoPi * m(rng));
        ASSERT_LT(pc::quotient_distance(r, other), 1e-9);
    }
}

TEST(Pillowcase, AnglesFromCosinesRoundTrip)
{
    auto p = pc::angles_from_cosines(1, 1, 1);
    EXPECT_NEAR(p.gamma, 0.0, 1e-12);
    EXPECT_NEAR(p.theta, 0.0, 1e-12);
    p = pc::angles_from_cosines(std::cos(1.0), std::cos(4.0), std::cos(3.0));
    EXPECT_NEAR(p.gamma, 1.0, 1e-12);
    EXPECT_NEAR(p.theta, 4.0, 1e-12);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 10000; ++k) {
        const pc::PlanePoint q{u(rng), u(rng)};
        const auto c = pc::cosines_of(q);
        const auto back = pc::angles_from_cosines(c.cos_gamma, c.cos_theta, c.cos_theta_minus_gamma);
        ASSERT_LT(pc::quotient_distance(back, pc::reduce(q)), 1e-6);
    }
    EXPECT_THROW(pc::angles_from_cosines(0.0, 0.0, 0.5), tangles::inconsistency_error);
    EXPECT_THROW(pc::angles_from_cosines(1.1, 0.0, 0.0), tangles::domain_error);
}

TEST(Pillowcase, Involution)
{
    auto p = pc::involution({kPi / 2, kPi});
    EXPECT_NEAR(p.gamma, kPi / 2, 1e-15);
    EXPECT_NEAR(p.theta, kPi, 1e-15);
    p = pc::involution({0.3, 0.4});
    EXPECT_NEAR(p.gamma, kPi - 0.3, 1e-15);
    EXPECT_NEAR(p.theta, kTwoPi - 0.4, 1e-15);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 1000; ++k) {
        const auto r = pc::reduce(u(rng), u(rng));
        ASSERT_LT(pc::quotient_distance(pc::involution(pc::involution(r)), r), 1e-12);
    }
}

TEST(Pillowcase, Corners)
{
    EXPECT_TRUE(pc::is_corner({0, 0}));
    EXPECT_TRUE(pc::is_corner({kPi, kPi}));
    EXPECT_TRUE(pc::is_corner(pc::reduce(-3 * kPi, -8 * kPi)));
    EXPECT_FALSE(pc::is_corner({kPi / 2, kPi / 2}));
}

TEST(Pillowcase, DiagonalCrossingsOfLines)
{
    // (4,5) arc (-3t, -8t): crossings at t = 2 pi / 5, 4 pi / 5
    auto d = pc::diagonal_crossings(line(-3, -8, 0, kPi, 2048), true);
    EXPECT_EQ(d.count, 2);
    ASSERT_EQ(d.locations.size(), 2u);
    EXPECT_NEAR(d.locations[0] / 2047 * kPi, 2 * kPi / 5, 2e-3);
    EXPECT_NEAR(d.locations[1] / 2047 * kPi, 4 * kPi / 5, 2e-3);
    EXPECT_EQ(pc::diagonal_crossings(line(1, 2, 0, kPi, 2048), true).count, 0);
    pc::LiftedPath constant;
    constant.points.assign(50, {1.0, 2.5});
    EXPECT_EQ(pc::diagonal_crossings(constant, true).count, 0);
    for (int a = -7; a <= 7; ++a)
        for (int b = -12; b <= 12; ++b)
            ASSERT_EQ(pc::diagonal_crossings(line(a, b, 0, kPi, 4096), true).count, line_crossings_oracle(a, b))
                << a << " " << b;
}

TEST(Pillowcase, CrossingCountIsLiftInvariant)
{
    const auto base = line(3, -5, 0.1, 2.9, 1000, 0.7);
    const int n = pc::diagonal_crossings(base, true).count;
    for (int sign : {1, -1})
        for (int m = -2; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k) {
                pc::LiftedPath moved;
                for (const auto& p : base.points)
                    moved.points.push_back({sign * p.gamma + kTwoPi * m, sign * p.theta + kTwoPi * k});
                ASSERT_EQ(pc::diagonal_crossings(moved, true).count, n);
            }
}

TEST(Pillowcase, TangencyIsReportedNotCounted)
{
    // theta - gamma = (t - 1)^2 touches zero at t = 1 without changing sign
    pc::LiftedPath p;
    for (int k = 0; k <= 200; ++k) {
        const double t = 2.0 * k / 200;
        p.points.push_back({t, t + (t - 1) * (t - 1)});
    }
    const auto d = pc::diagonal_crossings(p, true);
    EXPECT_EQ(d.count, 0);
    EXPECT_EQ(d.tangencies.size(), 1u);
}

TEST(Pillowcase, LinearFamilyDistance)
{
    EXPECT_NEAR(pc::distance_to_linear_family({-3 * 0.4, -8 * 0.4}, -3, -8), 0.0, 1e-15);
    EXPECT_NEAR(pc::distance_to_linear_family(pc::PlanePoint{pc::reduce(-3 * 2.2, -8 * 2.2).gamma,
                                                             pc::reduce(-3 * 2.2, -8 * 2.2).theta},
                                              -3, -8),
                0.0, 1e-12);
    EXPECT_GT(pc::distance_to_linear_family({1.0, 0.5}, 1, 2), 0.1);
}
