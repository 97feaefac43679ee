#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <tangles/error.hpp>
#include <tangles/quat.hpp>
#include <tangles/torus.hpp>

using tangles::Quaternion;

namespace {

void expect_quat_near(const Quaternion& a, const Quaternion& b, double tol)
{
    EXPECT_NEAR(a.w, b.w, tol);
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y, b.y, tol);
    EXPECT_NEAR(a.z, b.z, tol);
}

// repeated multiplication
Quaternion naive_pow(const Quaternion& q, int n)
{
    Quaternion r = Quaternion::identity();
    const Quaternion b = n < 0 ? q.conj() : q;
    for (int k = 0; k < std::abs(n); ++k) r = r * b;
    return r;
}

Quaternion random_unit(std::mt19937& rng)
{
    std::normal_distribution<double> g;
    Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    const double n = q.norm();
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

// (4,5) W points on the oval, from x^2 = 1 - y^2 - 1/(4 - 16 y^2) and tau = x y / sqrt((1-x^2)(1-y^2))
tangles::WPoint oval_point(double y, double sign)
{
    const double x = sign * std::sqrt(1 - y * y - 1 / (4 - 16 * y * y));
    return {x, y, x * y / std::sqrt((1 - x * x) * (1 - y * y))};
}

} // namespace

TEST(Quat, HamiltonRelations)
{
    using Q = Quaternion;
    expect_quat_near(Q::i() * Q::j(), Q::k(), 0);
    expect_quat_near(Q::i() * Q::i(), -Q::identity(), 0);
    const Q q{0.1, 0.2, -0.3, 0.4};
    expect_quat_near(q * Q::identity(), q, 0);
    expect_quat_near(tangles::quat_mul(Q::j(), Q::k()), Q::i(), 0);
}

TEST(Quat, MultiplicationIsAssociativeAndNormMultiplicative)
{
    std::mt19937 rng(7);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_unit(rng), b = random_unit(rng), c = random_unit(rng);
        expect_quat_near((a * b) * c, a * (b * c), 1e-14);
        EXPECT_NEAR((a * b).norm(), 1.0, 1e-14);
    }
}

TEST(Quat, PowerMatchesRepeatedProductAndAxisAngle)
{
    expect_quat_near(tangles::quat_pow(Quaternion::i(), 2), -Quaternion::identity(), 1e-15);
    expect_quat_near(tangles::quat_pow(Quaternion{0.3, 0.1, 0.5, 0.2}, 0), Quaternion::identity(), 0);
    const Quaternion e03 = tangles::exp_axis_angle(0.3, 1, 0, 0);
    expect_quat_near(tangles::quat_pow(e03, 5), tangles::exp_axis_angle(1.5, 1, 0, 0), 1e-14);
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        const auto q = random_unit(rng);
        for (int n = -40; n <= 40; ++n) {
            const auto p = tangles::quat_pow(q, n);
            ASSERT_NEAR(p.norm(), 1.0, 1e-9);
            if (std::abs(n) <= 12) expect_quat_near(p, naive_pow(q, n), 1e-12);
        }
    }
}

TEST(Quat, HolonomyPairClosedForm)
{
    auto h = tangles::holonomy_pair({0.0, 0.3, 0.0});
    expect_quat_near(h.M, Quaternion::i(), 1e-15);
    expect_quat_near(h.N, Quaternion{0.3, 0.0, std::sqrt(1 - 0.09), 0.0}, 1e-15);
    h = tangles::holonomy_pair({1.0, 0.0, 0.4});
    expect_quat_near(h.M, Quaternion::identity(), 0);
    expect_quat_near(h.N, Quaternion{0.0, 0.4, std::sqrt(1 - 0.16), 0.0}, 1e-15);
    h = tangles::holonomy_pair({0.5, 0.5, 0.2});
    EXPECT_NEAR(h.M.norm(), 1.0, 1e-15);
    EXPECT_NEAR(h.N.norm(), 1.0, 1e-15);
    EXPECT_EQ(h.M.w, 0.5);
    EXPECT_EQ(h.N.w, 0.5);
    // N = exp(arccos(y) exp(arccos(tau) k) i)
    const double c = std::acos(0.2);
    const auto axis = tangles::exp_axis_angle(c, 0, 0, 1) * Quaternion::i();
    expect_quat_near(h.N, tangles::exp_axis_angle(std::acos(0.5), axis.x, axis.y, axis.z), 1e-15);
    EXPECT_THROW(tangles::holonomy_pair({1.1, 0, 0}), tangles::domain_error);
}

TEST(Quat, FreeGroupIdentityBaEqualsCd)
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    const auto t = tangles::make_torus_tangle(4, 5);
    for (int k = 0; k < 500; ++k) {
        const auto h = tangles::holonomy_pair({u(rng), u(rng), u(rng)});
        const auto m = tangles::meridian_images(h, t);
        expect_quat_near(m.b * m.a, m.c * m.d, 1e-10);
    }
}

TEST(Quat, TracelessOnFourFiveW)
{
    const auto t = tangles::make_torus_tangle(4, 5);
    for (double y = -0.41; y <= 0.41; y += 0.01) {
        for (double sign : {1.0, -1.0}) {
            const auto w = oval_point(y, sign);
            const auto h = tangles::holonomy_pair(w);
            EXPECT_LT(tangles::max_trace_defect(tangles::meridian_images(h, t)), 1e-8);
        }
        const auto h = tangles::holonomy_pair({0.0, y, 0.0});
        EXPECT_LT(tangles::max_trace_defect(tangles::meridian_images(h, t)), 1e-8);
    }
    const auto trivial = tangles::meridian_images({Quaternion::identity(), Quaternion::identity()}, t);
    EXPECT_EQ(tangles::max_trace_defect(trivial), 1.0);
    EXPECT_THROW(tangles::pillow_from_quats(trivial, {Quaternion::identity(), Quaternion::identity()}, t),
                 tangles::domain_error);
}

TEST(Quat, CosinesMatchClosedFormsOnW)
{
    const auto t = tangles::make_torus_tangle(4, 5);
    for (double y = -0.41; y <= 0.41; y += 0.02) {
        const auto w = oval_point(y, 1.0);
        const auto h = tangles::holonomy_pair(w);
        const auto q = tangles::pillow_from_quats(tangles::meridian_images(h, t), h, t);
        const auto f = tangles::torus::pillow_image(t, w);
        EXPECT_NEAR(q.cos_gamma, f.cos_gamma, 1e-8);
        EXPECT_NEAR(q.cos_theta, f.cos_theta, 1e-8);
        EXPECT_NEAR(q.cos_theta_minus_gamma, f.cos_theta_minus_gamma, 1e-8);
    }
}

TEST(Quat, BinaryDihedralPointLiesOnItsLine)
{
    // W point (0, cos u, 0) of (4,5) should map to (-3t, -8t) for some t
    const auto t = tangles::make_torus_tangle(4, 5);
    for (double y : {-0.9, -0.2, 0.35, 0.7}) {
        const auto h = tangles::holonomy_pair({0.0, y, 0.0});
        const auto c = tangles::pillow_from_quats(tangles::meridian_images(h, t), h, t);
        const auto p = tangles::pillowcase::angles_from_cosines(c.cos_gamma, c.cos_theta, c.cos_theta_minus_gamma);
        EXPECT_LT(tangles::pillowcase::distance_to_linear_family({p.gamma, p.theta}, -3, -8), 1e-8);
    }
}
