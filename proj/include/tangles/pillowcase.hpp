#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

/// The pillowcase: R^2 modulo (gamma, theta) -> +-(gamma + 2 pi m, theta + 2 pi n),
/// drawn on the fundamental domain [0, pi] x [0, 2 pi].
namespace tangles::pillowcase {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kCornerTol = 1e-9;

/// Canonical point of the fundamental domain: gamma in [0, pi], theta in [0, 2 pi),
/// and theta in [0, pi] on the fold edges gamma in {0, pi}.
struct PillowPoint {
    double gamma = 0.0;
    double theta = 0.0;
};

/// A point of the plane before the quotient is taken.
struct PlanePoint {
    double gamma = 0.0;
    double theta = 0.0;
};

/// Continuous lift of a curve in the pillowcase.
struct LiftedPath {
    std::vector<PlanePoint> points;
    bool closed = false;
};

/// Cosines of gamma, theta and theta - gamma; what the holonomy formulas produce.
struct PillowCosines {
    double cos_gamma = 1.0;
    double cos_theta = 1.0;
    double cos_theta_minus_gamma = 1.0;
};

namespace detail {

inline double wrap_two_pi(double v)
{
    double w = std::fmod(v, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w -= kTwoPi;
    return w;
}

} // namespace detail

inline PillowPoint reduce(double gamma, double theta)
{
    double g = detail::wrap_two_pi(gamma);
    double t = detail::wrap_two_pi(theta);
    if (g > kPi) {
        g = kTwoPi - g;
        t = detail::wrap_two_pi(kTwoPi - t);
    }
    if ((g == 0.0 || g == kPi) && t > kPi) t = kTwoPi - t;
    return {g, t};
}

inline PillowPoint reduce(PlanePoint p) { return reduce(p.gamma, p.theta); }

/// Distance in the quotient between two points given by any lifts.
inline double quotient_distance(PlanePoint a, PlanePoint b)
{
    const PillowPoint ra = reduce(a);
    const PillowPoint rb = reduce(b);
    double best = std::hypot(ra.gamma - rb.gamma, ra.theta - rb.theta);
    for (int sign : {1, -1}) {
        for (int m = -1; m <= 1; ++m) {
            for (int n = -1; n <= 2; ++n) {
                const double g = sign * ra.gamma + kTwoPi * m;
                const double t = sign * ra.theta + kTwoPi * n;
                best = std::min(best, std::hypot(g - rb.gamma, t - rb.theta));
            }
        }
    }
    return best;
}

inline double quotient_distance(PillowPoint a, PillowPoint b)
{
    return quotient_distance(PlanePoint{a.gamma, a.theta}, PlanePoint{b.gamma, b.theta});
}

/// Distance to the nearest of the four corners, the images of abelian representations.
inline double corner_distance(PlanePoint p)
{
    double best = kTwoPi;
    for (double g : {0.0, kPi})
        for (double t : {0.0, kPi}) best = std::min(best, quotient_distance(p, PlanePoint{g, t}));
    return best;
}

/// Distance to the corners (0,0) and (pi,pi), the two that lie on the diagonal arc.
inline double diagonal_corner_distance(PlanePoint p)
{
    return std::min(quotient_distance(p, PlanePoint{0.0, 0.0}), quotient_distance(p, PlanePoint{kPi, kPi}));
}

inline bool is_corner(PillowPoint p, double tol = kCornerTol)
{
    return corner_distance(PlanePoint{p.gamma, p.theta}) <= tol;
}

inline PillowPoint involution(PillowPoint p) { return reduce(kPi - p.gamma, kTwoPi - p.theta); }

/// Recovers canonical (gamma, theta) from the three cosines. The sign of sin(theta) is
/// fixed by which choice reproduces cos(theta - gamma).
inline PillowPoint angles_from_cosines(double cos_gamma, double cos_theta, double cos_theta_minus_gamma,
                                       double match_tol = 1e-6)
{
    constexpr double slack = 1e-9;
    for (double c : {cos_gamma, cos_theta, cos_theta_minus_gamma}) {
        if (!(std::abs(c) <= 1.0 + slack))
            throw domain_error("pillowcase cosine outside [-1, 1]: " + std::to_string(c));
    }
    const double gamma = std::acos(std::clamp(cos_gamma, -1.0, 1.0));
    const double theta0 = std::acos(std::clamp(cos_theta, -1.0, 1.0));
    if (std::abs(std::sin(gamma)) < 1e-12) return reduce(gamma, theta0);

    const double theta1 = kTwoPi - theta0;
    const double err0 = std::abs(std::cos(theta0 - gamma) - cos_theta_minus_gamma);
    const double err1 = std::abs(std::cos(theta1 - gamma) - cos_theta_minus_gamma);
    const double err = std::min(err0, err1);
    if (err > match_tol)
        throw inconsistency_error("cosine triple is not consistent (mismatch " + std::to_string(err) + ")");
    return reduce(gamma, err0 <= err1 ? theta0 : theta1);
}

inline PillowCosines cosines_of(PlanePoint p)
{
    return {std::cos(p.gamma), std::cos(p.theta), std::cos(p.theta - p.gamma)};
}

/// Distance from a lifted point to the image of the line t -> (a t, b t), i.e. to the union of
/// its translates and negations. A point lies on it iff b gamma - a theta is in 2 pi gcd(a, b) Z.
inline double distance_to_linear_family(PlanePoint p, int a, int b)
{
    if (a == 0 && b == 0) return corner_distance(p);
    const double g = std::gcd(std::abs(a), std::abs(b));
    const double u = b * p.gamma - a * p.theta;
    const double period = kTwoPi * g;
    const double off = u - period * std::round(u / period);
    return std::abs(off) / std::hypot(static_cast<double>(a), static_cast<double>(b));
}

/// Largest distance between consecutive points of a lift.
inline double max_step(const LiftedPath& path)
{
    double step = 0.0;
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        const auto& a = path.points[i - 1];
        const auto& b = path.points[i];
        step = std::max(step, std::hypot(b.gamma - a.gamma, b.theta - a.theta));
    }
    return step;
}

struct DiagonalCrossings {
    int count = 0;
    /// Fractional sample index of each counted crossing.
    std::vector<double> locations;
    /// Sign changes dropped because they happen at a corner on the diagonal.
    std::vector<double> corner_hits;
    /// Zeros without a sign change; not counted.
    std::vector<double> tangencies;
};

/// Counts transverse crossings of the diagonal arc {gamma = theta}. In the plane the diagonal
/// lifts to theta - gamma in 2 pi Z, so crossings are sign changes of sin((theta - gamma) / 2),
/// a condition that survives every deck transformation up to a global sign.
inline DiagonalCrossings diagonal_crossings(const LiftedPath& path, bool exclude_endpoints)
{
    constexpr double zero_tol = 1e-9;
    DiagonalCrossings out;
    const auto& pts = path.points;
    const std::size_t n = pts.size();
    if (n < 2) return out;

    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = std::sin(0.5 * (pts[i].theta - pts[i].gamma));
        if (std::abs(g[i]) < zero_tol) g[i] = 0.0;
    }
    auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    std::ptrdiff_t last = -1;
    for (std::size_t j = 0; j < n; ++j) {
        if (g[j] == 0.0) continue;
        if (last >= 0) {
            const auto i = static_cast<std::size_t>(last);
            const bool has_zero_run = j > i + 1;
            if (sign(g[i]) != sign(g[j])) {
                double loc;
                PlanePoint at;
                if (!has_zero_run) {
                    const double f = g[i] / (g[i] - g[j]);
                    loc = static_cast<double>(i) + f;
                    at = {pts[i].gamma + f * (pts[j].gamma - pts[i].gamma),
                          pts[i].theta + f * (pts[j].theta - pts[i].theta)};
                } else {
                    const std::size_t mid = (i + 1 + j - 1) / 2;
                    loc = 0.5 * static_cast<double>(i + j);
                    at = pts[mid];
                }
                const double step =
                    std::hypot(pts[j].gamma - pts[i].gamma, pts[j].theta - pts[i].theta) / static_cast<double>(j - i);
                const double radius = std::max(kCornerTol, 0.25 * step);
                if (diagonal_corner_distance(at) <= radius) {
                    out.corner_hits.push_back(loc);
                } else {
                    ++out.count;
                    out.locations.push_back(loc);
                }
            } else if (has_zero_run) {
                out.tangencies.push_back(0.5 * static_cast<double>(i + j));
            }
        }
        last = static_cast<std::ptrdiff_t>(j);
    }
    if (!exclude_endpoints) {
        // an end resting on the diagonal (away from the corners) counts once
        for (std::size_t e : {std::size_t{0}, n - 1}) {
            if (g[e] == 0.0 && diagonal_corner_distance(pts[e]) > kCornerTol) {
                ++out.count;
                out.locations.push_back(static_cast<double>(e));
            }
        }
    }
    return out;
}

} // namespace tangles::pillowcase
