#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cheb.hpp"
#include "error.hpp"
#include "jet.hpp"
#include "pillowcase.hpp"
#include "quat.hpp"
#include "tangle.hpp"

/// The holonomy system of a torus-knot tangle:
///   p1 = T_{s+p}(x) T_{q-r}(y) - sqrt((1-x^2)(1-y^2)) S_{s+p}(x) S_{q-r}(y) tau
///   p2 = T_s(x) T_{-r}(y)      - sqrt((1-x^2)(1-y^2)) S_s(x) S_{-r}(y) tau
/// and the tau-free combination p(x, y) whose zero set Z is the projection of W.
namespace tangles::torus {

using pillowcase::LiftedPath;
using pillowcase::PillowCosines;
using pillowcase::PillowPoint;
using pillowcase::PlanePoint;

/// Constant and tau-coefficient of one holonomy equation: value = constant - coefficient * tau.
struct LinearInTau {
    double constant = 0.0;
    double coefficient = 0.0;

    double at(double tau) const { return constant - coefficient * tau; }
};

inline double root_factor(double x, double y)
{
    const double v = (1.0 - x * x) * (1.0 - y * y);
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

inline LinearInTau p1_parts(const TorusTangle& t, double x, double y)
{
    using cheb::S;
    using cheb::T;
    return {T(t.s + t.p, x) * T(t.q - t.r, y), root_factor(x, y) * S(t.s + t.p, x) * S(t.q - t.r, y)};
}

inline LinearInTau p2_parts(const TorusTangle& t, double x, double y)
{
    using cheb::S;
    using cheb::T;
    return {T(t.s, x) * T(-t.r, y), root_factor(x, y) * S(t.s, x) * S(-t.r, y)};
}

inline double p1(const TorusTangle& t, double x, double y, double tau) { return p1_parts(t, x, y).at(tau); }
inline double p2(const TorusTangle& t, double x, double y, double tau) { return p2_parts(t, x, y).at(tau); }

/// Factors of p = A(x) B(y) - C(x) D(y).
template <class Real>
struct XFactors {
    Real A;  // T_{s+p} S_s
    Real C;  // S_{s+p} T_s
};

template <class Real>
struct YFactors {
    Real B;  // T_{q-r} S_{-r}
    Real D;  // S_{q-r} T_{-r}
};

template <class Real>
XFactors<Real> x_factors(const TorusTangle& t, Real x)
{
    return {cheb::T(t.s + t.p, x) * cheb::S(t.s, x), cheb::S(t.s + t.p, x) * cheb::T(t.s, x)};
}

template <class Real>
YFactors<Real> y_factors(const TorusTangle& t, Real y)
{
    return {cheb::T(t.q - t.r, y) * cheb::S(-t.r, y), cheb::S(t.q - t.r, y) * cheb::T(-t.r, y)};
}

template <class Real = double>
Real p_xy(const TorusTangle& t, Real x, Real y)
{
    const auto fx = x_factors(t, x);
    const auto fy = y_factors(t, y);
    return fx.A * fy.B - fx.C * fy.D;
}

struct Derivatives2 {
    double value = 0.0;
    double px = 0.0;
    double py = 0.0;
    double pxx = 0.0;
    double pxy = 0.0;
    double pyy = 0.0;
};

inline Derivatives2 p_derivatives(const TorusTangle& t, double x, double y)
{
    const auto fx = x_factors(t, Jet::variable(x));
    const auto fy = y_factors(t, Jet::variable(y));
    return {fx.A.v * fy.B.v - fx.C.v * fy.D.v,   fx.A.d * fy.B.v - fx.C.d * fy.D.v,
            fx.A.v * fy.B.d - fx.C.v * fy.D.d,   fx.A.dd * fy.B.v - fx.C.dd * fy.D.v,
            fx.A.d * fy.B.d - fx.C.d * fy.D.d,   fx.A.v * fy.B.dd - fx.C.v * fy.D.dd};
}

/// p(x, y) as a scalar field, with a separable whole-grid sampler.
struct PField {
    TorusTangle tangle;

    double operator()(double x, double y) const { return p_xy(tangle, x, y); }

    void sample_grid(std::span<const double> xs, std::span<const double> ys, std::span<double> out) const
    {
        std::vector<XFactors<double>> fx(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = x_factors(tangle, xs[i]);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const auto fy = y_factors(tangle, ys[j]);
            double* row = out.data() + j * xs.size();
            for (std::size_t i = 0; i < xs.size(); ++i) row[i] = fx[i].A * fy.B - fx[i].C * fy.D;
        }
    }
};

inline constexpr double kCoefficientFloor = 1e-8;

struct TauSolution {
    std::optional<double> tau;
    /// Both tau-coefficients and both constants vanish: every tau in [-1, 1] solves the system.
    bool fiber = false;
};

/// Eliminates tau using the equation with the larger tau-coefficient. The value is kept only if
/// it lies in [-1, 1] (up to 1e-9, then clamped) and both residuals are below residual_tol.
inline TauSolution solve_tau(const TorusTangle& t, double x, double y, double residual_tol = 1e-8)
{
    const LinearInTau e1 = p1_parts(t, x, y);
    const LinearInTau e2 = p2_parts(t, x, y);
    const double c1 = std::abs(e1.coefficient), c2 = std::abs(e2.coefficient);
    if (c1 < kCoefficientFloor && c2 < kCoefficientFloor) {
        TauSolution out;
        out.fiber = std::abs(e1.constant) < residual_tol && std::abs(e2.constant) < residual_tol;
        return out;
    }
    const LinearInTau& e = c1 >= c2 ? e1 : e2;
    double tau = e.constant / e.coefficient;
    if (!(std::abs(tau) <= 1.0 + 1e-9)) return {};
    tau = std::clamp(tau, -1.0, 1.0);
    if (std::abs(e1.at(tau)) >= residual_tol || std::abs(e2.at(tau)) >= residual_tol) return {};
    return {tau, false};
}

inline bool on_w(const TorusTangle& t, const WPoint& w, double residual_tol = 1e-8)
{
    return std::abs(p1(t, w.x, w.y, w.tau)) < residual_tol && std::abs(p2(t, w.x, w.y, w.tau)) < residual_tol;
}

/// Pillowcase cosines of the representation at w, by the closed-form restriction formulas.
inline PillowCosines pillow_image(const TorusTangle& t, const WPoint& w)
{
    using cheb::S;
    using cheb::T;
    const double x = w.x, y = w.y, tau = w.tau;
    const double rt = root_factor(x, y);
    const double cg = -T(2 * t.s + t.p, x) * T(t.q - 2 * t.r, y) + rt * S(2 * t.s + t.p, x) * S(t.q - 2 * t.r, y) * tau;
    const double A = T(t.s + t.p, x) * T(t.s + t.p, x);
    const double B = T(t.r, y) * T(t.r, y);
    const double ct = -2.0 * A * B + 2.0 * B + 2.0 * A - 1.0 + 2.0 * tau * tau * (1.0 - A - B + A * B);
    const double ctg = T(t.p, x) * T(t.q, y) - rt * S(t.p, x) * S(t.q, y) * tau;
    for (double c : {cg, ct, ctg}) {
        if (!(std::abs(c) <= 1.0 + 1e-7))
            throw inconsistency_error("restriction cosine outside [-1, 1]: " + std::to_string(c));
    }
    return {cg, ct, ctg};
}

inline PillowPoint pillow_point(const TorusTangle& t, const WPoint& w)
{
    const PillowCosines c = pillow_image(t, w);
    return pillowcase::angles_from_cosines(c.cos_gamma, c.cos_theta, c.cos_theta_minus_gamma);
}

/// Integer direction (a, b) of the binary dihedral arc t -> (a t, b t), t in [0, pi].
inline std::pair<int, int> bd_direction(const TorusTangle& t)
{
    const bool p_even = t.p % 2 == 0;
    const bool q_even = t.q % 2 == 0;
    if (p_even) return {t.q - 2 * t.r, -2 * t.r};
    if (q_even) return {2 * t.s + t.p, 2 * t.s + 2 * t.p};
    if (std::abs(t.r) % 2 == 1) return {1, 2};
    return {1, 0};
}

inline LiftedPath bd_arc(const TorusTangle& t, int samples = 2048)
{
    if (samples < 2) throw invalid_argument("bd_arc needs at least 2 samples");
    const auto [a, b] = bd_direction(t);
    LiftedPath path;
    path.points.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double u = pillowcase::kPi * k / (samples - 1);
        path.points.push_back({a * u, b * u});
    }
    return path;
}

namespace detail {

using Vec3 = std::array<double, 3>;

inline Vec3 imag(const Quaternion& q) { return {q.x, q.y, q.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

} // namespace detail

/// Continuous planar lift of the pillowcase image of a W polyline. With the meridian images
/// a, b, c read as unit vectors, gamma is the angle from a to b and theta the angle from a to c,
/// both measured about a common normal that is carried along the path with a consistent sign.
inline LiftedPath lift_image(const TorusTangle& t, std::span<const WPoint> points, bool closed = false)
{
    using detail::Vec3;
    LiftedPath out;
    out.closed = closed;
    out.points.reserve(points.size());
    std::optional<Vec3> prev_normal;
    double prev_g = 0.0, prev_t = 0.0;
    for (const WPoint& w : points) {
        const auto h = holonomy_pair(w);
        const auto m = meridian_images(h, t);
        const Vec3 a = detail::imag(m.a), b = detail::imag(m.b), c = detail::imag(m.c);
        Vec3 n = detail::cross(a, b);
        if (detail::norm(n) < 1e-6) n = detail::cross(a, c);
        if (detail::norm(n) < 1e-9) n = prev_normal.value_or(Vec3{0.0, 0.0, 1.0});
        const double len = detail::norm(n);
        for (double& v : n) v /= len;
        if (prev_normal && detail::dot(n, *prev_normal) < 0.0)
            for (double& v : n) v = -v;
        double g = std::atan2(detail::dot(detail::cross(a, b), n), detail::dot(a, b));
        double th = std::atan2(detail::dot(detail::cross(a, c), n), detail::dot(a, c));
        if (prev_normal) {
            g += pillowcase::kTwoPi * std::round((prev_g - g) / pillowcase::kTwoPi);
            th += pillowcase::kTwoPi * std::round((prev_t - th) / pillowcase::kTwoPi);
        }
        prev_normal = n;
        prev_g = g;
        prev_t = th;
        out.points.push_back({g, th});
    }
    return out;
}

/// Canonical pillowcase point of w, read from the quaternion frame.
inline PillowPoint image_point(const TorusTangle& t, const WPoint& w)
{
    return pillowcase::reduce(lift_image(t, std::span<const WPoint>(&w, 1)).points.front());
}

/// Tolerances shared by the pipeline; the residual tolerance can be overridden by TANGLES_TOL.
struct Tolerances {
    double residual = 1e-8;

    static Tolerances from_env()
    {
        Tolerances tol;
        if (const char* env = std::getenv("TANGLES_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end == env || !(v > 0.0) || !std::isfinite(v))
                throw invalid_argument(std::string("TANGLES_TOL is not a positive number: ") + env);
            tol.residual = v;
        }
        return tol;
    }
};

} // namespace tangles::torus
