#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"
#include "pillowcase.hpp"
#include "tangle.hpp"

namespace tangles {

/// w + x i + y j + z k.
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const { return w; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b)
    {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b)
    {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b)
    {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
};

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Euclidean distance in R^4.
inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// exp(angle * u) for a unit imaginary axis u = (ux, uy, uz).
inline Quaternion exp_axis_angle(double angle, double ux, double uy, double uz)
{
    const double s = std::sin(angle);
    return {std::cos(angle), s * ux, s * uy, s * uz};
}

/// n-th power of a unit quaternion, computed on its axis-angle form cos(phi) + sin(phi) u,
/// so q^n = cos(n phi) + sin(n phi) u. Negative n is the conjugate's power.
inline Quaternion quat_pow(const Quaternion& q, int n)
{
    if (n == 0) return Quaternion::identity();
    const Quaternion base = n < 0 ? q.conj() : q;
    const int m = n < 0 ? -n : n;
    const double len = std::sqrt(base.x * base.x + base.y * base.y + base.z * base.z);
    if (len == 0.0) return {std::pow(base.w, m), 0.0, 0.0, 0.0};
    const double phi = std::atan2(len, base.w);
    const double c = std::cos(m * phi);
    const double s = std::sin(m * phi) / len;
    return {c, s * base.x, s * base.y, s * base.z};
}

/// Images of the free generators A and B.
struct HolonomyPair {
    Quaternion M;
    Quaternion N;
};

/// Images of the four boundary meridians.
struct MeridianImages {
    Quaternion a;
    Quaternion b;
    Quaternion c;
    Quaternion d;
};

/// A -> exp(arccos(x) i), B -> exp(arccos(y) exp(arccos(tau) k) i).
inline HolonomyPair holonomy_pair(const WPoint& w)
{
    constexpr double slack = 1e-12;
    for (double v : {w.x, w.y, w.tau}) {
        if (!(std::abs(v) <= 1.0 + slack))
            throw domain_error("holonomy point outside the unit cube: " + std::to_string(v));
    }
    const double x = std::clamp(w.x, -1.0, 1.0);
    const double y = std::clamp(w.y, -1.0, 1.0);
    const double tau = std::clamp(w.tau, -1.0, 1.0);
    const double sx = std::sqrt(1.0 - x * x);
    const double sy = std::sqrt(1.0 - y * y);
    const double st = std::sqrt(1.0 - tau * tau);
    // exp(c k) i = cos(c) i + sin(c) j
    return {{x, sx, 0.0, 0.0}, {y, sy * tau, sy * st, 0.0}};
}

/// a = A^{s+p} B^{q-r}, b = B^{-r} A^s, c = B^{-r} a B^r, d = B^{-(q-r)} b B^{q-r}.
inline MeridianImages meridian_images(const HolonomyPair& h, const TorusTangle& t)
{
    const Quaternion a = quat_pow(h.M, t.s + t.p) * quat_pow(h.N, t.q - t.r);
    const Quaternion b = quat_pow(h.N, -t.r) * quat_pow(h.M, t.s);
    const Quaternion c = quat_pow(h.N, -t.r) * a * quat_pow(h.N, t.r);
    const Quaternion d = quat_pow(h.N, -(t.q - t.r)) * b * quat_pow(h.N, t.q - t.r);
    return {a, b, c, d};
}

/// Largest |Re| over the four meridian images; zero for a traceless representation.
inline double max_trace_defect(const MeridianImages& m)
{
    return std::max({std::abs(m.a.w), std::abs(m.b.w), std::abs(m.c.w), std::abs(m.d.w)});
}

/// Pillowcase cosines read off the holonomy:
///   cos(gamma) = -Re(ba),  cos(theta) = Re(c a^{-1}),  cos(theta - gamma) = Re(N^{-q} M^{-p}).
/// cos(gamma) is also computed as -Re(M^{2s+p} N^{q-2r}); the two must agree.
inline pillowcase::PillowCosines pillow_from_quats(const MeridianImages& m, const HolonomyPair& h, const TorusTangle& t,
                                       double trace_tol = 1e-6)
{
    if (max_trace_defect(m) > trace_tol)
        throw domain_error("meridian images are not traceless (defect " + std::to_string(max_trace_defect(m)) +
                           ")");
    const double cg = -(m.b * m.a).real();
    const double cg_word = -(quat_pow(h.M, 2 * t.s + t.p) * quat_pow(h.N, t.q - 2 * t.r)).real();
    if (std::abs(cg - cg_word) > 1e-8)
        throw inconsistency_error("cos(gamma) words disagree by " + std::to_string(std::abs(cg - cg_word)));
    const double ct = (m.c * m.a.conj()).real();
    const double ctg = (quat_pow(h.N, -t.q) * quat_pow(h.M, -t.p)).real();
    return {cg, ct, ctg};
}

} // namespace tangles
