#pragma once

#include <cmath>

namespace tangles {

/// Univariate second-order Taylor jet: value, first and second derivative.
/// Enough arithmetic to push the Chebyshev recurrences through it.
struct Jet {
    double v = 0.0;
    double d = 0.0;
    double dd = 0.0;

    constexpr Jet() = default;
    constexpr Jet(double value) : v(value) {}
    constexpr Jet(double value, double first, double second) : v(value), d(first), dd(second) {}

    static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }

    friend constexpr Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
    friend constexpr Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
    friend constexpr Jet operator-(Jet a) { return {-a.v, -a.d, -a.dd}; }
    friend constexpr Jet operator*(Jet a, Jet b)
    {
        return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
    }
    friend constexpr Jet operator*(double s, Jet a) { return {s * a.v, s * a.d, s * a.dd}; }
    friend constexpr Jet operator*(Jet a, double s) { return s * a; }
};

constexpr double value_of(double x) { return x; }
constexpr double value_of(const Jet& j) { return j.v; }

} // namespace tangles
