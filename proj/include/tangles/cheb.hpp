#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "error.hpp"
#include "jet.hpp"

/// Chebyshev-type polynomials for every integer order:
///   cos(n u) = T_n(cos u),   sin(n u) = sin(u) S_n(cos u).
/// Both are evaluated with the three-term recurrence, never by coefficients.
namespace tangles::cheb {

inline constexpr double kDomainSlack = 1e-12;

/// Clamps x into [-1, 1] when it overshoots by at most kDomainSlack.
template <class Real>
Real clamp_unit(Real x)
{
    const double v = value_of(x);
    if (std::isnan(v) || std::abs(v) > 1.0 + kDomainSlack)
        throw domain_error("chebyshev argument outside [-1, 1]: " + std::to_string(v));
    if (v > 1.0) return Real(1.0);
    if (v < -1.0) return Real(-1.0);
    return x;
}

template <class Real>
Real T(int n, Real x)
{
    x = clamp_unit(x);
    const int m = std::abs(n);
    if (m == 0) return Real(1.0);
    Real prev(1.0);
    Real cur = x;
    for (int k = 1; k < m; ++k) {
        Real next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <class Real>
Real S(int n, Real x)
{
    x = clamp_unit(x);
    const int m = std::abs(n);
    if (m == 0) return Real(0.0);
    Real prev(0.0);
    Real cur(1.0);
    for (int k = 1; k < m; ++k) {
        Real next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return n < 0 ? -cur : cur;
}

} // namespace tangles::cheb
