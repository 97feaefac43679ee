#pragma once

#include <numeric>
#include <string>
#include <utility>

#include "error.hpp"

namespace tangles {

/// Torus-knot tangle data: coprime (p, q) together with (r, s), p r + q s = 1.
struct TorusTangle {
    int p = 0;
    int q = 0;
    int r = 0;
    int s = 0;

    friend bool operator==(const TorusTangle&, const TorusTangle&) = default;
};

/// r = p^{-1} mod q with 0 < r < q, s = (1 - p r) / q.
inline std::pair<int, int> default_rs(int p, int q)
{
    if (p < 2 || q < 2)
        throw invalid_argument("torus tangle needs p, q >= 2");
    if (std::gcd(p, q) != 1)
        throw invalid_argument("p = " + std::to_string(p) + " and q = " + std::to_string(q) +
                               " are not coprime");
    // extended Euclid on (p mod q, q)
    long long old_r = p % q, cur_r = q;
    long long old_x = 1, cur_x = 0;
    while (cur_r != 0) {
        const long long quo = old_r / cur_r;
        old_r -= quo * cur_r;
        std::swap(old_r, cur_r);
        old_x -= quo * cur_x;
        std::swap(old_x, cur_x);
    }
    long long r = old_x % q;
    if (r <= 0) r += q;
    const long long s = (1 - static_cast<long long>(p) * r) / q;
    return {static_cast<int>(r), static_cast<int>(s)};
}

/// Throws invalid_argument unless the tangle satisfies its defining invariants.
inline void validate(const TorusTangle& t)
{
    if (t.p < 2 || t.q < 2)
        throw invalid_argument("torus tangle needs p, q >= 2");
    if (std::gcd(t.p, t.q) != 1)
        throw invalid_argument("p = " + std::to_string(t.p) + " and q = " + std::to_string(t.q) +
                               " are not coprime");
    if (static_cast<long long>(t.p) * t.r + static_cast<long long>(t.q) * t.s != 1)
        throw invalid_argument("p r + q s must equal 1");
}

inline TorusTangle make_torus_tangle(int p, int q)
{
    const auto [r, s] = default_rs(p, q);
    TorusTangle t{p, q, r, s};
    validate(t);
    return t;
}

inline TorusTangle make_torus_tangle(int p, int q, int r, int s)
{
    TorusTangle t{p, q, r, s};
    validate(t);
    return t;
}

inline std::string to_string(const TorusTangle& t)
{
    return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + "," +
           std::to_string(t.s) + ")";
}

/// Binary dihedral components send every meridian into S^1 i.
enum class Kind { binary_dihedral, non_binary_dihedral };

inline std::string to_string(Kind k) { return k == Kind::binary_dihedral ? "binary_dihedral" : "non_binary_dihedral"; }

/// A point (x, y, tau) of the unit cube; on W when both holonomy equations vanish.
struct WPoint {
    double x = 0.0;
    double y = 0.0;
    double tau = 0.0;
};

} // namespace tangles
