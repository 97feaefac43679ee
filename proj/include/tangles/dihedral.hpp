#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pillowcase.hpp"
#include "tangle.hpp"
#include "torus.hpp"

/// Binary dihedral components of an arbitrary 2-stranded tangle, from branched double cover
/// data: one arc t -> (h(ba) t, (h(ba) - h(bc^-1)) t) and one circle per nontrivial character
/// class of A_-, shifted by that class's angle offsets.
namespace tangles::dihedral {

using pillowcase::LiftedPath;

struct BranchedCoverData {
    int h_ba = 0;
    int h_bc = 0;
    /// Order n of A_-; odd.
    int a_minus_order = 1;
    /// One (l1, l2) per nontrivial character class; (n - 1) / 2 of them.
    std::vector<std::pair<double, double>> offsets;

    void validate() const
    {
        if (a_minus_order < 1 || a_minus_order % 2 == 0)
            throw invalid_argument("order of A_- must be a positive odd integer, got " + std::to_string(a_minus_order));
        if (h_ba == 0 && h_bc == 0) throw invalid_argument("h(ba) and h(bc^-1) cannot both vanish");
        const auto want = static_cast<std::size_t>((a_minus_order - 1) / 2);
        if (offsets.size() != want)
            throw invalid_argument("expected " + std::to_string(want) + " offset pairs, got " +
                                   std::to_string(offsets.size()));
    }
};

enum class Shape { arc, circle };

inline std::string to_string(Shape s) { return s == Shape::arc ? "arc" : "circle"; }

struct BDComponentCurve {
    Shape shape = Shape::arc;
    /// Arcs run over t in [0, pi]; circles over a full period and end at a lift of their start.
    LiftedPath path;
};

inline std::vector<BDComponentCurve> bd_components(const BranchedCoverData& data, int samples = 2048)
{
    data.validate();
    if (samples < 2) throw invalid_argument("need at least 2 samples");
    const double a = data.h_ba;
    const double b = data.h_ba - data.h_bc;
    std::vector<BDComponentCurve> out;
    BDComponentCurve arc;
    for (int k = 0; k < samples; ++k) {
        const double t = pillowcase::kPi * k / (samples - 1);
        arc.path.points.push_back({a * t, b * t});
    }
    out.push_back(std::move(arc));
    for (const auto& [l1, l2] : data.offsets) {
        // start where the circle is farthest from the diagonal
        double t0 = 0.0, best = -1.0;
        for (int k = 0; k < samples; ++k) {
            const double t = pillowcase::kTwoPi * k / samples;
            const double g = std::abs(std::sin(0.5 * ((b * t - l2) - (a * t - l1))));
            if (g > best) {
                best = g;
                t0 = t;
            }
        }
        BDComponentCurve circle;
        circle.shape = Shape::circle;
        circle.path.closed = true;
        for (int k = 0; k <= samples; ++k) {
            const double t = t0 + pillowcase::kTwoPi * k / samples;
            circle.path.points.push_back({a * t - l1, b * t - l2});
        }
        out.push_back(std::move(circle));
    }
    return out;
}

/// h(ba) / h(bc^-1) in lowest terms with positive denominator; infinite when h(bc^-1) = 0.
struct Slope {
    long long num = 0;
    long long den = 1;
    bool infinite = false;

    friend bool operator==(const Slope&, const Slope&) = default;
    double value() const { return infinite ? INFINITY : static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return infinite ? "inf" : std::to_string(num) + "/" + std::to_string(den); }
};

inline Slope bd_slope(const BranchedCoverData& data)
{
    if (data.h_ba == 0 && data.h_bc == 0) throw invalid_argument("h(ba) and h(bc^-1) cannot both vanish");
    if (data.h_bc == 0) return {1, 0, true};
    long long n = data.h_ba, d = data.h_bc;
    const long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
    n /= g;
    d /= g;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return {n, d, false};
}

/// (h(ba), h(bc^-1)) of a torus-knot tangle by parity of (p, q, r); A_- is trivial.
inline BranchedCoverData torus_cover_data(const TorusTangle& t)
{
    validate(t);
    BranchedCoverData d;
    if (t.p % 2 == 0) {
        d.h_ba = t.q - 2 * t.r;
        d.h_bc = t.q;
    } else if (t.q % 2 == 0) {
        d.h_ba = 2 * t.s + t.p;
        d.h_bc = -t.p;
    } else if (std::abs(t.r) % 2 == 1) {
        d.h_ba = 1;
        d.h_bc = -1;
    } else {
        d.h_ba = 1;
        d.h_bc = 1;
    }
    return d;
}

} // namespace tangles::dihedral
