#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "census.hpp"
#include "error.hpp"
#include "pillowcase.hpp"
#include "quat.hpp"

/// Pretzel tangles (p, q, r), p even and q, r odd. Non binary dihedral representations send the
/// regular fiber to +-1, which pins their image to two lines of slope r + 1.
namespace tangles::pretzel {

using pillowcase::kPi;
using pillowcase::LiftedPath;

struct PretzelTangle {
    int p = -2;
    int q = 3;
    int r = 7;

    void validate() const
    {
        if (p % 2 != 0) throw invalid_argument("pretzel tangle needs p even");
        if (q % 2 == 0 || r % 2 == 0) throw invalid_argument("pretzel tangle needs q and r odd");
    }
};

/// theta = slope * gamma + offset over gamma in [gamma0, gamma1].
struct Line {
    int slope = 0;
    double offset = 0.0;
    double gamma0 = 0.0;
    double gamma1 = kPi;

    LiftedPath sample(int samples) const
    {
        if (samples < 2) throw invalid_argument("need at least 2 samples");
        LiftedPath path;
        for (int k = 0; k < samples; ++k) {
            const double g = gamma0 + (gamma1 - gamma0) * k / (samples - 1);
            path.points.push_back({g, slope * g + offset});
        }
        return path;
    }
};

inline std::array<Line, 2> nonbd_lines(const PretzelTangle& t)
{
    t.validate();
    return {Line{t.r + 1, 0.0}, Line{t.r + 1, kPi}};
}

inline void check_family_n(int n)
{
    if (n % 2 == 0 || n < 7) throw invalid_argument("(-2,3,n) family needs n odd and n >= 7, got " + std::to_string(n));
}

struct Family238Curves {
    /// gamma in [0, pi] -> (gamma, (n - 5) gamma).
    LiftedPath bd;
    /// gamma in [pi/6, 5 pi/6] -> (gamma, (n + 1) gamma + pi); traversed by two semicircles.
    LiftedPath nonbd;
};

inline Family238Curves family_238_curves(int n, int samples = 2048)
{
    check_family_n(n);
    return {Line{n - 5, 0.0, 0.0, kPi}.sample(samples), Line{n + 1, kPi, kPi / 6.0, 5.0 * kPi / 6.0}.sample(samples)};
}

struct GeneratorCounts {
    int bd = 0;
    int nonbd = 0;
    int total = 0;
};

/// bd = n - 6, nonbd = 4 * #{odd k : n/6 <= k <= 5n/6}.
inline GeneratorCounts family_238_generator_count(int n)
{
    check_family_n(n);
    int odd = 0;
    for (int k = 1; 6 * k <= 5 * n; k += 2)
        if (6 * k >= n) ++odd;
    return {n - 6, 4 * odd, n - 6 + 4 * odd};
}

/// n - 2 + 4 ([(5n + 6)/12] - [(n + 6)/12]), the closed form printed for the total rank.
inline int displayed_total_formula(int n)
{
    return n - 2 + 4 * ((5 * n + 6) / 12 - (n + 6) / 12);
}

inline std::string formula_discrepancy_note(int n)
{
    const GeneratorCounts g = family_238_generator_count(n);
    const int shown = displayed_total_formula(n);
    std::string note = "crossing count gives " + std::to_string(g.total) + " generators (" + std::to_string(g.bd) +
                       " binary dihedral, " + std::to_string(g.nonbd) +
                       " non binary dihedral); the closed form n-2+4([(5n+6)/12]-[(n+6)/12]) gives " +
                       std::to_string(shown);
    note += shown == g.total ? " (agrees)" : " (disagrees; the crossing count is reported)";
    return note;
}

/// Census of the family from its curves: the arc, and the non binary dihedral segment once per
/// semicircle.
inline census::GeneratorReport family_238_census(int n, int samples = 2048)
{
    const Family238Curves c = family_238_curves(n, samples);
    std::vector<census::CensusInput> in;
    in.push_back({Kind::binary_dihedral, false, c.bd, "binary dihedral arc"});
    in.push_back({Kind::non_binary_dihedral, false, c.nonbd, "semicircle 1"});
    in.push_back({Kind::non_binary_dihedral, false, c.nonbd, "semicircle 2"});
    auto report = census::count_generators(in);
    report.notes.push_back(formula_discrepancy_note(n));
    return report;
}

/// Image of the regular fiber (ba)^{(r+1)/2} (b c^-1) (ba)^{(r-1)/2} under
/// a -> i, b -> e^{gamma k} i, c -> e^{theta k} i; equals (-1)^r e^{(gamma (r+1) - theta) k}.
inline Quaternion regular_fiber_holonomy(int r, double gamma, double theta)
{
    if (r % 2 == 0) throw invalid_argument("r must be odd");
    const Quaternion a = Quaternion::i();
    const Quaternion b = exp_axis_angle(gamma, 0.0, 0.0, 1.0) * Quaternion::i();
    const Quaternion c = exp_axis_angle(theta, 0.0, 0.0, 1.0) * Quaternion::i();
    return quat_pow(b * a, (r + 1) / 2) * (b * c.conj()) * quat_pow(b * a, (r - 1) / 2);
}

} // namespace tangles::pretzel
