#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheb.hpp"
#include "pillowcase.hpp"
#include "tangle.hpp"
#include "torus.hpp"
#include "zeroset.hpp"

/// Assembly of R(Y0, T0) for a torus-knot tangle: trace Z, lift to W, split by kind,
/// re-link the pieces into arcs and circles, and locate where circles meet the arc.
namespace tangles::torus {

struct Incidence {
    int other = -1;
    WPoint at{};
    /// Junction found by Newton on grad p = 0; otherwise the midpoint of the closest vertex pair.
    bool refined = false;
};

struct RepComponent {
    std::vector<WPoint> points;
    /// Closed components do not repeat their first point.
    bool closed = false;
    Kind kind = Kind::non_binary_dihedral;
    std::vector<Incidence> incidences;
};

struct ComputeOptions {
    zeroset::GridSpec grid{};
    Tolerances tol{};
    /// Densification target for consecutive image points (radians).
    double max_image_step = 0.05;
    /// A jump in tau larger than this between neighbouring vertices splits a run.
    double tau_jump = 0.2;
    /// A vertex is binary dihedral when its image lies this close to the arc's line family.
    double bd_tol = 1e-6;
    /// Pieces whose ends are within this many cell diagonals are linked.
    double link_cells = 4.0;
    int max_refine_depth = 24;
};

struct ComponentSet {
    TorusTangle tangle{};
    std::vector<RepComponent> components;
    std::vector<std::string> warnings;
    std::size_t z_components = 0;
    std::size_t fibers = 0;
    double cell_diagonal = 0.0;
};

namespace detail {

inline constexpr double kBoundaryEps = 1e-12;

inline bool on_x_boundary(const WPoint& w) { return std::abs(w.x) >= 1.0 - kBoundaryEps; }
inline bool on_y_boundary(const WPoint& w) { return std::abs(w.y) >= 1.0 - kBoundaryEps; }
inline bool on_boundary(const WPoint& w) { return on_x_boundary(w) || on_y_boundary(w); }

inline bool same_boundary_fiber(const WPoint& a, const WPoint& b)
{
    return (on_x_boundary(a) && on_x_boundary(b) && a.x * b.x > 0.0) ||
           (on_y_boundary(a) && on_y_boundary(b) && a.y * b.y > 0.0);
}

/// Distance in the cube, except that over |x| = 1 or |y| = 1 the whole tau-segment is one
/// representation, so tau is ignored there.
inline double w_distance(const WPoint& a, const WPoint& b)
{
    const double dt = same_boundary_fiber(a, b) ? 0.0 : a.tau - b.tau;
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + dt * dt);
}

/// Distance used to decide whether two nearby vertices belong to the same branch of W. Off the
/// degenerate points tau is a function of (x, y), so the plane distance decides; tau only has to
/// stay within the jump bound, which keeps apart the branches that meet over a tau-fiber.
inline double link_distance(const WPoint& a, const WPoint& b, double tau_jump)
{
    if (!same_boundary_fiber(a, b) && std::abs(a.tau - b.tau) > tau_jump)
        return std::numeric_limits<double>::infinity();
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// A lifted vertex; boundary fibers carry no tau of their own until a neighbour supplies one.
struct Lifted {
    WPoint w;
    bool ok = false;
    bool boundary_fiber = false;
};

inline Lifted lift_vertex(const TorusTangle& t, double x, double y, double residual_tol)
{
    const TauSolution s = solve_tau(t, x, y, residual_tol);
    if (s.tau) return {{x, y, *s.tau}, true, false};
    if (s.fiber && (std::abs(x) >= 1.0 - kBoundaryEps || std::abs(y) >= 1.0 - kBoundaryEps))
        return {{x, y, 0.0}, true, true};
    return {};
}

struct Piece {
    std::vector<WPoint> points;
    bool closed = false;
    Kind kind = Kind::non_binary_dihedral;
};

/// Splits a lifted vertex sequence at lift failures and tau jumps.
inline std::vector<Piece> split_runs(std::vector<Lifted> v, bool cyclic, double tau_jump)
{
    const std::size_t n = v.size();
    std::vector<Piece> out;
    if (n == 0) return out;
    // boundary fibers take the tau of a lifted neighbour
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].boundary_fiber) continue;
        const auto pick = [&](std::size_t j) { return v[j].ok && !v[j].boundary_fiber; };
        if (i > 0 && pick(i - 1)) v[i].w.tau = v[i - 1].w.tau;
        else if (i + 1 < n && pick(i + 1)) v[i].w.tau = v[i + 1].w.tau;
        else if (cyclic && pick((i + n - 1) % n)) v[i].w.tau = v[(i + n - 1) % n].w.tau;
        else if (cyclic && pick((i + 1) % n)) v[i].w.tau = v[(i + 1) % n].w.tau;
    }
    auto breaks_before = [&](std::size_t i, std::size_t prev) {
        if (!v[i].ok || !v[prev].ok) return true;
        if (v[i].boundary_fiber || v[prev].boundary_fiber) return false;
        return std::abs(v[i].w.tau - v[prev].w.tau) > tau_jump;
    };
    std::size_t start = 0;
    bool any_break = false;
    if (cyclic) {
        for (std::size_t i = 0; i < n; ++i) {
            if (breaks_before(i, (i + n - 1) % n)) {
                start = i;
                any_break = true;
                break;
            }
        }
        if (!any_break) {
            Piece p;
            for (const auto& l : v) p.points.push_back(l.w);
            p.closed = true;
            out.push_back(std::move(p));
            return out;
        }
    }
    Piece cur;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (start + k) % n;
        if (k > 0 && breaks_before(i, (i + n - 1) % n)) {
            if (!cur.points.empty()) out.push_back(std::move(cur));
            cur = {};
        }
        if (v[i].ok) cur.points.push_back(v[i].w);
    }
    if (!cur.points.empty()) out.push_back(std::move(cur));
    return out;
}

class Builder {
public:
    Builder(const TorusTangle& t, const ComputeOptions& opt) : t_(t), opt_(opt), field_{t} {}

    ComponentSet run()
    {
        ComponentSet set;
        set.tangle = t_;
        set.cell_diagonal = opt_.grid.cell_diagonal();
        const auto trace = zeroset::trace_zero_set(field_, opt_.grid);
        set.z_components = trace.components.size();
        for (const auto& w : trace.warnings) set.warnings.push_back("zero set: " + w);
        scale_ = trace.scale;

        std::vector<Piece> pieces;
        for (const auto& comp : trace.components) {
            std::vector<Lifted> lifted;
            const std::size_t n = comp.vertices.size() - (comp.closed ? 1 : 0);
            lifted.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                lifted.push_back(lift_vertex(t_, comp.vertices[i].x, comp.vertices[i].y, opt_.tol.residual));
            for (auto& p : split_runs(std::move(lifted), comp.closed, opt_.tau_jump)) {
                if (p.points.size() < 2) continue;
                pieces.push_back(std::move(p));
            }
        }
        for (auto& f : interior_fibers()) {
            ++set.fibers;
            pieces.push_back(std::move(f));
        }

        std::vector<Piece> typed;
        for (auto& p : pieces) {
            densify(p);
            for (auto& q : split_by_kind(p)) typed.push_back(std::move(q));
        }

        const double link_tol = opt_.link_cells * set.cell_diagonal;
        for (Kind k : {Kind::binary_dihedral, Kind::non_binary_dihedral}) {
            std::vector<Piece> same;
            for (auto& p : typed)
                if (p.kind == k) same.push_back(std::move(p));
            for (auto& c : chain(std::move(same), link_tol)) {
                RepComponent rc;
                rc.points = std::move(c.points);
                rc.closed = c.closed;
                rc.kind = k;
                if (rc.points.size() < 3) {
                    set.warnings.push_back("dropped a " + to_string(k) + " fragment with " +
                                           std::to_string(rc.points.size()) + " points");
                    continue;
                }
                set.components.push_back(std::move(rc));
            }
        }
        find_incidences(set, link_tol);
        for (std::size_t i = 0; i < set.components.size(); ++i) {
            std::size_t bad = 0;
            for (const auto& w : set.components[i].points)
                if (!on_w(t_, w, opt_.tol.residual)) ++bad;
            if (bad > 0)
                set.warnings.push_back("component " + std::to_string(i) + ": " + std::to_string(bad) +
                                       " points miss the holonomy equations");
        }
        return set;
    }

private:
    TorusTangle t_;
    ComputeOptions opt_;
    PField field_;
    double scale_ = 1.0;

    PillowPoint image(const WPoint& w) const { return image_point(t_, w); }

    double image_step(const WPoint& a, const WPoint& b) const
    {
        return pillowcase::quotient_distance(image(a), image(b));
    }

    /// A point of W between a and b: the midpoint pushed back onto Z, then lifted.
    std::optional<WPoint> midpoint(const WPoint& a, const WPoint& b) const
    {
        const double mx = 0.5 * (a.x + b.x), my = 0.5 * (a.y + b.y);
        const double seg = std::hypot(b.x - a.x, b.y - a.y);
        WPoint m{mx, my, 0.5 * (a.tau + b.tau)};
        if (seg > 0.0) {
            const Derivatives2 d = p_derivatives(t_, std::clamp(mx, -1.0, 1.0), std::clamp(my, -1.0, 1.0));
            zeroset::Point2 dir{d.px, d.py};
            if (std::hypot(dir.x, dir.y) < 1e-12 * scale_) dir = {-(b.y - a.y), b.x - a.x};
            auto clamped = [&](double x, double y) {
                return p_xy(t_, std::clamp(x, -1.0, 1.0), std::clamp(y, -1.0, 1.0));
            };
            const auto r = zeroset::polish_point(clamped, {mx, my}, dir, seg, 1e-12 * scale_);
            if (!r.converged) return std::nullopt;
            m.x = std::clamp(r.point.x, -1.0, 1.0);
            m.y = std::clamp(r.point.y, -1.0, 1.0);
        }
        const Lifted l = lift_vertex(t_, m.x, m.y, opt_.tol.residual);
        if (!l.ok) return std::nullopt;
        if (!l.boundary_fiber) m.tau = l.w.tau;
        const bool fiber_end = on_boundary(a) || on_boundary(b);
        if (!fiber_end && (std::abs(m.tau - a.tau) > opt_.tau_jump || std::abs(m.tau - b.tau) > opt_.tau_jump))
            return std::nullopt;
        return m;
    }

    void refine_segment(const WPoint& a, const WPoint& b, int depth, std::vector<WPoint>& out) const
    {
        if (depth >= opt_.max_refine_depth || image_step(a, b) <= opt_.max_image_step) return;
        const auto m = midpoint(a, b);
        if (!m) return;
        refine_segment(a, *m, depth + 1, out);
        out.push_back(*m);
        refine_segment(*m, b, depth + 1, out);
    }

    void densify(Piece& p) const
    {
        if (p.points.size() < 2) return;
        std::vector<WPoint> out;
        out.reserve(p.points.size());
        const std::size_t n = p.points.size();
        const std::size_t segs = p.closed ? n : n - 1;
        for (std::size_t i = 0; i < segs; ++i) {
            out.push_back(p.points[i]);
            refine_segment(p.points[i], p.points[(i + 1) % n], 0, out);
        }
        if (!p.closed) out.push_back(p.points.back());
        p.points = std::move(out);
    }

    bool is_bd(const WPoint& w) const
    {
        const auto [a, b] = bd_direction(t_);
        const PillowPoint pp = image(w);
        return pillowcase::distance_to_linear_family({pp.gamma, pp.theta}, a, b) < opt_.bd_tol;
    }

    std::vector<Piece> split_by_kind(const Piece& p) const
    {
        const std::size_t n = p.points.size();
        std::vector<Kind> kind(n);
        for (std::size_t i = 0; i < n; ++i)
            kind[i] = is_bd(p.points[i]) ? Kind::binary_dihedral : Kind::non_binary_dihedral;
        // binary dihedral stretches shorter than three vertices are isolated crossings of the arc
        const auto runs_of = [&](auto&& visit) {
            std::size_t i = 0;
            while (i < n) {
                std::size_t j = i;
                while (j + 1 < n && kind[j + 1] == kind[i]) ++j;
                visit(i, j);
                i = j + 1;
            }
        };
        runs_of([&](std::size_t i, std::size_t j) {
            if (kind[i] == Kind::binary_dihedral && j - i + 1 < 3)
                for (std::size_t k = i; k <= j; ++k) kind[k] = Kind::non_binary_dihedral;
        });
        std::vector<Piece> out;
        const bool uniform = std::all_of(kind.begin(), kind.end(), [&](Kind k) { return k == kind[0]; });
        if (uniform) {
            Piece q = p;
            q.kind = kind[0];
            out.push_back(std::move(q));
            return out;
        }
        std::size_t start = 0;
        if (p.closed) {
            while (kind[start] == kind[(start + n - 1) % n]) ++start;
        }
        Piece cur;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = (start + k) % n;
            if (!cur.points.empty() && kind[i] != cur.kind) {
                out.push_back(std::move(cur));
                cur = {};
            }
            if (cur.points.empty()) cur.kind = kind[i];
            cur.points.push_back(p.points[i]);
        }
        if (!cur.points.empty()) out.push_back(std::move(cur));
        return out;
    }

    static std::vector<double> cheb_roots(int n, bool t_roots)
    {
        std::vector<double> out;
        const int m = std::abs(n);
        if (m == 0) return out;
        if (t_roots)
            for (int j = 1; j <= m; ++j) out.push_back(std::cos((2.0 * j - 1.0) * pillowcase::kPi / (2.0 * m)));
        else
            for (int j = 1; j < m; ++j) out.push_back(std::cos(j * pillowcase::kPi / m));
        return out;
    }

    /// Interior points over which every tau in [-1, 1] solves the system; each contributes a
    /// segment of W in the tau direction.
    std::vector<Piece> interior_fibers() const
    {
        std::vector<double> xs, ys;
        for (int n : {t_.s + t_.p, t_.s})
            for (bool tr : {true, false})
                for (double v : cheb_roots(n, tr)) xs.push_back(v);
        for (int n : {t_.q - t_.r, -t_.r})
            for (bool tr : {true, false})
                for (double v : cheb_roots(n, tr)) ys.push_back(v);
        auto dedupe = [](std::vector<double>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                    v.end());
        };
        dedupe(xs);
        dedupe(ys);
        std::vector<Piece> out;
        for (double x : xs) {
            for (double y : ys) {
                if (std::abs(x) >= 1.0 - kBoundaryEps || std::abs(y) >= 1.0 - kBoundaryEps) continue;
                if (!solve_tau(t_, x, y, opt_.tol.residual).fiber) continue;
                Piece p;
                constexpr int base = 64;
                WPoint prev{x, y, -1.0};
                p.points.push_back(prev);
                for (int k = 1; k <= base; ++k) {
                    const WPoint next{x, y, -1.0 + 2.0 * k / base};
                    refine_fiber(prev, next, 0, p.points);
                    p.points.push_back(next);
                    prev = next;
                }
                out.push_back(std::move(p));
            }
        }
        return out;
    }

    void refine_fiber(const WPoint& a, const WPoint& b, int depth, std::vector<WPoint>& out) const
    {
        if (depth >= opt_.max_refine_depth || image_step(a, b) <= opt_.max_image_step) return;
        const WPoint m{a.x, a.y, 0.5 * (a.tau + b.tau)};
        refine_fiber(a, m, depth + 1, out);
        out.push_back(m);
        refine_fiber(m, b, depth + 1, out);
    }

    /// Links pieces end to end, closest ends first; each end is used once.
    std::vector<Piece> chain(std::vector<Piece> pieces, double tol) const
    {
        const std::size_t n = pieces.size();
        struct Pair {
            double d;
            std::size_t a, b;  // end ids: 2 * piece + (0 front, 1 back)
        };
        auto end_point = [&](std::size_t e) {
            const auto& pts = pieces[e / 2].points;
            return e % 2 == 0 ? pts.front() : pts.back();
        };
        std::vector<Pair> pairs;
        for (std::size_t e = 0; e < 2 * n; ++e) {
            if (pieces[e / 2].closed) continue;
            for (std::size_t f = e + 1; f < 2 * n; ++f) {
                if (pieces[f / 2].closed) continue;
                if (e / 2 == f / 2 && pieces[e / 2].points.size() < 3) continue;
                const double d = link_distance(end_point(e), end_point(f), opt_.tau_jump);
                if (d < tol) pairs.push_back({d, e, f});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
            if (x.d != y.d) return x.d < y.d;
            return std::pair(x.a, x.b) < std::pair(y.a, y.b);
        });
        std::vector<std::ptrdiff_t> partner(2 * n, -1);
        for (const auto& pr : pairs) {
            if (partner[pr.a] >= 0 || partner[pr.b] >= 0) continue;
            partner[pr.a] = static_cast<std::ptrdiff_t>(pr.b);
            partner[pr.b] = static_cast<std::ptrdiff_t>(pr.a);
        }

        std::vector<Piece> out;
        std::vector<char> used(n, 0);
        auto append = [&](Piece& dst, std::size_t piece, bool reversed) {
            auto pts = pieces[piece].points;
            if (reversed) std::reverse(pts.begin(), pts.end());
            for (const auto& w : pts) {
                if (!dst.points.empty() && w_distance(dst.points.back(), w) == 0.0) continue;
                dst.points.push_back(w);
            }
        };
        // walk from the end id `entry` through its piece, then across links
        auto walk = [&](std::size_t entry) {
            Piece c;
            c.kind = pieces[entry / 2].kind;
            std::size_t e = entry;
            while (true) {
                const std::size_t piece = e / 2;
                used[piece] = 1;
                append(c, piece, e % 2 == 1);
                const std::size_t exit = e ^ 1u;
                const auto next = partner[exit];
                if (next < 0) break;
                const auto ne = static_cast<std::size_t>(next);
                if (used[ne / 2]) {
                    c.closed = true;
                    break;
                }
                e = ne;
            }
            return c;
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (pieces[i].closed) {
                used[i] = 1;
                out.push_back(std::move(pieces[i]));
            }
        }
        for (std::size_t e = 0; e < 2 * n; ++e)
            if (!used[e / 2] && partner[e] < 0) out.push_back(walk(e));
        for (std::size_t e = 0; e < 2 * n; e += 2)
            if (!used[e / 2]) out.push_back(walk(e));
        for (auto& c : out) {
            if (c.closed && c.points.size() > 1 && w_distance(c.points.front(), c.points.back()) == 0.0)
                c.points.pop_back();
        }
        return out;
    }

    /// Critical point of p near (x, y), by Newton on the gradient.
    std::optional<std::pair<double, double>> singular_point(double x, double y, double radius) const
    {
        const double x0 = x, y0 = y;
        for (int it = 0; it < 50; ++it) {
            const Derivatives2 d = p_derivatives(t_, std::clamp(x, -1.0, 1.0), std::clamp(y, -1.0, 1.0));
            const double det = d.pxx * d.pyy - d.pxy * d.pxy;
            if (det == 0.0) return std::nullopt;
            const double dx = -(d.pyy * d.px - d.pxy * d.py) / det;
            const double dy = -(-d.pxy * d.px + d.pxx * d.py) / det;
            x += dx;
            y += dy;
            if (std::hypot(x - x0, y - y0) > radius || std::abs(x) > 1.0 || std::abs(y) > 1.0) return std::nullopt;
            if (std::hypot(dx, dy) < 1e-15) break;
        }
        const Derivatives2 d = p_derivatives(t_, x, y);
        if (std::abs(d.value) > 1e-10 * scale_ || std::hypot(d.px, d.py) > 1e-8 * scale_) return std::nullopt;
        return std::pair{x, y};
    }

    static void insert_point(std::vector<WPoint>& pts, bool closed, const WPoint& j)
    {
        if (pts.empty()) return;
        for (const auto& w : pts)
            if (w_distance(w, j) < 1e-12) return;
        const std::size_t n = pts.size();
        const std::size_t segs = closed ? n : n - 1;
        double best = std::numeric_limits<double>::infinity();
        std::size_t at = 0;
        for (std::size_t i = 0; i < segs; ++i) {
            const auto& a = pts[i];
            const auto& b = pts[(i + 1) % n];
            const double extra = w_distance(a, j) + w_distance(j, b) - w_distance(a, b);
            if (extra < best) {
                best = extra;
                at = i + 1;
            }
        }
        if (!closed) {
            if (w_distance(j, pts.front()) < best) {
                best = w_distance(j, pts.front());
                at = 0;
            }
            if (w_distance(j, pts.back()) < best) at = n;
        }
        pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(at), j);
    }

    void find_incidences(ComponentSet& set, double tol) const
    {
        auto& comps = set.components;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].kind != Kind::non_binary_dihedral) continue;
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (comps[k].kind != Kind::binary_dihedral) continue;
                struct Contact {
                    double d;
                    WPoint a, b;
                };
                std::vector<Contact> contacts;
                for (const auto& a : comps[i].points)
                    for (const auto& b : comps[k].points) {
                        if (std::abs(a.x - b.x) > tol || std::abs(a.y - b.y) > tol) continue;
                        const double d = link_distance(a, b, opt_.tau_jump);
                        if (d < tol) contacts.push_back({d, a, b});
                    }
                std::sort(contacts.begin(), contacts.end(), [](const Contact& x, const Contact& y) { return x.d < y.d; });
                std::vector<WPoint> seeds;
                for (const auto& c : contacts) {
                    bool fresh = true;
                    for (const auto& s : seeds)
                        if (std::hypot(s.x - c.a.x, s.y - c.a.y) < 4.0 * tol) fresh = false;
                    if (fresh) seeds.push_back(c.a);
                }
                for (const auto& seed : seeds) {
                    const auto closest = std::find_if(contacts.begin(), contacts.end(), [&](const Contact& c) {
                        return std::hypot(c.a.x - seed.x, c.a.y - seed.y) < 4.0 * tol;
                    });
                    Incidence inc;
                    inc.other = static_cast<int>(k);
                    inc.at = {0.5 * (closest->a.x + closest->b.x), 0.5 * (closest->a.y + closest->b.y),
                              0.5 * (closest->a.tau + closest->b.tau)};
                    if (const auto sp = singular_point(inc.at.x, inc.at.y, 2.0 * tol)) {
                        const Lifted l = lift_vertex(t_, sp->first, sp->second, opt_.tol.residual);
                        const double tau = l.ok && !l.boundary_fiber ? l.w.tau : inc.at.tau;
                        const WPoint j{sp->first, sp->second, tau};
                        if (on_w(t_, j, opt_.tol.residual)) {
                            inc.at = j;
                            inc.refined = true;
                        }
                    }
                    if (!inc.refined)
                        set.warnings.push_back("junction near (" + std::to_string(inc.at.x) + ", " +
                                               std::to_string(inc.at.y) + ") was not refined");
                    insert_point(comps[i].points, comps[i].closed, inc.at);
                    insert_point(comps[k].points, comps[k].closed, inc.at);
                    comps[i].incidences.push_back(inc);
                    Incidence back = inc;
                    back.other = static_cast<int>(i);
                    comps[k].incidences.push_back(back);
                }
            }
        }
    }
};

} // namespace detail

inline ComponentSet compute_components(const TorusTangle& t, const ComputeOptions& options = {})
{
    validate(t);
    options.grid.validate();
    return detail::Builder(t, options).run();
}

/// Continuous image lift of a component. Closed components are started at the vertex farthest
/// from the diagonal and traversed back to it, so the lift ends at a deck image of its start.
inline LiftedPath component_image(const TorusTangle& t, const RepComponent& c)
{
    std::vector<WPoint> pts = c.points;
    if (c.closed && !pts.empty()) {
        std::size_t best = 0;
        double best_g = -1.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const PillowPoint pp = image_point(t, pts[i]);
            const double g = std::abs(std::sin(0.5 * (pp.theta - pp.gamma)));
            if (g > best_g) {
                best_g = g;
                best = i;
            }
        }
        std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(best), pts.end());
        pts.push_back(pts.front());
    }
    return lift_image(t, pts, c.closed);
}

} // namespace tangles::torus
