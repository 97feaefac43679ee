#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"

/// Zero sets of scalar fields on a rectangle: marching squares with linear interpolation,
/// edge vertices polished by 1-D Newton with a bisection fallback, segments linked into
/// maximal polylines.
namespace tangles::zeroset {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Rect {
    double x0 = -1.0;
    double x1 = 1.0;
    double y0 = -1.0;
    double y1 = 1.0;
};

struct GridSpec {
    int nx = 1024;
    int ny = 1024;
    Rect bounds{};

    void validate() const
    {
        if (nx < 16 || ny < 16) throw invalid_argument("grid needs at least 16 cells per axis");
        if (!(bounds.x1 > bounds.x0) || !(bounds.y1 > bounds.y0)) throw invalid_argument("empty grid bounds");
    }
    double dx() const { return (bounds.x1 - bounds.x0) / nx; }
    double dy() const { return (bounds.y1 - bounds.y0) / ny; }
    double cell_diagonal() const { return std::hypot(dx(), dy()); }
    double x_at(int i) const { return i == nx ? bounds.x1 : bounds.x0 + i * dx(); }
    double y_at(int j) const { return j == ny ? bounds.y1 : bounds.y0 + j * dy(); }
};

struct CurveComponent {
    std::vector<Point2> vertices;
    /// Closed components repeat their first vertex at the end.
    bool closed = false;
};

struct TraceResult {
    std::vector<CurveComponent> components;
    std::vector<std::string> warnings;
    /// max |f| over the grid nodes; polishing tolerances are relative to it.
    double scale = 0.0;
    std::size_t unpolished = 0;
};

/// A field that can fill a whole grid faster than point-by-point evaluation.
template <class F>
concept GridSampler = requires(const F& f, std::span<const double> xs, std::span<const double> ys,
                               std::span<double> out) {
    { f.sample_grid(xs, ys, out) };
};

template <class F>
concept ScalarField = requires(const F& f, double x, double y) {
    { f(x, y) } -> std::convertible_to<double>;
};

struct PolishResult {
    Point2 point;
    double residual = 0.0;
    bool converged = false;
};

namespace detail {

struct Root1d {
    double t = 0.0;
    double value = 0.0;
    bool converged = false;
};

/// Newton on g with central-difference slope, kept inside a sign bracket [lo, hi];
/// falls back to bisection whenever the Newton step leaves the bracket.
template <class G>
Root1d bracketed_newton(const G& g, double lo, double hi, double glo, double ghi, double tol, int max_iter = 60)
{
    if (std::abs(glo) <= tol) return {lo, glo, true};
    if (std::abs(ghi) <= tol) return {hi, ghi, true};
    double t = lo + (hi - lo) * glo / (glo - ghi);
    double gt = g(t);
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(gt) <= tol) return {t, gt, true};
        if ((gt < 0.0) == (glo < 0.0)) {
            lo = t;
            glo = gt;
        } else {
            hi = t;
            ghi = gt;
        }
        if (hi - lo <= 1e-15 * (1.0 + std::abs(t))) return {t, gt, std::abs(gt) <= 1e3 * tol};
        const double h = 1e-7 * (hi - lo) + 1e-14;
        const double slope = (g(t + h) - g(t - h)) / (2.0 * h);
        double next = slope != 0.0 ? t - gt / slope : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
        gt = g(t);
    }
    return {t, gt, std::abs(gt) <= tol};
}

} // namespace detail

/// Root of f on the line seed + t * direction with |t| <= max_offset. Uses a sign bracket
/// when one is found near the seed, plain Newton otherwise. On failure the seed is kept
/// and the result is flagged as not converged.
template <ScalarField F>
PolishResult polish_point(const F& f, Point2 seed, Point2 direction, double max_offset, double tol,
                          int max_iter = 60)
{
    const double len = std::hypot(direction.x, direction.y);
    if (len == 0.0) throw invalid_argument("polish direction must be non-zero");
    const Point2 u{direction.x / len, direction.y / len};
    auto g = [&](double t) { return static_cast<double>(f(seed.x + t * u.x, seed.y + t * u.y)); };
    auto at = [&](double t) { return Point2{seed.x + t * u.x, seed.y + t * u.y}; };

    const double g0 = g(0.0);
    if (std::abs(g0) <= tol) return {seed, g0, true};

    // nearest sign change among a few probes on each side
    constexpr int probes = 8;
    double prev_lo = 0.0, prev_hi = 0.0, gprev_lo = g0, gprev_hi = g0;
    for (int k = 1; k <= probes; ++k) {
        const double step = max_offset * k / probes;
        const double glo = g(-step);
        const double ghi = g(step);
        const bool hi_change = (ghi < 0.0) != (gprev_hi < 0.0);
        const bool lo_change = (glo < 0.0) != (gprev_lo < 0.0);
        if (hi_change || lo_change) {
            detail::Root1d r;
            if (hi_change && (!lo_change || std::abs(ghi) < std::abs(glo)))
                r = detail::bracketed_newton(g, prev_hi, step, gprev_hi, ghi, tol, max_iter);
            else
                r = detail::bracketed_newton(g, -step, prev_lo, glo, gprev_lo, tol, max_iter);
            if (r.converged) return {at(r.t), r.value, true};
            return {seed, g0, false};
        }
        prev_lo = -step;
        prev_hi = step;
        gprev_lo = glo;
        gprev_hi = ghi;
    }

    double t = 0.0, gt = g0;
    for (int it = 0; it < max_iter; ++it) {
        const double h = 1e-7 * max_offset + 1e-14;
        const double slope = (g(t + h) - g(t - h)) / (2.0 * h);
        if (slope == 0.0) break;
        t -= gt / slope;
        if (std::abs(t) > max_offset) break;
        gt = g(t);
        if (std::abs(gt) <= tol) return {at(t), gt, true};
    }
    return {seed, g0, false};
}

namespace detail {

template <class F>
std::vector<double> sample(const F& f, const GridSpec& grid)
{
    const int nxp = grid.nx + 1, nyp = grid.ny + 1;
    std::vector<double> xs(nxp), ys(nyp);
    for (int i = 0; i < nxp; ++i) xs[i] = grid.x_at(i);
    for (int j = 0; j < nyp; ++j) ys[j] = grid.y_at(j);
    // row-major in j: values[j * nxp + i]
    std::vector<double> values(static_cast<std::size_t>(nxp) * nyp);
    if constexpr (GridSampler<F>) {
        f.sample_grid(xs, ys, values);
    } else {
        const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        auto rows = [&](int j0, int j1) {
            for (int j = j0; j < j1; ++j)
                for (int i = 0; i < nxp; ++i) values[static_cast<std::size_t>(j) * nxp + i] = f(xs[i], ys[j]);
        };
        if (workers == 1) {
            rows(0, nyp);
        } else {
            std::vector<std::jthread> pool;
            const int chunk = (nyp + static_cast<int>(workers) - 1) / static_cast<int>(workers);
            for (int j0 = 0; j0 < nyp; j0 += chunk) pool.emplace_back(rows, j0, std::min(nyp, j0 + chunk));
        }
    }
    return values;
}

} // namespace detail

/// Traces {f = 0} on the grid. Nodes with f == 0 count as positive. Saddle cells are resolved
/// by the sign at the cell centre. Open components end on the rectangle boundary.
template <ScalarField F>
TraceResult trace_zero_set(const F& f, const GridSpec& grid)
{
    grid.validate();
    TraceResult out;
    const int nx = grid.nx, ny = grid.ny, nxp = nx + 1;
    const std::vector<double> values = detail::sample(f, grid);
    for (double v : values) {
        if (!std::isfinite(v)) throw domain_error("field is not finite on the grid");
        out.scale = std::max(out.scale, std::abs(v));
    }
    if (out.scale == 0.0) {
        out.warnings.push_back("field vanishes identically on the grid");
        return out;
    }
    const double tol = 1e-12 * out.scale;
    auto val = [&](int i, int j) { return values[static_cast<std::size_t>(j) * nxp + i]; };
    auto pos = [&](int i, int j) { return val(i, j) >= 0.0; };

    // Edge numbering: horizontal (i,j)-(i+1,j) -> j*nx + i; vertical (i,j)-(i,j+1) -> H + i*ny + j.
    const std::size_t n_h = static_cast<std::size_t>(nx) * (ny + 1);
    const std::size_t n_v = static_cast<std::size_t>(nx + 1) * ny;
    auto h_edge = [&](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    auto v_edge = [&](int i, int j) { return n_h + static_cast<std::size_t>(i) * ny + j; };

    std::vector<std::int32_t> vertex_of(n_h + n_v, -1);
    std::vector<Point2> verts;

    auto make_vertex = [&](Point2 a, Point2 b, double fa, double fb) {
        auto g = [&](double t) { return static_cast<double>(f(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))); };
        const auto r = detail::bracketed_newton(g, 0.0, 1.0, fa, fb, tol);
        if (!r.converged) ++out.unpolished;
        return Point2{a.x + r.t * (b.x - a.x), a.y + r.t * (b.y - a.y)};
    };

    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (pos(i, j) == pos(i + 1, j)) continue;
            vertex_of[h_edge(i, j)] = static_cast<std::int32_t>(verts.size());
            verts.push_back(make_vertex({grid.x_at(i), grid.y_at(j)}, {grid.x_at(i + 1), grid.y_at(j)}, val(i, j),
                                        val(i + 1, j)));
        }
    }
    for (int i = 0; i <= nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            if (pos(i, j) == pos(i, j + 1)) continue;
            vertex_of[v_edge(i, j)] = static_cast<std::int32_t>(verts.size());
            verts.push_back(make_vertex({grid.x_at(i), grid.y_at(j)}, {grid.x_at(i), grid.y_at(j + 1)}, val(i, j),
                                        val(i, j + 1)));
        }
    }

    // Each crossing vertex has at most two neighbours: one through each adjacent cell.
    std::vector<std::array<std::int32_t, 2>> nbr(verts.size(), {-1, -1});
    auto link = [&](std::int32_t a, std::int32_t b) {
        auto put = [&](std::int32_t from, std::int32_t to) {
            auto& slot = nbr[static_cast<std::size_t>(from)];
            if (slot[0] < 0) slot[0] = to;
            else slot[1] = to;
        };
        put(a, b);
        put(b, a);
    };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const bool s0 = pos(i, j), s1 = pos(i + 1, j), s2 = pos(i + 1, j + 1), s3 = pos(i, j + 1);
            const std::int32_t e0 = s0 != s1 ? vertex_of[h_edge(i, j)] : -1;
            const std::int32_t e1 = s1 != s2 ? vertex_of[v_edge(i + 1, j)] : -1;
            const std::int32_t e2 = s2 != s3 ? vertex_of[h_edge(i, j + 1)] : -1;
            const std::int32_t e3 = s3 != s0 ? vertex_of[v_edge(i, j)] : -1;
            const int crossings = (e0 >= 0) + (e1 >= 0) + (e2 >= 0) + (e3 >= 0);
            if (crossings == 2) {
                std::array<std::int32_t, 2> ends{};
                int k = 0;
                for (auto e : {e0, e1, e2, e3})
                    if (e >= 0) ends[k++] = e;
                link(ends[0], ends[1]);
            } else if (crossings == 4) {
                const double cx = 0.5 * (grid.x_at(i) + grid.x_at(i + 1));
                const double cy = 0.5 * (grid.y_at(j) + grid.y_at(j + 1));
                const bool centre = static_cast<double>(f(cx, cy)) >= 0.0;
                if (centre == s0) {
                    // corners 0 and 2 joined through the centre: cut off corners 1 and 3
                    link(e0, e1);
                    link(e2, e3);
                } else {
                    link(e3, e0);
                    link(e1, e2);
                }
            }
        }
    }

    std::vector<char> used(verts.size(), 0);
    auto walk = [&](std::int32_t start) {
        CurveComponent comp;
        std::int32_t prev = -1, cur = start;
        while (cur >= 0 && !used[static_cast<std::size_t>(cur)]) {
            used[static_cast<std::size_t>(cur)] = 1;
            const Point2 p = verts[static_cast<std::size_t>(cur)];
            if (comp.vertices.empty() || std::hypot(p.x - comp.vertices.back().x, p.y - comp.vertices.back().y) > 1e-15)
                comp.vertices.push_back(p);
            const auto& nb = nbr[static_cast<std::size_t>(cur)];
            const std::int32_t next = nb[0] != prev && nb[0] >= 0 && !used[static_cast<std::size_t>(nb[0])] ? nb[0] : nb[1];
            prev = cur;
            cur = next;
            if (cur == start) {
                comp.closed = true;
                break;
            }
        }
        if (!comp.closed && cur == start) comp.closed = true;
        // a loop whose last step returns to the start
        if (!comp.closed) {
            const auto& nb = nbr[static_cast<std::size_t>(prev)];
            if ((nb[0] == start || nb[1] == start) && nbr[static_cast<std::size_t>(start)][1] >= 0 &&
                comp.vertices.size() > 2)
                comp.closed = true;
        }
        if (comp.closed) comp.vertices.push_back(comp.vertices.front());
        return comp;
    };

    auto keep = [&](CurveComponent&& c) {
        if (c.vertices.size() < 3) {
            out.warnings.push_back("discarded a component with fewer than 3 vertices");
            return;
        }
        out.components.push_back(std::move(c));
    };
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (used[v]) continue;
        const bool end = nbr[v][0] < 0 || nbr[v][1] < 0;
        if (end) keep(walk(static_cast<std::int32_t>(v)));
    }
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (!used[v]) keep(walk(static_cast<std::int32_t>(v)));
    }
    if (out.unpolished > 0)
        out.warnings.push_back(std::to_string(out.unpolished) + " vertices did not reach the polish tolerance");
    return out;
}

} // namespace tangles::zeroset
