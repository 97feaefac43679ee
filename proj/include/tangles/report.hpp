#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "pillowcase.hpp"
#include "tangle.hpp"

/// Serialization of results: JSON reports, CSV point tables and SVG drawings of the
/// fundamental domain [0, pi] x [0, 2 pi].
namespace tangles::report {

using json = nlohmann::json;
using pillowcase::LiftedPath;

/// v rounded to `digits` significant digits.
inline double round_sig(double v, int digits = 12)
{
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

inline std::string fmt_sig(double v, int digits = 12)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline json to_json(const census::GeneratorReport& r)
{
    json comps = json::array();
    for (const auto& c : r.components) {
        json locs = json::array();
        for (double l : c.locations) locs.push_back(round_sig(l));
        comps.push_back({{"label", c.label},
                         {"kind", to_string(c.kind)},
                         {"closed", c.closed},
                         {"diagonal_crossings", c.diagonal_crossings},
                         {"generators", c.generators},
                         {"crossing_samples", locs}});
    }
    return {{"components", comps},
            {"totals", {{"bd", r.totals.bd}, {"nonbd", r.totals.nonbd}, {"total", r.totals.total}}}};
}

inline json to_json(const census::TopologyReport& t)
{
    return {{"arcs", t.arcs},
            {"circles", t.circles},
            {"incidences", t.incidences},
            {"circle_incidences", t.circle_incidences},
            {"shape", t.shape}};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// One CSV row; W coordinates are absent for curves given directly in the pillowcase.
struct CsvRow {
    int component_id = 0;
    Kind kind = Kind::non_binary_dihedral;
    double param = 0.0;
    std::optional<WPoint> w;
    double gamma = 0.0;
    double theta = 0.0;
};

inline void write_csv(std::ostream& os, const std::vector<CsvRow>& rows)
{
    os << "component_id,kind,param,x,y,tau,gamma,theta\n";
    for (const auto& r : rows) {
        os << r.component_id << ',' << to_string(r.kind) << ',' << fmt_sig(r.param) << ',';
        if (r.w) os << fmt_sig(r.w->x) << ',' << fmt_sig(r.w->y) << ',' << fmt_sig(r.w->tau) << ',';
        else os << ",,,";
        os << fmt_sig(r.gamma) << ',' << fmt_sig(r.theta) << '\n';
    }
}

struct SvgCurve {
    Kind kind = Kind::non_binary_dihedral;
    LiftedPath path;
};

inline constexpr double kSvgWidth = 400.0;
inline constexpr double kSvgHeight = 800.0;

inline std::string svg_coord(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

/// Polylines in the fundamental domain, split wherever reduction jumps across an identified edge.
inline std::vector<std::vector<pillowcase::PillowPoint>> reduced_strokes(const LiftedPath& path)
{
    std::vector<std::vector<pillowcase::PillowPoint>> strokes;
    std::vector<pillowcase::PillowPoint> cur;
    for (const auto& p : path.points) {
        const auto r = pillowcase::reduce(p);
        if (!cur.empty()) {
            const auto& b = cur.back();
            if (std::abs(r.gamma - b.gamma) > 0.5 || std::abs(r.theta - b.theta) > 0.5) {
                if (cur.size() > 1) strokes.push_back(std::move(cur));
                cur.clear();
            }
        }
        cur.push_back(r);
    }
    if (cur.size() > 1) strokes.push_back(std::move(cur));
    return strokes;
}

/// gamma runs rightward over 400 units, theta upward over 800; the diagonal arc is dashed.
inline std::string render_svg(const std::vector<SvgCurve>& curves, const std::string& title)
{
    auto X = [](double g) { return svg_coord(g / pillowcase::kPi * kSvgWidth); };
    auto Y = [](double t) { return svg_coord(kSvgHeight - t / pillowcase::kTwoPi * kSvgHeight); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"800\" viewBox=\"0 0 400 800\">\n";
    os << "<title>" << title << "</title>\n";
    os << "<style>"
          ".frame{fill:none;stroke:#000;stroke-width:1}"
          ".diagonal{fill:none;stroke:#555;stroke-width:2;stroke-dasharray:8 6}"
          ".bd{fill:none;stroke:#1f4fd8;stroke-width:2}"
          ".nonbd{fill:none;stroke:#d8261f;stroke-width:2}"
          "</style>\n";
    os << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"400\" height=\"800\"/>\n";
    os << "<line class=\"diagonal\" x1=\"" << X(0.0) << "\" y1=\"" << Y(0.0) << "\" x2=\"" << X(pillowcase::kPi)
       << "\" y2=\"" << Y(pillowcase::kPi) << "\"/>\n";
    for (const auto& c : curves) {
        const char* cls = c.kind == Kind::binary_dihedral ? "bd" : "nonbd";
        for (const auto& stroke : reduced_strokes(c.path)) {
            os << "<polyline class=\"" << cls << "\" points=\"";
            for (std::size_t i = 0; i < stroke.size(); ++i) {
                if (i) os << ' ';
                os << X(stroke[i].gamma) << ',' << Y(stroke[i].theta);
            }
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace tangles::report
