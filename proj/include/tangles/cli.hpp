#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "census.hpp"
#include "components.hpp"
#include "dihedral.hpp"
#include "error.hpp"
#include "pretzel.hpp"
#include "quat.hpp"
#include "report.hpp"
#include "torus.hpp"

/// End-to-end runs behind the command-line subcommands. Each run produces a JSON report, an SVG
/// of the fundamental domain and CSV rows, and writes whichever of them were requested.
namespace tangles::cli {

using report::json;

struct RunConfig {
    int grid = 1024;
    int samples = 2048;
    std::optional<std::string> svg_path;
    std::optional<std::string> csv_path;
    std::optional<std::string> json_path;
    torus::Tolerances tol{};

    void validate() const
    {
        if (grid < 64) throw invalid_argument("--grid must be at least 64");
        if (samples < 256) throw invalid_argument("--samples must be at least 256");
    }
};

struct RunResult {
    json report;
    std::string svg;
    std::vector<report::CsvRow> rows;
    std::vector<std::string> errors;

    int exit_status() const { return errors.empty() ? 0 : 1; }
};

namespace detail {

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

inline void emit(const RunResult& r, const RunConfig& cfg)
{
    if (cfg.json_path) write_text(*cfg.json_path, report::dump(r.report));
    if (cfg.svg_path) write_text(*cfg.svg_path, r.svg);
    if (cfg.csv_path) {
        std::ostringstream os;
        report::write_csv(os, r.rows);
        write_text(*cfg.csv_path, os.str());
    }
}

inline json notes_json(const std::vector<std::string>& a, const std::vector<std::string>& b = {})
{
    json out = json::array();
    for (const auto& s : a) out.push_back(s);
    for (const auto& s : b) out.push_back(s);
    return out;
}

} // namespace detail

/// Largest deviations seen over every point of every component.
struct TorusChecks {
    double max_residual = 0.0;
    double max_trace_defect = 0.0;
    double max_formula_gap = 0.0;
    std::size_t points = 0;
};

inline TorusChecks check_components(const torus::ComponentSet& set)
{
    TorusChecks c;
    const auto& t = set.tangle;
    for (const auto& comp : set.components) {
        for (const auto& w : comp.points) {
            ++c.points;
            c.max_residual = std::max({c.max_residual, std::abs(torus::p1(t, w.x, w.y, w.tau)),
                                       std::abs(torus::p2(t, w.x, w.y, w.tau))});
            const auto h = holonomy_pair(w);
            const auto m = meridian_images(h, t);
            c.max_trace_defect = std::max(c.max_trace_defect, max_trace_defect(m));
            const auto f = torus::pillow_image(t, w);
            const auto q = pillow_from_quats(m, h, t);
            c.max_formula_gap = std::max({c.max_formula_gap, std::abs(f.cos_gamma - q.cos_gamma),
                                          std::abs(f.cos_theta - q.cos_theta),
                                          std::abs(f.cos_theta_minus_gamma - q.cos_theta_minus_gamma)});
        }
    }
    return c;
}

inline RunResult run_torus(int p, int q, std::optional<int> r, std::optional<int> s, const RunConfig& cfg)
{
    cfg.validate();
    if (r.has_value() != s.has_value()) throw invalid_argument("--r and --s must be given together");
    const TorusTangle t = r ? make_torus_tangle(p, q, *r, *s) : make_torus_tangle(p, q);

    torus::ComputeOptions opt;
    opt.grid.nx = opt.grid.ny = cfg.grid;
    opt.tol = cfg.tol;
    const torus::ComponentSet set = torus::compute_components(t, opt);
    const auto inputs = census::census_inputs(set);
    const auto gen = census::count_generators(inputs);
    const auto topo = census::topology_report(set.components);
    const TorusChecks checks = check_components(set);

    RunResult out;
    if (checks.max_residual >= cfg.tol.residual)
        out.errors.push_back("holonomy residual " + report::fmt_sig(checks.max_residual) + " exceeds tolerance");
    if (checks.max_trace_defect >= 1e-8)
        out.errors.push_back("meridian trace defect " + report::fmt_sig(checks.max_trace_defect));
    if (checks.max_formula_gap >= 1e-8)
        out.errors.push_back("closed-form and quaternion cosines differ by " + report::fmt_sig(checks.max_formula_gap));
    const auto arc = torus::bd_arc(t, cfg.samples);
    for (const auto& e : {arc.points.front(), arc.points.back()})
        if (!pillowcase::is_corner(pillowcase::reduce(e)))
            out.errors.push_back("binary dihedral arc does not end at a corner");
    const int arcs = static_cast<int>(std::count_if(set.components.begin(), set.components.end(), [](const auto& c) {
        return c.kind == Kind::binary_dihedral;
    }));
    if (arcs != 1) out.errors.push_back("expected one binary dihedral arc, found " + std::to_string(arcs));

    json comps = json::array();
    for (std::size_t i = 0; i < set.components.size(); ++i) {
        const auto& c = set.components[i];
        json inc = json::array();
        for (const auto& in : c.incidences)
            inc.push_back({{"other", in.other},
                           {"x", report::round_sig(in.at.x)},
                           {"y", report::round_sig(in.at.y)},
                           {"tau", report::round_sig(in.at.tau)},
                           {"refined", in.refined}});
        comps.push_back({{"id", i},
                         {"kind", to_string(c.kind)},
                         {"closed", c.closed},
                         {"points", c.points.size()},
                         {"diagonal_crossings", gen.components[i].diagonal_crossings},
                         {"generators", gen.components[i].generators},
                         {"incidences", inc}});
    }
    const auto [a, b] = torus::bd_direction(t);
    const auto slope = dihedral::bd_slope(dihedral::torus_cover_data(t));
    out.report = {{"command", "torus"},
                  {"tangle", {{"p", t.p}, {"q", t.q}, {"r", t.r}, {"s", t.s}}},
                  {"grid", cfg.grid},
                  {"samples", cfg.samples},
                  {"components", comps},
                  {"generators", report::to_json(gen)["totals"]},
                  {"topology", report::to_json(topo)},
                  {"bd_arc", {{"direction", {a, b}}, {"slope", slope.str()}}},
                  {"checks",
                   {{"points", checks.points},
                    {"max_residual", report::round_sig(checks.max_residual)},
                    {"max_trace_defect", report::round_sig(checks.max_trace_defect)},
                    {"max_formula_gap", report::round_sig(checks.max_formula_gap)}}},
                  {"errors", out.errors},
                  {"notes", detail::notes_json(gen.notes, set.warnings)}};

    std::vector<report::SvgCurve> curves;
    for (std::size_t i = 0; i < set.components.size(); ++i) {
        const auto& c = set.components[i];
        curves.push_back({c.kind, inputs[i].path});
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            const auto pp = torus::image_point(t, c.points[k]);
            out.rows.push_back({static_cast<int>(i), c.kind, static_cast<double>(k), c.points[k], pp.gamma, pp.theta});
        }
    }
    out.svg = report::render_svg(curves, "R(Y0,T0) for (p,q,r,s) = " + to_string(t));
    detail::emit(out, cfg);
    return out;
}

inline RunResult run_pretzel(int n, const RunConfig& cfg)
{
    cfg.validate();
    const auto curves = pretzel::family_238_curves(n, cfg.samples);
    const auto gen = pretzel::family_238_census(n, cfg.samples);
    const auto closed_form = pretzel::family_238_generator_count(n);

    RunResult out;
    if (gen.totals.bd != closed_form.bd || gen.totals.nonbd != closed_form.nonbd)
        out.errors.push_back("crossing count disagrees with the closed forms n-6 and 4#{odd k in [n/6,5n/6]}");
    for (const auto& e : {curves.bd.points.front(), curves.bd.points.back()})
        if (!pillowcase::is_corner(pillowcase::reduce(e))) out.errors.push_back("arc does not end at a corner");
    const auto lines = pretzel::nonbd_lines({-2, 3, n});
    json lines_json = json::array();
    for (const auto& l : lines) lines_json.push_back({{"slope", l.slope}, {"offset", report::round_sig(l.offset)}});

    out.report = {{"command", "pretzel"},
                  {"tangle", {{"p", -2}, {"q", 3}, {"r", n}}},
                  {"samples", cfg.samples},
                  {"census", report::to_json(gen)},
                  {"generators", report::to_json(gen)["totals"]},
                  {"closed_form", {{"bd", closed_form.bd}, {"nonbd", closed_form.nonbd}, {"total", closed_form.total}}},
                  {"displayed_formula_total", pretzel::displayed_total_formula(n)},
                  {"nonbd_lines", lines_json},
                  {"errors", out.errors},
                  {"notes", detail::notes_json(gen.notes)}};

    out.svg = report::render_svg({{Kind::binary_dihedral, curves.bd}, {Kind::non_binary_dihedral, curves.nonbd}},
                                 "(-2,3," + std::to_string(n) + ") pretzel tangle");
    const pillowcase::LiftedPath* paths[] = {&curves.bd, &curves.nonbd, &curves.nonbd};
    const Kind kinds[] = {Kind::binary_dihedral, Kind::non_binary_dihedral, Kind::non_binary_dihedral};
    for (int id = 0; id < 3; ++id) {
        const auto& pts = paths[id]->points;
        for (std::size_t k = 0; k < pts.size(); ++k)
            out.rows.push_back({id, kinds[id], pts[k].gamma, std::nullopt, pts[k].gamma, pts[k].theta});
    }
    detail::emit(out, cfg);
    return out;
}

inline RunResult run_bd(const dihedral::BranchedCoverData& data, const RunConfig& cfg)
{
    cfg.validate();
    const auto comps = dihedral::bd_components(data, cfg.samples);
    std::vector<census::CensusInput> in;
    for (std::size_t i = 0; i < comps.size(); ++i)
        in.push_back({Kind::binary_dihedral, comps[i].shape == dihedral::Shape::circle, comps[i].path,
                      dihedral::to_string(comps[i].shape) + " " + std::to_string(i)});
    RunResult out;
    census::GeneratorReport gen;
    try {
        gen = census::count_generators(in);
    } catch (const inconsistency_error& e) {
        out.errors.push_back(e.what());
    }
    json offsets = json::array();
    for (const auto& [l1, l2] : data.offsets) offsets.push_back({report::round_sig(l1), report::round_sig(l2)});
    json shapes = json::array();
    for (const auto& c : comps) shapes.push_back(dihedral::to_string(c.shape));
    out.report = {{"command", "bd"},
                  {"h_ba", data.h_ba},
                  {"h_bc", data.h_bc},
                  {"a_minus_order", data.a_minus_order},
                  {"offsets", offsets},
                  {"slope", dihedral::bd_slope(data).str()},
                  {"components", shapes},
                  {"census", report::to_json(gen)},
                  {"errors", out.errors},
                  {"notes", detail::notes_json(gen.notes)}};
    std::vector<report::SvgCurve> curves;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        curves.push_back({Kind::binary_dihedral, comps[i].path});
        const auto& pts = comps[i].path.points;
        for (std::size_t k = 0; k < pts.size(); ++k)
            out.rows.push_back({static_cast<int>(i), Kind::binary_dihedral, static_cast<double>(k), std::nullopt,
                                pts[k].gamma, pts[k].theta});
    }
    out.svg = report::render_svg(curves, "binary dihedral components");
    detail::emit(out, cfg);
    return out;
}

} // namespace tangles::cli
