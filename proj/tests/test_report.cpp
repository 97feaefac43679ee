#include <sstream>

#include <gtest/gtest.h>

#include <tangles/cli.hpp>
#include <tangles/report.hpp>

using namespace tangles;

TEST(Report, RoundSig)
{
    EXPECT_EQ(report::round_sig(0.1234567890123456), 0.123456789012);
    EXPECT_EQ(report::round_sig(0.0), 0.0);
    EXPECT_EQ(report::round_sig(123456.0, 3), 123000.0);
    EXPECT_EQ(report::fmt_sig(0.5), "0.5");
}

TEST(Report, CsvFormat)
{
    std::ostringstream os;
    report::write_csv(os, {{0, Kind::binary_dihedral, 1.0, WPoint{0.5, -0.25, 0.0}, 0.1, 0.2},
                           {1, Kind::non_binary_dihedral, 2.0, std::nullopt, 3.0, 4.0}});
    EXPECT_EQ(os.str(), "component_id,kind,param,x,y,tau,gamma,theta\n"
                        "0,binary_dihedral,1,0.5,-0.25,0,0.1,0.2\n"
                        "1,non_binary_dihedral,2,,,,3,4\n");
}

TEST(Report, SvgIsDeterministicAndSplitAtSeams)
{
    pillowcase::LiftedPath p;
    for (int k = 0; k <= 100; ++k) p.points.push_back({0.03 * k, 0.07 * k});
    const std::vector<report::SvgCurve> curves{{Kind::non_binary_dihedral, p}};
    const auto a = report::render_svg(curves, "t");
    EXPECT_EQ(a, report::render_svg(curves, "t"));
    EXPECT_NE(a.find("class=\"nonbd\""), std::string::npos);
    EXPECT_NE(a.find("class=\"diagonal\""), std::string::npos);
    EXPECT_GE(report::reduced_strokes(p).size(), 2u);
}

TEST(Report, JsonRoundTrip)
{
    census::GeneratorReport g;
    g.totals = {5, 4, 9};
    g.components.push_back({"arc", Kind::binary_dihedral, false, 2, 5, {1.5, 2.5}});
    const auto j = report::to_json(g);
    const auto back = report::json::parse(report::dump(j));
    EXPECT_EQ(back, j);
    EXPECT_EQ(back["totals"]["total"], 9);
    EXPECT_EQ(back["components"][0]["kind"], "binary_dihedral");
}

TEST(Report, TorusRunReport)
{
    cli::RunConfig cfg;
    cfg.grid = 256;
    const auto r = cli::run_torus(4, 5, std::nullopt, std::nullopt, cfg);
    EXPECT_EQ(r.exit_status(), 0);
    EXPECT_EQ(r.report["generators"]["total"], 9);
    EXPECT_EQ(r.report["topology"]["shape"], "phi");
    EXPECT_EQ(r.report["bd_arc"]["slope"], "-3/5");
    EXPECT_LT(r.report["checks"]["max_residual"].get<double>(), 1e-8);
    EXPECT_FALSE(r.rows.empty());
    cfg.grid = 32;
    EXPECT_THROW(cli::run_torus(4, 5, std::nullopt, std::nullopt, cfg), invalid_argument);
    cfg.grid = 256;
    EXPECT_THROW(cli::run_torus(4, 5, 1, std::nullopt, cfg), invalid_argument);
}

TEST(Report, PretzelRunReport)
{
    const auto r = cli::run_pretzel(7, {});
    EXPECT_EQ(r.exit_status(), 0);
    EXPECT_EQ(r.report["generators"]["total"], 9);
    EXPECT_EQ(r.report["displayed_formula_total"], 13);
}
