#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tangles/cli.hpp>

namespace {

void add_outputs(CLI::App* cmd, tangles::cli::RunConfig& cfg, std::string& svg, std::string& csv, std::string& json)
{
    cmd->add_option("--samples", cfg.samples, "samples per parametrized curve")->capture_default_str();
    cmd->add_option("--svg", svg, "write an SVG of the fundamental domain");
    cmd->add_option("--csv", csv, "write sample points as CSV");
    cmd->add_option("--json", json, "write the JSON report");
}

void finish_config(tangles::cli::RunConfig& cfg, const std::string& svg, const std::string& csv,
                   const std::string& json)
{
    if (!svg.empty()) cfg.svg_path = svg;
    if (!csv.empty()) cfg.csv_path = csv;
    if (!json.empty()) cfg.json_path = json;
    cfg.tol = tangles::torus::Tolerances::from_env();
}

std::pair<double, double> parse_offset(const std::string& s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw tangles::invalid_argument("offset must look like L1,L2: " + s);
    std::size_t used1 = 0, used2 = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double l1 = std::stod(a, &used1);
    const double l2 = std::stod(b, &used2);
    if (used1 != a.size() || used2 != b.size()) throw tangles::invalid_argument("offset must look like L1,L2: " + s);
    return {l1, l2};
}

int report(const tangles::cli::RunResult& r)
{
    const auto& rep = r.report;
    if (rep.contains("generators")) {
        const auto& g = rep["generators"];
        std::cout << "generators: total " << g["total"] << " (binary dihedral " << g["bd"] << ", other "
                  << g["nonbd"] << ")\n";
    }
    if (rep.contains("topology")) {
        const auto& t = rep["topology"];
        std::cout << "components: " << t["arcs"] << " arc(s), " << t["circles"] << " circle(s), " << t["incidences"]
                  << " incidence(s), shape " << t["shape"].get<std::string>() << "\n";
    }
    if (rep.contains("components") && rep["command"] == "bd") std::cout << "components: " << rep["components"] << "\n";
    for (const auto& n : rep["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
    for (const auto& e : r.errors) std::cerr << "error: " << e << "\n";
    return r.exit_status();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Traceless SU(2) character varieties of 2-stranded tangles and their pillowcase images"};
    app.require_subcommand(1);

    tangles::cli::RunConfig cfg;
    std::string svg, csv, json;

    int p = 0, q = 0;
    std::optional<int> r, s;
    auto* torus = app.add_subcommand("torus", "torus-knot tangle (p, q, r, s)");
    torus->add_option("-p", p, "p")->required();
    torus->add_option("-q", q, "q")->required();
    torus->add_option("--r", r, "r (default: inverse of p mod q)");
    torus->add_option("--s", s, "s with p r + q s = 1");
    torus->add_option("--grid", cfg.grid, "grid cells per axis")->capture_default_str();
    add_outputs(torus, cfg, svg, csv, json);

    int n = 0;
    auto* pretzel = app.add_subcommand("pretzel", "(-2, 3, n) pretzel tangle");
    pretzel->add_option("-n", n, "odd n >= 7")->required();
    add_outputs(pretzel, cfg, svg, csv, json);

    tangles::dihedral::BranchedCoverData data;
    std::vector<std::string> offsets;
    auto* bd = app.add_subcommand("bd", "binary dihedral components from branched cover data");
    bd->add_option("--h-ba", data.h_ba, "h(ba)")->required();
    bd->add_option("--h-bc", data.h_bc, "h(bc^-1)")->required();
    bd->add_option("--aminus", data.a_minus_order, "order of A_-")->required();
    bd->add_option("--offset", offsets, "character offsets L1,L2 (repeatable)")->take_all();
    add_outputs(bd, cfg, svg, csv, json);

    CLI11_PARSE(app, argc, argv);

    try {
        finish_config(cfg, svg, csv, json);
        if (*torus) return report(tangles::cli::run_torus(p, q, r, s, cfg));
        if (*pretzel) return report(tangles::cli::run_pretzel(n, cfg));
        for (const auto& o : offsets) data.offsets.push_back(parse_offset(o));
        return report(tangles::cli::run_bd(data, cfg));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
