#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "components.hpp"
#include "error.hpp"
#include "pillowcase.hpp"
#include "tangle.hpp"

/// Generator counts for the reduced instanton complex, read off from diagonal crossings:
/// a transverse crossing of {gamma = theta} by a circle yields two generators, and the binary
/// dihedral arc contributes one more than twice its interior crossings.
namespace tangles::census {

using pillowcase::LiftedPath;

inline const std::string kArcRuleNote =
    "binary dihedral arc counted as 2 * (interior crossings) + 1; the +1 is inferred from the worked "
    "examples rather than stated as a theorem";

struct CensusInput {
    Kind kind = Kind::non_binary_dihedral;
    /// Closed paths end at a lift of their starting point.
    bool closed = false;
    LiftedPath path;
    std::string label;
};

struct ComponentCount {
    std::string label;
    Kind kind = Kind::non_binary_dihedral;
    bool closed = false;
    int diagonal_crossings = 0;
    int generators = 0;
    std::vector<double> locations;
};

struct Totals {
    int bd = 0;
    int nonbd = 0;
    int total = 0;
};

struct GeneratorReport {
    std::vector<ComponentCount> components;
    Totals totals;
    std::vector<std::string> notes;
};

inline bool is_arc(const CensusInput& c) { return c.kind == Kind::binary_dihedral && !c.closed; }

inline GeneratorReport count_generators(const std::vector<CensusInput>& inputs)
{
    GeneratorReport report;
    bool any_arc = false;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const CensusInput& in = inputs[i];
        const std::string label = in.label.empty() ? "component " + std::to_string(i) : in.label;
        ComponentCount cc;
        cc.label = label;
        cc.kind = in.kind;
        cc.closed = in.closed;
        if (in.path.points.size() < 2) {
            report.notes.push_back(label + ": fewer than two samples, not counted");
            report.components.push_back(cc);
            continue;
        }
        const auto& pts = in.path.points;
        if (is_arc(in)) {
            any_arc = true;
            for (const auto& e : {pts.front(), pts.back()}) {
                if (pillowcase::corner_distance(e) > 1e-6)
                    throw inconsistency_error(label + ": binary dihedral arc does not end at a pillowcase corner");
            }
        }
        if (in.closed && std::abs(std::sin(0.5 * (pts.front().theta - pts.front().gamma))) < 1e-9)
            report.notes.push_back(label + ": closed path starts on the diagonal; a crossing there is not seen");
        const auto dc = pillowcase::diagonal_crossings(in.path, true);
        cc.diagonal_crossings = dc.count;
        cc.locations = dc.locations;
        cc.generators = 2 * dc.count + (is_arc(in) ? 1 : 0);
        for (double t : dc.tangencies)
            report.notes.push_back(label + ": tangential contact with the diagonal near sample " + std::to_string(t));
        for (double t : dc.corner_hits)
            report.notes.push_back(label + ": passes through a diagonal corner near sample " + std::to_string(t) +
                                   ", not counted");
        (in.kind == Kind::binary_dihedral ? report.totals.bd : report.totals.nonbd) += cc.generators;
        report.components.push_back(cc);
    }
    report.totals.total = report.totals.bd + report.totals.nonbd;
    if (any_arc) report.notes.push_back(kArcRuleNote);
    return report;
}

inline std::vector<CensusInput> census_inputs(const torus::ComponentSet& set)
{
    std::vector<CensusInput> out;
    for (std::size_t i = 0; i < set.components.size(); ++i) {
        const auto& c = set.components[i];
        out.push_back({c.kind, c.closed, torus::component_image(set.tangle, c), "component " + std::to_string(i)});
    }
    return out;
}

struct TopologyReport {
    int arcs = 0;
    int circles = 0;
    /// Junctions between a circle and an arc, each counted once.
    int incidences = 0;
    /// Number of junctions on each circle, in component order.
    std::vector<int> circle_incidences;
    std::string shape;
};

inline TopologyReport topology_report(const std::vector<torus::RepComponent>& comps)
{
    TopologyReport r;
    for (const auto& c : comps) {
        if (c.closed) {
            ++r.circles;
            r.circle_incidences.push_back(static_cast<int>(c.incidences.size()));
        } else {
            ++r.arcs;
        }
        if (c.kind == Kind::non_binary_dihedral) r.incidences += static_cast<int>(c.incidences.size());
    }
    if (r.arcs == 1 && r.circles == 0) r.shape = "arc";
    else if (r.arcs == 1 && r.circles == 1 && r.incidences == 2) r.shape = "phi";
    else if (r.arcs == 1 && r.incidences == 0) r.shape = "arc+" + std::to_string(r.circles) + " disjoint circles";
    else r.shape = std::to_string(r.arcs) + " arcs+" + std::to_string(r.circles) + " circles";
    return r;
}

} // namespace tangles::census
