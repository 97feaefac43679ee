// Computes R(Y0, T0) for the (4,5) torus-knot tangle and prints its pieces, the junctions
// where the circle meets the binary dihedral arc, and the generator count.
#include <cstdio>

#include <tangles/census.hpp>
#include <tangles/components.hpp>

int main()
{
    using namespace tangles;
    const TorusTangle t = make_torus_tangle(4, 5);
    const auto set = torus::compute_components(t);
    const auto gen = census::count_generators(census::census_inputs(set));
    const auto topo = census::topology_report(set.components);

    std::printf("tangle %s: %d arc(s), %d circle(s), shape %s\n", to_string(t).c_str(), topo.arcs, topo.circles,
                topo.shape.c_str());
    for (std::size_t i = 0; i < set.components.size(); ++i) {
        const auto& c = set.components[i];
        std::printf("  component %zu: %s, %s, %zu points, %d diagonal crossings -> %d generators\n", i,
                    to_string(c.kind).c_str(), c.closed ? "closed" : "open", c.points.size(),
                    gen.components[i].diagonal_crossings, gen.components[i].generators);
        for (const auto& in : c.incidences)
            std::printf("    meets component %d at (x, y, tau) = (%.9f, %.9f, %.9f)\n", in.other, in.at.x, in.at.y,
                        in.at.tau);
    }
    std::printf("generators: %d (binary dihedral %d, other %d)\n", gen.totals.total, gen.totals.bd, gen.totals.nonbd);
}
