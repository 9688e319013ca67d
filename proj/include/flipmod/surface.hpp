#ifndef FLIPMOD_SURFACE_HPP
#define FLIPMOD_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace flipmod {

/// A non-privileged boundary circle carrying a single vertex.
struct BoundaryLoop {
    bool marked = false;
    std::string label; // empty unless marked
    bool operator==(const BoundaryLoop&) const = default;
};

struct InteriorPoint {
    bool marked = false;
    std::string label;
    bool operator==(const InteriorPoint&) const = default;
};

/// Topological type of the filling surface, plus the number n of vertices
/// on the privileged boundary circle.
struct TopologySpec {
    int genus = 0;
    std::vector<BoundaryLoop> loops;
    std::vector<InteriorPoint> interior;
    int n = 1;

    bool operator==(const TopologySpec&) const = default;

    TopologySpec with_n(int m) const
    {
        TopologySpec s = *this;
        s.n = m;
        return s;
    }

    static TopologySpec disc(int n);
    static TopologySpec gamma(int n);  // one boundary loop
    static TopologySpec pi(int n);     // two marked boundary loops "-" and "+"

    /// Accepts "disc" | "gamma" | "pi" or a JSON object.
    static TopologySpec parse(const std::string& text, int n);
};

void validate_spec(const TopologySpec& spec);

/// chi of the compact surface with boundary; independent of n and of
/// interior points.
int euler_characteristic(const TopologySpec& spec);

/// Number of interior arcs in every triangulation of the surface with the
/// given n. Throws Untriangulable for degenerate combinations.
int interior_arc_count(const TopologySpec& spec, int n);

inline int interior_arc_count(const TopologySpec& spec)
{
    return interior_arc_count(spec, spec.n);
}

nlohmann::json spec_to_json(const TopologySpec& spec);
TopologySpec spec_from_json(const nlohmann::json& j);

/// Short display name: a named shorthand when one applies, else JSON.
std::string spec_name(const TopologySpec& spec);

} // namespace flipmod

#endif
