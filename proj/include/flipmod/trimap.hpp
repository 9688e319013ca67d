#ifndef FLIPMOD_TRIMAP_HPP
#define FLIPMOD_TRIMAP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flipmod/surface.hpp"

namespace flipmod {

// Vertices are rows of a per-triangulation table. Privileged vertices carry
// their boundary index (1..n), loop and interior vertices the index of their
// entry in the TopologySpec. Unmarked vertices have no identity beyond the
// row itself.
enum class VertexKind : int8_t { privileged, loop, interior };

struct Vertex {
    VertexKind kind;
    int32_t index; // privileged: p (1-based); loop/interior: spec index (0-based)
};

// Boundary classification of a dart. Interior darts are paired by `twin`;
// boundary darts are the single inner side of a boundary arc.
enum class MarkKind : int8_t { interior, privileged, loop };

struct Mark {
    MarkKind kind = MarkKind::interior;
    int32_t index = 0; // privileged: p; loop: spec loop index

    bool operator==(const Mark&) const = default;
};

struct Dart {
    int32_t twin = -1; // -1 for boundary darts
    int32_t next = -1; // next dart counterclockwise in its triangle
    int32_t origin = -1;
    Mark mark;
};

/// Reference to a vertex by role, for lookups independent of row numbering.
struct VertexRef {
    VertexKind kind;
    int32_t index;

    static VertexRef privileged(int p) { return {VertexKind::privileged, p}; }
    static VertexRef loop(int i) { return {VertexKind::loop, i}; }
    static VertexRef interior(int i) { return {VertexKind::interior, i}; }
};

struct Triangle {
    std::array<int32_t, 3> darts;
    std::array<int32_t, 3> vertices; // origins, in face order
};

/// One triangulation of the surface, as an oriented combinatorial map.
/// Immutable by convention: operations return new values.
class Triangulation {
public:
    TopologySpec spec;
    std::vector<Vertex> verts;
    std::vector<Dart> darts;
    std::vector<int32_t> priv_dart;   // p-1 -> dart of boundary arc alpha_p
    std::vector<int32_t> priv_vertex; // p-1 -> vertex id of a_p
    std::vector<int32_t> loop_dart;   // loop index -> boundary dart
    std::vector<int32_t> loop_vertex; // loop index -> vertex id
    std::vector<int32_t> interior_vertex;

    int n() const { return spec.n; }
    int dart_count() const { return static_cast<int>(darts.size()); }

    bool is_interior(int d) const { return darts[d].twin >= 0; }
    int twin(int d) const { return darts[d].twin; }
    int next(int d) const { return darts[d].next; }
    int prev(int d) const { return darts[darts[d].next].next; }
    int origin(int d) const { return darts[d].origin; }
    int head(int d) const { return darts[darts[d].next].origin; }

    /// Canonical id of the arc containing dart d.
    int arc_of(int d) const
    {
        int t = darts[d].twin;
        return (t >= 0 && t < d) ? t : d;
    }

    /// Ascending ids of all interior arcs.
    std::vector<int> interior_arcs() const;

    int vertex_id(VertexRef ref) const; // throws UnknownVertex

    int interior_degree(int vertex) const;
    int interior_degree(VertexRef ref) const { return interior_degree(vertex_id(ref)); }

    /// The unique face containing boundary arc b (a boundary dart id).
    Triangle triangle_at(int boundary_dart) const; // throws NotBoundary

    /// True iff the faces at alpha_{q-1} and alpha_q coincide.
    bool has_ear_at(int q) const;

    /// Smallest dart of the face containing d; face identity key.
    int face_key(int d) const;

    std::string describe_vertex(int v) const;
};

/// Checks every structural invariant and throws MalformedMap with the full
/// list of violations.
void validate(const Triangulation& T);

/// Renumbers darts into the canonical traversal order used by the canonical
/// code, so equal classes get identical tables.
Triangulation renumber_canonical(const Triangulation& T);

/// Position of each dart in the canonical traversal (pos[dart] = index).
/// Two equivalent triangulations have matching darts at equal positions.
std::vector<int32_t> canonical_positions(const Triangulation& T);

/// Applies an arbitrary dart renumbering (testing aid).
Triangulation permute_darts(const Triangulation& T, const std::vector<int32_t>& perm);

/// Rotates privileged labels by k steps: a_p becomes a_{p+k} (cyclically).
Triangulation rotate_labels(const Triangulation& T, int k);

/// Mirror image with privileged labels reflected so that a_1 is fixed
/// (a_i -> a_{2-i} cyclically). Orientation-reversing relabel.
Triangulation reflect_fix_a1(const Triangulation& T);

nlohmann::json triangulation_to_json(const Triangulation& T);
Triangulation triangulation_from_json(const nlohmann::json& j);

/// Incremental assembly of a Triangulation from vertices, arcs and faces.
class MapBuilder {
public:
    explicit MapBuilder(TopologySpec spec);

    int add_privileged_vertex(int p);
    int add_loop_vertex(int loop_index);
    int add_interior_vertex(int interior_index);

    /// Single boundary dart from u to v.
    int add_boundary_dart(int u, int v, Mark mark);
    /// Twin pair for an interior arc; returns the dart u->v (its twin is v->u).
    int add_arc(int u, int v);

    void face(int d0, int d1, int d2);

    /// Assembles and validates. Resulting darts are in canonical order.
    Triangulation build();

private:
    Triangulation t_;
    std::vector<int32_t> heads_; // declared head per dart, checked in face()
    std::vector<bool> placed_;
};

} // namespace flipmod

#endif
