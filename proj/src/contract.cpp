#include "flipmod/contract.hpp"

#include <algorithm>
#include <cassert>

#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/flip.hpp"

namespace flipmod {

Triangulation delete_vertex(const Triangulation& T, int p)
{
    const int n = T.n();
    if (n <= 1)
        fail(errc::too_few_vertices, "cannot delete from n=1");
    if (p < 1 || p > n)
        fail(errc::bad_argument, "privileged index out of range");
    interior_arc_count(T.spec, n - 1); // throws Untriangulable when degenerate

    Triangulation R = T;
    const int b0 = T.priv_dart[p - 1];
    const int b1 = T.next(b0);
    const int b2 = T.next(b1);
    const int vp = T.origin(b0);
    const int vnext = T.head(b0);

    int dead[3];
    if (!T.is_interior(b2)) {
        // Ear at a_p: the boundary arc before alpha_p absorbs the role of
        // the ear's interior edge, which is dropped.
        assert(T.is_interior(b1));
        int t1 = T.twin(b1);
        int v1 = T.next(t1);
        int v2 = T.next(v1);
        R.darts[b2].next = v1;
        R.darts[v2].next = b2;
        dead[0] = b0; dead[1] = b1; dead[2] = t1;
    } else {
        int t2 = T.twin(b2);
        assert(t2 != b1);
        int u1 = T.next(t2);
        int u2 = T.next(u1);
        R.darts[b1].next = u1;
        R.darts[u2].next = b1;
        dead[0] = b0; dead[1] = b2; dead[2] = t2;
    }

    // a_p's remaining arcs slide onto the next boundary vertex
    for (auto& d : R.darts)
        if (d.origin == vp)
            d.origin = vnext;

    // relabel a_i -> a_{i-1} and alpha_i -> alpha_{i-1} for i > p
    for (auto& d : R.darts)
        if (d.mark.kind == MarkKind::privileged && d.mark.index > p)
            d.mark.index -= 1;
    for (auto& v : R.verts)
        if (v.kind == VertexKind::privileged && v.index > p)
            v.index -= 1;

    // drop the dead darts and the deleted vertex, compacting ids
    std::vector<int32_t> dart_map(R.darts.size());
    {
        std::vector<Dart> kept;
        kept.reserve(R.darts.size() - 3);
        for (int d = 0; d < static_cast<int>(R.darts.size()); ++d) {
            if (d == dead[0] || d == dead[1] || d == dead[2]) {
                dart_map[d] = -1;
                continue;
            }
            dart_map[d] = static_cast<int32_t>(kept.size());
            kept.push_back(R.darts[d]);
        }
        for (auto& d : kept) {
            d.next = dart_map[d.next];
            if (d.twin >= 0)
                d.twin = dart_map[d.twin];
        }
        R.darts = std::move(kept);
    }
    std::vector<int32_t> vert_map(R.verts.size());
    {
        std::vector<Vertex> kept;
        kept.reserve(R.verts.size() - 1);
        for (int v = 0; v < static_cast<int>(R.verts.size()); ++v) {
            if (v == vp) {
                vert_map[v] = -1;
                continue;
            }
            vert_map[v] = static_cast<int32_t>(kept.size());
            kept.push_back(R.verts[v]);
        }
        for (auto& d : R.darts)
            d.origin = vert_map[d.origin];
        R.verts = std::move(kept);
    }

    R.spec.n = n - 1;
    R.priv_dart.assign(n - 1, -1);
    R.priv_vertex.assign(n - 1, -1);
    for (int d = 0; d < static_cast<int>(R.darts.size()); ++d)
        if (R.darts[d].mark.kind == MarkKind::privileged)
            R.priv_dart[R.darts[d].mark.index - 1] = d;
        else if (R.darts[d].mark.kind == MarkKind::loop)
            R.loop_dart[R.darts[d].mark.index] = d;
    for (int v = 0; v < static_cast<int>(R.verts.size()); ++v) {
        const Vertex& vx = R.verts[v];
        if (vx.kind == VertexKind::privileged)
            R.priv_vertex[vx.index - 1] = v;
        else if (vx.kind == VertexKind::loop)
            R.loop_vertex[vx.index] = v;
        else
            R.interior_vertex[vx.index] = v;
    }

    R = renumber_canonical(R);
    validate(R);
    return R;
}

bool flip_incident_to(const Triangulation& U, const Triangulation& V, int p)
{
    if (U.spec != V.spec)
        fail(errc::spec_mismatch, "different surfaces");
    CanonicalCode target = canonical_code(V);
    bool adjacent = false;
    for (int a : flippable_arcs(U))
        if (canonical_code(flip(U, a).first) == target) {
            adjacent = true;
            break;
        }
    if (!adjacent)
        fail(errc::not_adjacent, "triangulations do not differ by one flip");
    return equivalent(delete_vertex(U, p), delete_vertex(V, p));
}

int incident_flip_count(const FlipSequence& path, int p)
{
    int count = 0;
    CanonicalCode prev = canonical_code(delete_vertex(path.start, p));
    for (const auto& st : path.steps) {
        CanonicalCode cur = canonical_code(delete_vertex(st.after, p));
        if (cur == prev)
            ++count;
        prev = std::move(cur);
    }
    return count;
}

FlipSequence project_path(const FlipSequence& path, int p)
{
    FlipSequence out;
    out.start = delete_vertex(path.start, p);
    CanonicalCode prev = canonical_code(out.start);
    for (const auto& st : path.steps) {
        Triangulation down = delete_vertex(st.after, p);
        CanonicalCode cur = canonical_code(down);
        if (cur == prev)
            continue;
        // the deleted triangulations are adjacent; realize the step as a
        // flip from the current endpoint representative
        const Triangulation& from = out.end();
        bool found = false;
        for (int a : flippable_arcs(from)) {
            auto [next, slot] = flip(from, a);
            (void)slot;
            if (canonical_code(next) == cur) {
                out.push(a, std::move(next));
                found = true;
                break;
            }
        }
        if (!found)
            fail(errc::malformed_map, "projected step is not a flip");
        prev = std::move(cur);
    }
    return out;
}

} // namespace flipmod
