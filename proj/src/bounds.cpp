#include "flipmod/bounds.hpp"

#include <algorithm>
#include <set>

#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/flip.hpp"

namespace flipmod {

namespace {

int loop_hub_vertex(const Triangulation& T)
{
    if (T.spec.loops.size() != 1)
        fail(errc::bad_argument, "needs the one-loop surface");
    return T.loop_vertex[0];
}

int incident_arc_endpoints(const Triangulation& T, int vertex)
{
    return T.interior_degree(vertex);
}

bool arc_incident_to(const Triangulation& T, int arc, int vertex)
{
    return T.origin(arc) == vertex || T.head(arc) == vertex;
}

/// Privileged corner of the loop's triangle in an all-incident (star) form.
int star_corner(const Triangulation& T)
{
    Triangle f = T.triangle_at(T.loop_dart[0]);
    for (int v : f.vertices)
        if (T.verts[v].kind == VertexKind::privileged)
            return T.verts[v].index;
    fail(errc::malformed_map, "loop face has no privileged corner");
}

} // namespace

FlipSequence make_all_incident(const Triangulation& T)
{
    const int hub = loop_hub_vertex(T);
    FlipSequence path;
    path.start = T;
    const int budget = T.n() - 1;
    for (int round = 0; ; ++round) {
        const Triangulation& cur = path.end();
        int vertex = path.length() == 0 ? hub : loop_hub_vertex(cur);
        bool all = true;
        for (int a : cur.interior_arcs())
            if (!arc_incident_to(cur, a, vertex)) {
                all = false;
                break;
            }
        if (all)
            return path;
        if (round > budget)
            fail(errc::stuck, "all-incident form not reached within n-1 flips");
        int deg = incident_arc_endpoints(cur, vertex);
        bool advanced = false;
        for (int a : flippable_arcs(cur)) {
            if (arc_incident_to(cur, a, vertex))
                continue;
            auto [next, slot] = flip(cur, a);
            (void)slot;
            if (incident_arc_endpoints(next, loop_hub_vertex(next)) > deg) {
                path.push(a, std::move(next));
                advanced = true;
                break;
            }
        }
        if (!advanced)
            fail(errc::stuck, "no flip increases the hub degree");
    }
}

FlipSequence gamma_upper_path(const Triangulation& U, const Triangulation& V)
{
    if (U.spec != V.spec)
        fail(errc::spec_mismatch, "different surfaces");
    FlipSequence path;
    path.start = U;
    if (equivalent(U, V))
        return path;

    const int n = U.n();
    FlipSequence up = make_all_incident(U);
    FlipSequence vp = make_all_incident(V);
    int cu = star_corner(up.end());
    int cv = star_corner(vp.end());

    int ccw = ((cv - cu) % n + n) % n;
    int cw = n - ccw;
    int steps = std::min(ccw, cw);
    bool go_ccw = ccw <= cw;

    path = up;
    int corner = cu;
    for (int i = 0; i < steps; ++i) {
        int want = go_ccw ? corner % n + 1 : (corner + n - 2) % n + 1;
        const Triangulation& cur = path.end();
        Triangle f = cur.triangle_at(cur.loop_dart[0]);
        bool moved = false;
        for (int d : f.darts) {
            if (!cur.is_interior(d))
                continue;
            auto [next, slot] = flip(cur, d);
            (void)slot;
            if (star_corner(next) == want) {
                path.push(cur.arc_of(d), std::move(next));
                moved = true;
                break;
            }
        }
        if (!moved)
            fail(errc::stuck, "star rotation step failed");
        corner = want;
    }
    return join_paths(path, reverse_path(vp));
}

namespace {

/// One flip that lowers the interior degree at `vertex`, avoiding the given
/// arcs and never introducing an arc at a frozen vertex. Appends to `path`
/// and returns false when no such flip exists.
bool reduce_degree_once(FlipSequence& path, int vertex,
                        const std::set<int>& forbidden_arcs,
                        const std::vector<bool>& frozen_vertex)
{
    const Triangulation& cur = path.end();
    int deg = cur.interior_degree(vertex);
    for (int a : flippable_arcs(cur)) {
        if (forbidden_arcs.count(cur.arc_of(a)))
            continue;
        auto [next, slot] = flip(cur, a);
        if (next.interior_degree(vertex) >= deg)
            continue;
        // the introduced arc occupies the same slot
        int u = next.origin(slot), v = next.head(slot);
        if (!frozen_vertex.empty() && (frozen_vertex[u] || frozen_vertex[v]))
            continue;
        path.push(cur.arc_of(a), std::move(next));
        return true;
    }
    return false;
}

} // namespace

std::pair<FlipSequence, FlipSequence> ear_pair_normalize(const Triangulation& U,
                                                         const Triangulation& V, int q)
{
    if (U.spec != V.spec)
        fail(errc::spec_mismatch, "different surfaces");
    if (U.n() < 2)
        fail(errc::precondition_violated, "needs n >= 2");
    if (q < 1 || q > U.n())
        fail(errc::bad_argument, "vertex index out of range");
    int vu = U.vertex_id(VertexRef::privileged(q));
    int vv = V.vertex_id(VertexRef::privileged(q));
    if (U.interior_degree(vu) + V.interior_degree(vv) > 4)
        fail(errc::precondition_violated, "interior degrees at a_" + std::to_string(q) +
                                              " sum to more than 4");

    std::pair<FlipSequence, FlipSequence> out;
    out.first.start = U;
    out.second.start = V;
    for (FlipSequence* side : {&out.first, &out.second}) {
        while (true) {
            const Triangulation& cur = side->end();
            int v = cur.vertex_id(VertexRef::privileged(q));
            if (cur.interior_degree(v) == 0)
                break;
            if (!reduce_degree_once(*side, v, {}, {}))
                fail(errc::stuck, "no degree-reducing flip at a_" + std::to_string(q));
        }
    }
    return out;
}

FlipSequence general_upper_path(const Triangulation& U, const Triangulation& V,
                                int base_cutoff, const ExploreConfig& cfg)
{
    if (U.spec != V.spec)
        fail(errc::spec_mismatch, "different surfaces");
    FlipSequence left, right;
    left.start = U;
    right.start = V;
    if (equivalent(U, V))
        return left;

    const int n = U.n();
    std::vector<bool> eared(n + 1, false);
    std::set<int> dead_left, dead_right; // arcs closing frozen ears, per side
    int active = n;

    while (active > std::max(base_cutoff, 1)) {
        const Triangulation& tl = left.end();
        const Triangulation& tr = right.end();
        // frozen rows are per vertex id; rebuild from privileged indices
        auto frozen_rows = [&](const Triangulation& t) {
            std::vector<bool> rows(t.verts.size(), false);
            for (int p = 1; p <= n; ++p)
                if (eared[p])
                    rows[t.vertex_id(VertexRef::privileged(p))] = true;
            return rows;
        };
        auto active_degree = [&](const Triangulation& t, const std::set<int>& dead, int p) {
            int v = t.vertex_id(VertexRef::privileged(p));
            int deg = 0;
            for (int a : t.interior_arcs()) {
                if (dead.count(a))
                    continue;
                if (t.origin(a) == v)
                    ++deg;
                if (t.head(a) == v)
                    ++deg;
            }
            return deg;
        };
        int best = -1, best_deg = 5;
        for (int p = 1; p <= n; ++p) {
            if (eared[p])
                continue;
            int d = active_degree(tl, dead_left, p) + active_degree(tr, dead_right, p);
            if (d < best_deg) {
                best_deg = d;
                best = p;
            }
        }
        if (best < 0 || best_deg > 4)
            break;

        bool ok = true;
        for (auto [side, dead] : {std::pair{&left, &dead_left}, {&right, &dead_right}}) {
            while (ok) {
                const Triangulation& cur = side->end();
                int v = cur.vertex_id(VertexRef::privileged(best));
                int deg = 0;
                for (int a : cur.interior_arcs())
                    if (!dead->count(a) && (cur.origin(a) == v || cur.head(a) == v))
                        deg += (cur.origin(a) == v) + (cur.head(a) == v);
                if (deg == 0)
                    break;
                if (!reduce_degree_once(*side, v, *dead, frozen_rows(cur)))
                    ok = false;
            }
            if (!ok)
                break;
            // remember the arc now closing this corner so it stays put
            const Triangulation& cur = side->end();
            int vrow = cur.vertex_id(VertexRef::privileged(best));
            for (int a : cur.interior_arcs())
                if (cur.origin(a) != vrow && cur.head(a) != vrow) {
                    int d1 = cur.next(a), d2 = cur.next(d1);
                    int t = cur.twin(a), t1 = cur.next(t), t2 = cur.next(t1);
                    if (cur.origin(d2) == vrow || cur.origin(t2) == vrow)
                        dead->insert(cur.arc_of(a));
                }
        }
        if (!ok)
            break;
        eared[best] = true;
        active -= 1;
    }

    auto [base_len, mid] = distance(left.end(), right.end(), cfg);
    (void)base_len;
    FlipSequence out = join_paths(left, mid);
    return join_paths(out, reverse_path(right));
}

namespace {

struct PodTriangle {
    int face;
    int center;
    int anchor_vertex;
    int loop;     // the loop-shaped edge (possibly a boundary loop dart)
    int out_dart; // center -> anchor, inside this triangle
    int in_dart;  // anchor -> center, inside this triangle
};

std::vector<PodTriangle> pod_triangles(const Triangulation& T)
{
    std::vector<PodTriangle> out;
    std::set<int> seen;
    for (int d = 0; d < T.dart_count(); ++d) {
        int key = T.face_key(d);
        if (!seen.insert(key).second)
            continue;
        int loop = -1;
        int e = key;
        for (int i = 0; i < 3; ++i, e = T.next(e))
            if (T.origin(e) == T.head(e))
                loop = e;
        if (loop < 0)
            continue;
        int a = T.next(loop), b = T.next(a);
        if (T.origin(a) == T.head(a) || T.origin(b) == T.head(b))
            continue; // several loop edges around one face
        if (!T.is_interior(a) || !T.is_interior(b))
            continue;
        if (T.arc_of(a) == T.arc_of(b))
            continue; // folded face
        int anchor_vertex = T.head(a);
        if (T.verts[anchor_vertex].kind != VertexKind::privileged)
            continue;
        out.push_back(PodTriangle{key, T.origin(loop), anchor_vertex, loop, a, b});
    }
    return out;
}

} // namespace

std::vector<Pod> find_pods(const Triangulation& T)
{
    auto tris = pod_triangles(T);
    std::map<int, int> tri_of_face;
    for (size_t i = 0; i < tris.size(); ++i)
        tri_of_face[tris[i].face] = static_cast<int>(i);

    // chain triangles that share a parallel arc around the same hub
    std::vector<int> link_out(tris.size(), -1), link_in(tris.size(), -1);
    for (size_t i = 0; i < tris.size(); ++i)
        for (int d : {tris[i].out_dart, tris[i].in_dart}) {
            auto it = tri_of_face.find(T.face_key(T.twin(d)));
            if (it == tri_of_face.end())
                continue;
            const PodTriangle& other = tris[it->second];
            if (other.center != tris[i].center ||
                other.anchor_vertex != tris[i].anchor_vertex)
                continue;
            (d == tris[i].out_dart ? link_out[i] : link_in[i]) = it->second;
        }

    std::vector<Pod> pods;
    std::vector<bool> used(tris.size(), false);
    for (size_t i = 0; i < tris.size(); ++i) {
        if (used[i])
            continue;
        // walk to one end of the chain, then collect it
        int start = static_cast<int>(i);
        std::set<int> guard;
        while (link_in[start] >= 0 && guard.insert(start).second)
            start = link_in[start];
        std::vector<int> chain;
        int cur = start;
        while (cur >= 0 && !used[cur]) {
            used[cur] = true;
            chain.push_back(cur);
            cur = link_out[cur];
        }
        Pod p;
        p.center = tris[start].center;
        p.anchor = T.verts[tris[start].anchor_vertex].index;
        p.face = tris[chain.front()].face;
        for (int t : chain) {
            p.face = std::min(p.face, tris[t].face);
            p.faces.push_back(tris[t].face);
        }
        // outermost darts of the fan
        int end = chain.back();
        int lead_a = tris[start].in_dart;
        int lead_b = tris[end].out_dart;
        // orient: the side whose neighbor face holds the boundary arc at the
        // anchor is the counterclockwise one
        int nv = T.n();
        int prev = (p.anchor == 1) ? nv : p.anchor - 1;
        p.lead_ccw = -1;
        p.lead_cw = -1;
        for (int lead : {lead_a, lead_b}) {
            int across = T.twin(lead);
            int x = T.next(across), y = T.next(x);
            for (int ed : {across, x, y}) {
                if (T.darts[ed].mark.kind != MarkKind::privileged)
                    continue;
                if (T.darts[ed].mark.index == p.anchor)
                    p.lead_ccw = lead;
                else if (T.darts[ed].mark.index == prev)
                    p.lead_cw = lead;
            }
        }
        if (p.lead_ccw < 0 && p.lead_cw >= 0)
            p.lead_ccw = p.lead_cw == lead_a ? lead_b : lead_a;
        else if (p.lead_cw < 0 && p.lead_ccw >= 0)
            p.lead_cw = p.lead_ccw == lead_a ? lead_b : lead_a;
        else if (p.lead_ccw < 0 && p.lead_cw < 0) {
            p.lead_ccw = lead_b;
            p.lead_cw = lead_a;
        }
        pods.push_back(std::move(p));
    }
    std::sort(pods.begin(), pods.end(), [](const Pod& a, const Pod& b) {
        return a.anchor != b.anchor ? a.anchor < b.anchor : a.face < b.face;
    });
    return pods;
}

namespace {

const Pod* pod_with_handle(const std::vector<Pod>& pods, const Pod& like)
{
    for (const auto& p : pods)
        if (std::find(p.faces.begin(), p.faces.end(), like.face) != p.faces.end())
            return &p;
    return nullptr;
}

} // namespace

std::pair<Triangulation, int> move_pod(const Triangulation& T, const Pod& pod, Turn dir)
{
    auto pods = find_pods(T);
    const Pod* self = pod_with_handle(pods, pod);
    if (!self || self->anchor != pod.anchor)
        fail(errc::not_a_pod, "no pod at that face");
    int lead = dir == Turn::ccw ? self->lead_ccw : self->lead_cw;
    int across = T.twin(lead);
    int x = T.next(across), y = T.next(x);
    // the passage face must be the plain triangle against the boundary
    bool boundary_ok = false;
    for (int e : {across, x, y})
        if (!T.is_interior(e) && T.darts[e].mark.kind == MarkKind::privileged)
            boundary_ok = true;
    if (!boundary_ok)
        fail(errc::obstructed, "no boundary arc across the pod edge");
    for (int e : {x, y}) {
        if (!T.is_interior(e))
            continue;
        Pod probe;
        probe.face = T.face_key(T.twin(e));
        const Pod* other = pod_with_handle(pods, probe);
        if (other && other->face != self->face)
            fail(errc::obstructed, "another pod blocks the passage");
    }
    auto [next, slot] = flip(T, lead);
    return {std::move(next), slot};
}

std::pair<Triangulation, int> join_pods(const Triangulation& T, const Pod& first,
                                        const Pod& second)
{
    auto pods = find_pods(T);
    const Pod* a = pod_with_handle(pods, first);
    const Pod* b = pod_with_handle(pods, second);
    if (!a || !b || a->face == b->face)
        fail(errc::not_a_pod, "need two distinct pods");
    for (int lead : {a->lead_ccw, a->lead_cw}) {
        int across_face = T.face_key(T.twin(lead));
        int e0 = across_face, e1 = T.next(e0), e2 = T.next(e1);
        for (int e : {e0, e1, e2}) {
            if (!T.is_interior(e) || T.arc_of(e) == T.arc_of(lead))
                continue;
            int far = T.face_key(T.twin(e));
            if (std::find(b->faces.begin(), b->faces.end(), far) != b->faces.end()) {
                auto [next, slot] = flip(T, lead);
                return {std::move(next), slot};
            }
        }
    }
    fail(errc::not_adjacent_pods, "pods do not meet across one face");
}

int pod_multiplicity(const Triangulation& T, const Pod& pod)
{
    auto pods = find_pods(T);
    const Pod* self = pod_with_handle(pods, pod);
    if (!self)
        fail(errc::not_a_pod, "no pod at that face");
    int count = 0;
    for (int fk : self->faces) {
        int loop = -1;
        int e = fk;
        for (int i = 0; i < 3; ++i, e = T.next(e))
            if (T.origin(e) == T.head(e))
                loop = e;
        if (loop < 0)
            continue;
        if (!T.is_interior(loop)) {
            count += 1; // the pea is the boundary loop itself
            continue;
        }
        // flood the faces inside the enclosing loop arc
        std::set<int> inside;
        std::vector<int> stack{T.face_key(T.twin(loop))};
        int blocked = T.arc_of(loop);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            if (!inside.insert(f).second)
                continue;
            int x = f;
            for (int i = 0; i < 3; ++i, x = T.next(x)) {
                if (!T.is_interior(x) || T.arc_of(x) == blocked)
                    continue;
                stack.push_back(T.face_key(T.twin(x)));
            }
        }
        for (int d = 0; d < T.dart_count(); ++d)
            if (T.darts[d].mark.kind == MarkKind::loop && inside.count(T.face_key(d)))
                ++count;
    }
    return count;
}

} // namespace flipmod
