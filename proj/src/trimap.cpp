#include "flipmod/trimap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flipmod/error.hpp"

namespace flipmod {

std::vector<int> Triangulation::interior_arcs() const
{
    std::vector<int> out;
    for (int d = 0; d < dart_count(); ++d)
        if (darts[d].twin > d)
            out.push_back(d);
    return out;
}

int Triangulation::vertex_id(VertexRef ref) const
{
    switch (ref.kind) {
    case VertexKind::privileged:
        if (ref.index >= 1 && ref.index <= n())
            return priv_vertex[ref.index - 1];
        break;
    case VertexKind::loop:
        if (ref.index >= 0 && ref.index < static_cast<int>(loop_vertex.size()))
            return loop_vertex[ref.index];
        break;
    case VertexKind::interior:
        if (ref.index >= 0 && ref.index < static_cast<int>(interior_vertex.size()))
            return interior_vertex[ref.index];
        break;
    }
    fail(errc::unknown_vertex, "no such vertex");
}

int Triangulation::interior_degree(int vertex) const
{
    int deg = 0;
    for (int d = 0; d < dart_count(); ++d)
        if (is_interior(d) && origin(d) == vertex)
            ++deg;
    return deg;
}

Triangle Triangulation::triangle_at(int b) const
{
    if (b < 0 || b >= dart_count())
        fail(errc::bad_argument, "dart id out of range");
    if (is_interior(b))
        fail(errc::not_boundary, "dart " + std::to_string(b) + " is interior");
    int d1 = next(b), d2 = next(d1);
    return Triangle{{b, d1, d2}, {origin(b), origin(d1), origin(d2)}};
}

bool Triangulation::has_ear_at(int q) const
{
    if (n() < 2)
        return false;
    int prev_p = (q == 1) ? n() : q - 1;
    return face_key(priv_dart[q - 1]) == face_key(priv_dart[prev_p - 1]);
}

int Triangulation::face_key(int d) const
{
    return std::min({d, next(d), prev(d)});
}

std::string Triangulation::describe_vertex(int v) const
{
    const Vertex& vx = verts[v];
    std::ostringstream os;
    switch (vx.kind) {
    case VertexKind::privileged: os << "a_" << vx.index; break;
    case VertexKind::loop:
        os << "loop_" << vx.index;
        if (spec.loops[vx.index].marked)
            os << "(" << spec.loops[vx.index].label << ")";
        break;
    case VertexKind::interior: os << "pt_" << vx.index; break;
    }
    return os.str();
}

void validate(const Triangulation& T)
{
    std::vector<std::string> bad;
    auto complain = [&](const std::string& s) { bad.push_back(s); };

    const int nd = T.dart_count();
    const int nv = static_cast<int>(T.verts.size());

    for (int d = 0; d < nd; ++d) {
        const Dart& dd = T.darts[d];
        if (dd.next < 0 || dd.next >= nd)
            complain("dart " + std::to_string(d) + " has invalid next");
        if (dd.origin < 0 || dd.origin >= nv)
            complain("dart " + std::to_string(d) + " has invalid origin");
        if (dd.twin >= nd)
            complain("dart " + std::to_string(d) + " has invalid twin");
    }
    if (!bad.empty())
        fail(errc::malformed_map, bad.front());

    // twin is a fixed-point-free involution on interior darts
    for (int d = 0; d < nd; ++d) {
        int t = T.darts[d].twin;
        if (t < 0)
            continue;
        if (t == d)
            complain("twin fixed point at dart " + std::to_string(d));
        else if (T.darts[t].twin != d)
            complain("twin not involutive at dart " + std::to_string(d));
    }

    // next decomposes into 3-cycles and every dart belongs to one
    {
        std::vector<int> seen(nd, 0);
        for (int d = 0; d < nd; ++d) {
            int a = T.next(d);
            if (a == d || T.next(a) == d)
                complain("face at dart " + std::to_string(d) + " is not a triangle");
            seen[a] += 1;
        }
        for (int d = 0; d < nd; ++d)
            if (seen[d] != 1)
                complain("next is not a permutation at dart " + std::to_string(d));
    }

    if (!bad.empty())
        fail(errc::malformed_map, [&] {
            std::string s;
            for (const auto& b : bad) {
                if (!s.empty()) s += "; ";
                s += b;
            }
            return s;
        }());

    // interior darts agree with their twin on endpoints
    for (int d = 0; d < nd; ++d) {
        int t = T.darts[d].twin;
        if (t >= 0 && T.origin(t) != T.head(d))
            complain("twin endpoints disagree at dart " + std::to_string(d));
        if (t >= 0 && T.darts[d].mark.kind != MarkKind::interior)
            complain("boundary mark on twinned dart " + std::to_string(d));
        if (t < 0 && T.darts[d].mark.kind == MarkKind::interior)
            complain("interior mark on boundary dart " + std::to_string(d));
    }

    // privileged boundary cycle: alpha_p runs from a_p to a_{p+1}
    const int n = T.n();
    if (static_cast<int>(T.priv_dart.size()) != n ||
        static_cast<int>(T.priv_vertex.size()) != n) {
        complain("privileged tables have wrong size");
    } else {
        for (int p = 1; p <= n; ++p) {
            int b = T.priv_dart[p - 1];
            if (b < 0 || b >= nd || T.is_interior(b) ||
                T.darts[b].mark != Mark{MarkKind::privileged, p}) {
                complain("alpha_" + std::to_string(p) + " dart is wrong");
                continue;
            }
            int ap = T.priv_vertex[p - 1];
            int an = T.priv_vertex[p % n];
            if (T.origin(b) != ap || T.head(b) != an)
                complain("alpha_" + std::to_string(p) + " endpoints are wrong");
            const Vertex& v = T.verts[ap];
            if (v.kind != VertexKind::privileged || v.index != p)
                complain("vertex a_" + std::to_string(p) + " mislabeled");
        }
    }

    // loop boundaries
    if (static_cast<int>(T.loop_dart.size()) != static_cast<int>(T.spec.loops.size()))
        complain("loop dart table has wrong size");
    else
        for (int l = 0; l < static_cast<int>(T.spec.loops.size()); ++l) {
            int b = T.loop_dart[l];
            if (b < 0 || b >= nd || T.is_interior(b) ||
                T.darts[b].mark != Mark{MarkKind::loop, l}) {
                complain("loop arc " + std::to_string(l) + " dart is wrong");
                continue;
            }
            int v = T.loop_vertex[l];
            if (T.origin(b) != v || T.head(b) != v)
                complain("loop arc " + std::to_string(l) + " endpoints are wrong");
        }

    // no stray boundary darts
    {
        int priv = 0, loops = 0;
        for (int d = 0; d < nd; ++d) {
            if (T.is_interior(d))
                continue;
            if (T.darts[d].mark.kind == MarkKind::privileged)
                ++priv;
            else
                ++loops;
        }
        if (priv != n)
            complain("privileged boundary dart count is " + std::to_string(priv));
        if (loops != static_cast<int>(T.spec.loops.size()))
            complain("loop boundary dart count is " + std::to_string(loops));
    }

    // every vertex row is referenced and labeled consistently
    {
        std::vector<bool> used(nv, false);
        for (int d = 0; d < nd; ++d)
            used[T.origin(d)] = true;
        for (int v = 0; v < nv; ++v)
            if (!used[v])
                complain("vertex row " + std::to_string(v) + " unused");
    }

    // rotation at each vertex is a single fan (boundary vertices) or a
    // single cycle (interior vertices); catches pinched or misglued maps
    {
        std::vector<int> deg(nv, 0), b_in(nv, -1), b_out(nv, -1);
        std::vector<int> in_count(nv, 0), out_count(nv, 0);
        bool tables_ok = true;
        for (int d = 0; d < nd; ++d) {
            deg[T.origin(d)] += 1;
            if (!T.is_interior(d)) {
                b_out[T.origin(d)] = d;
                out_count[T.origin(d)] += 1;
                b_in[T.head(d)] = d;
                in_count[T.head(d)] += 1;
            }
        }
        for (int v = 0; v < nv; ++v)
            if (in_count[v] > 1 || out_count[v] > 1) {
                complain("vertex " + std::to_string(v) + " lies on several boundary arcs");
                tables_ok = false;
            }
        for (int v = 0; v < nv && tables_ok; ++v) {
            if (deg[v] == 0)
                continue;
            int visited = 0;
            if (b_in[v] >= 0) {
                int cur = T.next(b_in[v]);
                while (visited <= deg[v]) {
                    if (T.origin(cur) != v) {
                        complain("rotation at vertex " + std::to_string(v) + " escapes");
                        break;
                    }
                    ++visited;
                    if (!T.is_interior(cur)) {
                        if (cur != b_out[v])
                            complain("rotation at vertex " + std::to_string(v) +
                                     " hits a foreign boundary dart");
                        break;
                    }
                    cur = T.next(T.twin(cur));
                }
            } else {
                int start = -1;
                for (int d = 0; d < nd && start < 0; ++d)
                    if (T.origin(d) == v)
                        start = d;
                int cur = start;
                do {
                    if (T.origin(cur) != v) {
                        complain("rotation at vertex " + std::to_string(v) + " escapes");
                        break;
                    }
                    ++visited;
                    cur = T.next(T.twin(cur));
                } while (cur != start && visited <= deg[v]);
            }
            if (visited != deg[v])
                complain("rotation at vertex " + std::to_string(v) + " is not a single fan");
        }
    }

    // counts: interior arcs, Euler characteristic
    try {
        int expected = interior_arc_count(T.spec, n);
        int e_int = static_cast<int>(T.interior_arcs().size());
        if (e_int != expected)
            complain("interior arc count " + std::to_string(e_int) + " expected " +
                     std::to_string(expected));
        int e = e_int + n + static_cast<int>(T.spec.loops.size());
        int f = nd / 3;
        if (nd % 3 != 0)
            complain("dart count not divisible by 3");
        int chi = nv - e + f;
        if (chi != euler_characteristic(T.spec))
            complain("Euler characteristic " + std::to_string(chi) + " expected " +
                     std::to_string(euler_characteristic(T.spec)));
    } catch (const Error& e) {
        complain(e.what());
    }

    if (!bad.empty()) {
        std::string s;
        for (const auto& b : bad) {
            if (!s.empty()) s += "; ";
            s += b;
        }
        fail(errc::malformed_map, s);
    }
}

namespace {

// Deterministic dart traversal from the root (the dart of alpha_n). Visits
// every dart; order depends only on the map structure, not on dart ids.
std::vector<int32_t> canonical_order(const Triangulation& T)
{
    const int nd = T.dart_count();
    std::vector<int32_t> order;
    order.reserve(nd);
    std::vector<int32_t> pos(nd, -1);
    int root = T.priv_dart[T.n() - 1];
    pos[root] = 0;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        int nx = T.next(d);
        if (pos[nx] < 0) {
            pos[nx] = static_cast<int>(order.size());
            order.push_back(nx);
        }
        int tw = T.twin(d);
        if (tw >= 0 && pos[tw] < 0) {
            pos[tw] = static_cast<int>(order.size());
            order.push_back(tw);
        }
    }
    return order; // order[new_id] = old_id
}

} // namespace

Triangulation permute_darts(const Triangulation& T, const std::vector<int32_t>& perm)
{
    // perm[new_id] = old_id
    const int nd = T.dart_count();
    std::vector<int32_t> pos(nd, -1);
    for (int i = 0; i < nd; ++i)
        pos[perm[i]] = i;
    Triangulation R = T;
    for (int i = 0; i < nd; ++i) {
        const Dart& src = T.darts[perm[i]];
        Dart& dst = R.darts[i];
        dst.twin = src.twin < 0 ? -1 : pos[src.twin];
        dst.next = pos[src.next];
        dst.origin = src.origin;
        dst.mark = src.mark;
    }
    for (auto& b : R.priv_dart)
        b = pos[b];
    for (auto& b : R.loop_dart)
        b = pos[b];
    return R;
}

Triangulation renumber_canonical(const Triangulation& T)
{
    return permute_darts(T, canonical_order(T));
}

std::vector<int32_t> canonical_positions(const Triangulation& T)
{
    auto order = canonical_order(T);
    std::vector<int32_t> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int32_t>(i);
    return pos;
}

Triangulation rotate_labels(const Triangulation& T, int k)
{
    const int n = T.n();
    auto shift = [&](int p) { return (p - 1 + k % n + n) % n + 1; };
    Triangulation R = T;
    for (auto& d : R.darts)
        if (d.mark.kind == MarkKind::privileged)
            d.mark.index = shift(d.mark.index);
    for (auto& v : R.verts)
        if (v.kind == VertexKind::privileged)
            v.index = shift(v.index);
    for (int p = 1; p <= n; ++p) {
        R.priv_dart[shift(p) - 1] = T.priv_dart[p - 1];
        R.priv_vertex[shift(p) - 1] = T.priv_vertex[p - 1];
    }
    return renumber_canonical(R);
}

Triangulation reflect_fix_a1(const Triangulation& T)
{
    const int n = T.n();
    const int nd = T.dart_count();
    Triangulation R = T;
    // Reverse orientation: faces run backwards, darts point the other way.
    for (int d = 0; d < nd; ++d) {
        R.darts[d].next = T.prev(d);
        R.darts[d].origin = T.head(d);
    }
    // a_i -> a_{2-i} mod n keeps a_1 fixed; alpha_p = {a_p, a_{p+1}} becomes
    // the arc {a_{2-p-1}, a_{2-p}}, i.e. alpha_{1-p mod n}.
    auto refl = [&](int p) { return ((2 - p) % n + n) % n == 0 ? n : ((2 - p) % n + n) % n; };
    auto refl_arc = [&](int p) { return ((1 - p) % n + n) % n == 0 ? n : ((1 - p) % n + n) % n; };
    for (auto& d : R.darts)
        if (d.mark.kind == MarkKind::privileged)
            d.mark.index = refl_arc(d.mark.index);
    for (auto& v : R.verts)
        if (v.kind == VertexKind::privileged)
            v.index = refl(v.index);
    for (int p = 1; p <= n; ++p) {
        R.priv_dart[refl_arc(p) - 1] = T.priv_dart[p - 1];
        R.priv_vertex[refl(p) - 1] = T.priv_vertex[p - 1];
    }
    return renumber_canonical(R);
}

nlohmann::json triangulation_to_json(const Triangulation& T)
{
    nlohmann::json j;
    j["spec"] = spec_to_json(T.spec);
    auto& arr = j["darts"] = nlohmann::json::array();
    for (const auto& d : T.darts) {
        nlohmann::json e;
        if (d.twin < 0)
            e["twin"] = nullptr;
        else
            e["twin"] = d.twin;
        e["next"] = d.next;
        const Vertex& v = T.verts[d.origin];
        nlohmann::json org;
        switch (v.kind) {
        case VertexKind::privileged: org["kind"] = "privileged"; break;
        case VertexKind::loop: org["kind"] = "loop"; break;
        case VertexKind::interior: org["kind"] = "interior"; break;
        }
        org["index"] = v.index;
        org["row"] = d.origin;
        e["origin"] = org;
        nlohmann::json mk;
        switch (d.mark.kind) {
        case MarkKind::interior: mk["kind"] = "interior"; break;
        case MarkKind::privileged: mk["kind"] = "privileged"; break;
        case MarkKind::loop: mk["kind"] = "loop"; break;
        }
        mk["index"] = d.mark.index;
        e["mark"] = mk;
        arr.push_back(e);
    }
    return j;
}

Triangulation triangulation_from_json(const nlohmann::json& j)
{
    Triangulation T;
    T.spec = spec_from_json(j.at("spec"));
    const auto& arr = j.at("darts");
    const int nd = static_cast<int>(arr.size());

    std::map<int, Vertex> rows;
    for (const auto& e : arr) {
        const auto& org = e.at("origin");
        Vertex v;
        std::string kind = org.at("kind");
        v.kind = kind == "privileged" ? VertexKind::privileged
               : kind == "loop"       ? VertexKind::loop
                                      : VertexKind::interior;
        v.index = org.at("index");
        rows[org.at("row").get<int>()] = v;
    }
    std::map<int, int> row_to_id;
    for (const auto& [row, v] : rows) {
        row_to_id[row] = static_cast<int>(T.verts.size());
        T.verts.push_back(v);
    }

    T.priv_dart.assign(T.spec.n, -1);
    T.priv_vertex.assign(T.spec.n, -1);
    T.loop_dart.assign(T.spec.loops.size(), -1);
    T.loop_vertex.assign(T.spec.loops.size(), -1);
    T.interior_vertex.assign(T.spec.interior.size(), -1);

    T.darts.resize(nd);
    for (int d = 0; d < nd; ++d) {
        const auto& e = arr[d];
        Dart& dd = T.darts[d];
        dd.twin = e.at("twin").is_null() ? -1 : e.at("twin").get<int>();
        dd.next = e.at("next");
        dd.origin = row_to_id.at(e.at("origin").at("row").get<int>());
        const auto& mk = e.at("mark");
        std::string kind = mk.at("kind");
        dd.mark.kind = kind == "interior" ? MarkKind::interior
                     : kind == "privileged" ? MarkKind::privileged
                                            : MarkKind::loop;
        dd.mark.index = mk.at("index");
        if (dd.mark.kind == MarkKind::privileged)
            T.priv_dart[dd.mark.index - 1] = d;
        if (dd.mark.kind == MarkKind::loop)
            T.loop_dart[dd.mark.index] = d;
    }
    for (int v = 0; v < static_cast<int>(T.verts.size()); ++v) {
        const Vertex& vx = T.verts[v];
        if (vx.kind == VertexKind::privileged)
            T.priv_vertex[vx.index - 1] = v;
        else if (vx.kind == VertexKind::loop)
            T.loop_vertex[vx.index] = v;
        else
            T.interior_vertex[vx.index] = v;
    }
    validate(T);
    return T;
}

MapBuilder::MapBuilder(TopologySpec spec)
{
    validate_spec(spec);
    t_.spec = std::move(spec);
    t_.priv_dart.assign(t_.spec.n, -1);
    t_.priv_vertex.assign(t_.spec.n, -1);
    t_.loop_dart.assign(t_.spec.loops.size(), -1);
    t_.loop_vertex.assign(t_.spec.loops.size(), -1);
    t_.interior_vertex.assign(t_.spec.interior.size(), -1);
}

int MapBuilder::add_privileged_vertex(int p)
{
    int id = static_cast<int>(t_.verts.size());
    t_.verts.push_back(Vertex{VertexKind::privileged, p});
    t_.priv_vertex[p - 1] = id;
    return id;
}

int MapBuilder::add_loop_vertex(int loop_index)
{
    int id = static_cast<int>(t_.verts.size());
    t_.verts.push_back(Vertex{VertexKind::loop, loop_index});
    t_.loop_vertex[loop_index] = id;
    return id;
}

int MapBuilder::add_interior_vertex(int interior_index)
{
    int id = static_cast<int>(t_.verts.size());
    t_.verts.push_back(Vertex{VertexKind::interior, interior_index});
    t_.interior_vertex[interior_index] = id;
    return id;
}

int MapBuilder::add_boundary_dart(int u, int v, Mark mark)
{
    int id = static_cast<int>(t_.darts.size());
    t_.darts.push_back(Dart{-1, -1, u, mark});
    heads_.push_back(v);
    placed_.push_back(false);
    if (mark.kind == MarkKind::privileged)
        t_.priv_dart[mark.index - 1] = id;
    else if (mark.kind == MarkKind::loop)
        t_.loop_dart[mark.index] = id;
    return id;
}

int MapBuilder::add_arc(int u, int v)
{
    int id = static_cast<int>(t_.darts.size());
    t_.darts.push_back(Dart{id + 1, -1, u, Mark{}});
    t_.darts.push_back(Dart{id, -1, v, Mark{}});
    heads_.push_back(v);
    heads_.push_back(u);
    placed_.insert(placed_.end(), {false, false});
    return id;
}

void MapBuilder::face(int d0, int d1, int d2)
{
    int ds[3] = {d0, d1, d2};
    for (int i = 0; i < 3; ++i) {
        int a = ds[i], b = ds[(i + 1) % 3];
        if (placed_[a])
            fail(errc::malformed_map, "dart used in two faces");
        if (heads_[a] != t_.darts[b].origin)
            fail(errc::malformed_map, "face corners do not chain");
        t_.darts[a].next = b;
        placed_[a] = true;
    }
}

Triangulation MapBuilder::build()
{
    for (size_t d = 0; d < placed_.size(); ++d)
        if (!placed_[d])
            fail(errc::malformed_map, "dart " + std::to_string(d) + " not placed in a face");
    validate(t_);
    return renumber_canonical(t_);
}

} // namespace flipmod
