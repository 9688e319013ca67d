#include "flipmod/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "flipmod/contract.hpp"
#include "flipmod/error.hpp"

namespace flipmod {

namespace {

constexpr double kTau = 6.28318530717958647692;

} // namespace

Triangulation disc_from_diagonals(int n, const std::vector<std::pair<int, int>>& diagonals)
{
    if (n < 3)
        fail(errc::untriangulable, "disc needs n >= 3");
    if (static_cast<int>(diagonals.size()) != n - 3)
        fail(errc::bad_argument, "a disc triangulation has n-3 diagonals");

    // Realize the polygon on a circle and trace faces from the rotation
    // system; chords of a convex polygon cannot be confused with each other.
    struct HalfEdge {
        int u, v;     // from, to (privileged indices)
        int twin;
        int next = -1;
        bool boundary_candidate;
    };
    std::vector<HalfEdge> he;
    auto add_edge = [&](int u, int v, bool bnd) {
        int id = static_cast<int>(he.size());
        he.push_back({u, v, id + 1, -1, bnd});
        he.push_back({v, u, id, -1, bnd});
    };
    for (int p = 1; p <= n; ++p)
        add_edge(p, p % n + 1, true);
    for (auto [u, v] : diagonals) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            fail(errc::bad_argument, "bad diagonal");
        int gap = std::abs(u - v);
        if (gap == 1 || gap == n - 1)
            fail(errc::bad_argument, "diagonal coincides with a boundary arc");
        add_edge(u, v, false);
    }

    auto angle_of = [&](int p) { return kTau * (p - 1) / n; };
    // CCW rotation at each vertex
    std::vector<std::vector<int>> at(n + 1);
    for (int h = 0; h < static_cast<int>(he.size()); ++h)
        at[he[h].u].push_back(h);
    for (int p = 1; p <= n; ++p) {
        auto dir = [&](int h) {
            double a = std::atan2(std::sin(angle_of(he[h].v)) - std::sin(angle_of(p)),
                                  std::cos(angle_of(he[h].v)) - std::cos(angle_of(p)));
            return a;
        };
        std::sort(at[p].begin(), at[p].end(),
                  [&](int x, int y) { return dir(x) < dir(y); });
    }
    // next within the face on the left: first edge clockwise of the
    // reversed edge around the head vertex
    for (int h = 0; h < static_cast<int>(he.size()); ++h) {
        int t = he[h].twin;
        const auto& ring = at[he[t].u];
        auto it = std::find(ring.begin(), ring.end(), t);
        int pred = *(it == ring.begin() ? std::prev(ring.end()) : std::prev(it));
        he[h].next = pred;
    }

    // the outer face is the orbit of the reversed boundary edge a_2 -> a_1
    std::vector<bool> outer(he.size(), false);
    {
        int start = 1; // twin of the first boundary half-edge (a_1 -> a_2)
        int h = start;
        do {
            outer[h] = true;
            h = he[h].next;
        } while (h != start);
    }

    MapBuilder mb(TopologySpec::disc(n));
    std::vector<int> vid(n + 1);
    for (int p = 1; p <= n; ++p)
        vid[p] = mb.add_privileged_vertex(p);

    std::vector<int> dart_of(he.size(), -1);
    for (int h = 0; h < static_cast<int>(he.size()); ++h) {
        if (outer[h] || dart_of[h] >= 0)
            continue;
        int t = he[h].twin;
        if (he[h].boundary_candidate) {
            if (outer[t]) {
                dart_of[h] = mb.add_boundary_dart(vid[he[h].u], vid[he[h].v],
                                                  Mark{MarkKind::privileged, he[h].u});
            } else {
                fail(errc::malformed_map, "boundary edge not on the outer face");
            }
        } else {
            int d = mb.add_arc(vid[he[h].u], vid[he[h].v]);
            dart_of[h] = d;
            dart_of[t] = d + 1;
        }
    }
    std::vector<bool> emitted(he.size(), false);
    for (int h = 0; h < static_cast<int>(he.size()); ++h) {
        if (outer[h] || emitted[h])
            continue;
        int h1 = he[h].next, h2 = he[h1].next;
        if (he[h2].next != h)
            fail(errc::malformed_map, "face is not a triangle");
        mb.face(dart_of[h], dart_of[h1], dart_of[h2]);
        emitted[h] = emitted[h1] = emitted[h2] = true;
    }
    return mb.build();
}

Triangulation zigzag(int n)
{
    if (n < 3)
        fail(errc::untriangulable, "zigzag needs n >= 3");
    std::vector<std::pair<int, int>> diags;
    // endpoint sequence n, 2, n-1, 3, n-2, ...
    auto seq = [&](int i) { return (i % 2 == 0) ? n - i / 2 : 2 + i / 2; };
    for (int i = 0; i + 1 <= n - 3; ++i)
        diags.emplace_back(seq(i), seq(i + 1));
    return disc_from_diagonals(n, diags);
}

Triangulation polygon_fan(int n, int apex)
{
    if (n < 3)
        fail(errc::untriangulable, "fan needs n >= 3");
    if (apex < 1 || apex > n)
        fail(errc::bad_argument, "apex out of range");
    std::vector<std::pair<int, int>> diags;
    for (int v = 1; v <= n; ++v) {
        int gap = std::abs(v - apex);
        if (gap >= 2 && gap <= n - 2)
            diags.emplace_back(apex, v);
    }
    return disc_from_diagonals(n, diags);
}

Triangulation pierce_ear(const Triangulation& T, int q, PierceSide side,
                         TopologySpec target, int loop_index)
{
    if (!T.has_ear_at(q) && T.n() >= 2)
        fail(errc::bad_argument, "no ear at a_" + std::to_string(q));
    validate_spec(target);

    Triangulation R = T;
    R.spec = target;
    R.loop_dart.assign(target.loops.size(), -1);
    R.loop_vertex.assign(target.loops.size(), -1);
    for (size_t l = 0; l < T.loop_dart.size(); ++l) {
        R.loop_dart[l] = T.loop_dart[l];
        R.loop_vertex[l] = T.loop_vertex[l];
    }

    const int b0 = T.priv_dart[q - 1]; // alpha_q, from a_q
    const int b1 = T.next(b0);         // far side of the ear
    const int b2 = T.next(b1);         // boundary arc entering a_q

    const int vq = T.origin(b0);
    int v0 = static_cast<int>(R.verts.size());
    R.verts.push_back(Vertex{VertexKind::loop, loop_index});
    R.loop_vertex[loop_index] = v0;

    auto add_dart = [&](int origin, Mark mark) {
        int id = static_cast<int>(R.darts.size());
        R.darts.push_back(Dart{-1, -1, origin, mark});
        return id;
    };
    int alpha0 = add_dart(v0, Mark{MarkKind::loop, loop_index});
    R.loop_dart[loop_index] = alpha0;
    int l_in = add_dart(vq, Mark{});
    int l_out = add_dart(vq, Mark{});
    R.darts[l_in].twin = l_out;
    R.darts[l_out].twin = l_in;
    int p1a = add_dart(v0, Mark{}), p1b = add_dart(vq, Mark{});
    R.darts[p1a].twin = p1b;
    R.darts[p1b].twin = p1a;
    int p2a = add_dart(v0, Mark{}), p2b = add_dart(vq, Mark{});
    R.darts[p2a].twin = p2b;
    R.darts[p2b].twin = p2a;

    auto face = [&](int x, int y, int z) {
        R.darts[x].next = y;
        R.darts[y].next = z;
        R.darts[z].next = x;
    };
    face(alpha0, p1a, p2b); // the loop's own face
    face(l_in, p1b, p2a);   // doubled arc around the hole

    if (side == PierceSide::before) {
        int ca = add_dart(T.origin(b2), Mark{}); // copy of the arc entering a_q
        int cb = add_dart(vq, Mark{});
        R.darts[ca].twin = cb;
        R.darts[cb].twin = ca;
        face(b2, l_out, cb);
        face(ca, b0, b1);
    } else {
        int da = add_dart(vq, Mark{}); // copy of the arc leaving a_q
        int db = add_dart(T.head(b0), Mark{});
        R.darts[da].twin = db;
        R.darts[db].twin = da;
        face(b2, da, b1);
        face(l_out, b0, db);
    }

    R = renumber_canonical(R);
    validate(R);
    return R;
}

Triangulation a_triangulation(int n, Sign sign)
{
    if (n < 1)
        fail(errc::bad_argument, "need n >= 1");
    if (n <= 2) {
        Triangulation t = a_triangulation(3, sign);
        t = delete_vertex(t, 3);
        if (n == 1)
            t = delete_vertex(t, 2);
        return t;
    }
    Triangulation z = zigzag(n);
    int q = (sign == Sign::minus) ? 1 : n / 2 + 1;
    // The two ends of the zigzag are pierced as mirror images of each other;
    // the odd templates are reflections of the even ones.
    PierceSide side;
    if (sign == Sign::minus)
        side = PierceSide::before;
    else
        side = (n % 2 == 0) ? PierceSide::before : PierceSide::after;
    return pierce_ear(z, q, side, TopologySpec::gamma(n), 0);
}

Triangulation b_triangulation(int n, Sign sign)
{
    if (n < 1)
        fail(errc::bad_argument, "need n >= 1");
    if (n <= 2) {
        Triangulation t = b_triangulation(3, sign);
        t = delete_vertex(t, 3);
        if (n == 1)
            t = delete_vertex(t, 2);
        return t;
    }
    Triangulation a = a_triangulation(n, sign);
    // the existing loop becomes the marked loop "-", the new one "+"
    a.spec = TopologySpec::pi(n);
    a.loop_dart.push_back(-1);
    a.loop_vertex.push_back(-1);
    int q = (sign == Sign::minus) ? n / 2 + 1 : 1;
    PierceSide side;
    if (sign == Sign::minus)
        side = (n % 2 == 0) ? PierceSide::before : PierceSide::after;
    else
        side = PierceSide::before;
    return pierce_ear(a, q, side, TopologySpec::pi(n), 1);
}

Triangulation gamma_star(int n, int u)
{
    if (n < 1)
        fail(errc::bad_argument, "need n >= 1");
    if (u < 1 || u > n)
        fail(errc::bad_argument, "corner out of range");
    MapBuilder mb(TopologySpec::gamma(n));
    std::vector<int> vid(n + 1);
    for (int p = 1; p <= n; ++p)
        vid[p] = mb.add_privileged_vertex(p);
    int v0 = mb.add_loop_vertex(0);

    int alpha0 = mb.add_boundary_dart(v0, v0, Mark{MarkKind::loop, 0});
    std::vector<int> alpha(n + 1);
    for (int p = 1; p <= n; ++p)
        alpha[p] = mb.add_boundary_dart(vid[p], vid[p % n + 1],
                                        Mark{MarkKind::privileged, p});
    int p1a = mb.add_arc(v0, vid[u]); // p1b = p1a+1
    int p2a = mb.add_arc(v0, vid[u]);
    std::map<int, int> sig; // v -> dart a_0 -> a_v
    for (int v = 1; v <= n; ++v)
        if (v != u)
            sig[v] = mb.add_arc(v0, vid[v]);

    mb.face(alpha0, p1a, p2a + 1);
    auto out_dart = [&](int v) { return v == u ? p2a : sig[v]; };     // a_0 -> a_v
    auto in_dart = [&](int v) { return v == u ? p1a + 1 : sig[v] + 1; }; // a_v -> a_0
    for (int p = 1; p <= n; ++p) {
        int v = p % n + 1;
        mb.face(alpha[p], in_dart(v), out_dart(p));
    }
    return mb.build();
}

Triangulation parse_family(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    auto arg = [&](size_t i) -> int {
        if (i >= parts.size())
            fail(errc::bad_argument, "family '" + text + "' is missing arguments");
        try {
            return std::stoi(parts[i]);
        } catch (...) {
            fail(errc::bad_argument, "bad number in family '" + text + "'");
        }
    };
    auto sign = [&](size_t i) -> Sign {
        if (i >= parts.size() || (parts[i] != "+" && parts[i] != "-"))
            fail(errc::bad_argument, "family '" + text + "' needs a sign + or -");
        return parts[i] == "-" ? Sign::minus : Sign::plus;
    };
    if (parts.empty())
        fail(errc::bad_argument, "empty family");
    if (parts[0] == "Z" || parts[0] == "z")
        return zigzag(arg(1));
    if (parts[0] == "A" || parts[0] == "a")
        return a_triangulation(arg(1), sign(2));
    if (parts[0] == "B" || parts[0] == "b")
        return b_triangulation(arg(1), sign(2));
    if (parts[0] == "star")
        return gamma_star(arg(1), arg(2));
    if (parts[0] == "fan")
        return polygon_fan(arg(1), arg(2));
    fail(errc::bad_argument, "unknown family '" + parts[0] + "'");
}

} // namespace flipmod
