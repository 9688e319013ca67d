#include "doctest.h"

#include <random>
#include <set>
#include <map>

#include "flipmod/bounds.hpp"
#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/explorer.hpp"
#include "flipmod/families.hpp"
#include "flipmod/flip.hpp"
#include "flipmod/verify.hpp"

using namespace flipmod;

namespace {

ExploreConfig quiet()
{
    ExploreConfig cfg;
    cfg.workers = 2;
    return cfg;
}

/// Two-loop star form: every arc at the first loop's vertex, the first
/// loop's own face anchored at a_u1, the second loop packed as a pea inside
/// a pod anchored at a_u2.
Triangulation pi_star(int n, int u1, int u2)
{
    REQUIRE(u1 != u2);
    MapBuilder mb(TopologySpec::pi(n));
    std::vector<int> vid(n + 1);
    for (int p = 1; p <= n; ++p)
        vid[p] = mb.add_privileged_vertex(p);
    int vm = mb.add_loop_vertex(0);
    int vp = mb.add_loop_vertex(1);

    int alpha_m = mb.add_boundary_dart(vm, vm, Mark{MarkKind::loop, 0});
    int alpha_p = mb.add_boundary_dart(vp, vp, Mark{MarkKind::loop, 1});
    std::vector<int> alpha(n + 1);
    for (int p = 1; p <= n; ++p)
        alpha[p] = mb.add_boundary_dart(vid[p], vid[p % n + 1],
                                        Mark{MarkKind::privileged, p});
    int p1 = mb.add_arc(vm, vid[u1]);
    int p2 = mb.add_arc(vm, vid[u1]);
    int m1 = mb.add_arc(vp, vm);
    int m2 = mb.add_arc(vp, vm);
    int lam = mb.add_arc(vm, vm);
    int e1 = mb.add_arc(vm, vid[u2]);
    int e2 = mb.add_arc(vm, vid[u2]);
    std::map<int, int> sig;
    for (int v = 1; v <= n; ++v)
        if (v != u1 && v != u2)
            sig[v] = mb.add_arc(vm, vid[v]);

    mb.face(alpha_m, p1, p2 + 1);      // first loop's own face
    mb.face(alpha_p, m1, m2 + 1);      // second loop's face inside the pea
    mb.face(lam, m1 + 1, m2);          // pea ring
    mb.face(lam + 1, e1, e2 + 1);      // the pod triangle
    auto out = [&](int v) { return v == u1 ? p2 : v == u2 ? e2 : sig[v]; };
    auto in = [&](int v) { return (v == u1 ? p1 : v == u2 ? e1 : sig[v]) + 1; };
    for (int p = 1; p <= n; ++p)
        mb.face(alpha[p], in(p % n + 1), out(p));
    return mb.build();
}

} // namespace

TEST_CASE("making every arc hit the hub")
{
    for (int n = 2; n <= 8; ++n) {
        FlipSequence p = make_all_incident(a_triangulation(n, Sign::minus));
        CHECK(p.length() <= n - 1);
        validate_path(p);
        // the endpoint is one of the star forms
        bool star = false;
        for (int u = 1; u <= n; ++u)
            star = star || equivalent(p.end(), gamma_star(n, u));
        CHECK(star);
    }
    CHECK(make_all_incident(gamma_star(5, 2)).length() == 0);
}

TEST_CASE("upper path on the one-loop surface")
{
    auto cfg = quiet();
    CHECK(gamma_upper_path(gamma_star(3, 1), gamma_star(3, 1)).length() == 0);

    // the far pair needs exactly the cap at n=3
    auto am = a_triangulation(3, Sign::minus);
    auto ap = a_triangulation(3, Sign::plus);
    FlipSequence p = gamma_upper_path(am, ap);
    validate_path(p);
    CHECK(equivalent(p.start, am));
    CHECK(equivalent(p.end(), ap));
    auto [d, w] = distance(am, ap, cfg);
    (void)w;
    CHECK(d == 5);
    CHECK(p.length() == 5);

    std::mt19937_64 rng(61);
    auto g = build_graph(a_triangulation(5, Sign::minus), cfg, "A");
    for (int t = 0; t < 50; ++t) {
        int u = static_cast<int>(rng() % g.node_count());
        int v = static_cast<int>(rng() % g.node_count());
        FlipSequence q = gamma_upper_path(g.reps[u], g.reps[v]);
        CHECK(q.length() <= gamma_diameter_formula(5));
        auto du = bfs_distances(g, u);
        int target = g.find(canonical_code(g.reps[v]));
        CHECK(q.length() >= du[target]);
    }
}

TEST_CASE("ear normalization")
{
    auto cfg = quiet();
    auto eared = zigzag(6);
    auto [pu, pv] = ear_pair_normalize(eared, eared, 1);
    CHECK(pu.length() == 0);
    CHECK(pv.length() == 0);

    // degree sum above four is refused
    CHECK_THROWS_AS(ear_pair_normalize(polygon_fan(9, 4), polygon_fan(9, 4), 4), Error);

    auto g = build_graph(a_triangulation(3, Sign::minus), cfg, "A");
    for (const auto& U : g.reps)
        for (const auto& V : g.reps)
            for (int q = 1; q <= 3; ++q) {
                int sum = U.interior_degree(VertexRef::privileged(q)) +
                          V.interior_degree(VertexRef::privileged(q));
                if (sum > 4)
                    continue;
                auto [a, b] = ear_pair_normalize(U, V, q);
                CHECK(a.length() + b.length() <= 4);
                CHECK(a.end().has_ear_at(q));
                CHECK(b.end().has_ear_at(q));
            }
}

TEST_CASE("general upper path")
{
    auto cfg = quiet();
    auto z = zigzag(8);
    CHECK(general_upper_path(z, z, 4, cfg).length() == 0);

    auto f = polygon_fan(8, 1);
    FlipSequence p = general_upper_path(z, f, 4, cfg);
    validate_path(p);
    CHECK(equivalent(p.start, z));
    CHECK(equivalent(p.end(), f));
    auto [d, w] = distance(z, f, cfg);
    (void)w;
    CHECK(p.length() >= d);
    CHECK(p.length() <= 4 * 8 + d);

    auto am = a_triangulation(5, Sign::minus);
    auto ap = a_triangulation(5, Sign::plus);
    FlipSequence q = general_upper_path(am, ap, 3, cfg);
    validate_path(q);
    auto [da, wa] = distance(am, ap, cfg);
    (void)wa;
    CHECK(q.length() >= da);
}

TEST_CASE("pods")
{
    SUBCASE("the star form has one pod and it walks the whole way round")
    {
        Triangulation s = gamma_star(4, 2);
        auto pods = find_pods(s);
        REQUIRE(pods.size() == 1);
        CHECK(pods[0].anchor == 2);
        CHECK(pod_multiplicity(s, pods[0]) == 1);

        Triangulation cur = s;
        for (int i = 0; i < 4; ++i) {
            auto ps = find_pods(cur);
            REQUIRE(ps.size() == 1);
            auto [next, arc] = move_pod(cur, ps[0], Turn::ccw);
            (void)arc;
            validate(next);
            auto moved = find_pods(next);
            REQUIRE(moved.size() == 1);
            CHECK(moved[0].anchor == ps[0].anchor % 4 + 1);
            cur = next;
        }
        CHECK(equivalent(cur, s));
    }
    SUBCASE("cw then ccw is the identity up to equivalence")
    {
        Triangulation s = gamma_star(5, 3);
        auto [once, a1] = move_pod(s, find_pods(s)[0], Turn::cw);
        (void)a1;
        auto [back, a2] = move_pod(once, find_pods(once)[0], Turn::ccw);
        (void)a2;
        CHECK(equivalent(back, s));
    }
    SUBCASE("the pierced families' pods sit inside a ring and cannot move")
    {
        Triangulation t = b_triangulation(4, Sign::minus);
        auto pods = find_pods(t);
        REQUIRE(pods.size() == 2);
        CHECK_THROWS_AS(move_pod(t, pods[0], Turn::ccw), Error);
    }
    SUBCASE("pods in the two-loop star form move across gaps")
    {
        Triangulation s = pi_star(5, 1, 3);
        validate(s);
        auto pods = find_pods(s);
        REQUIRE(pods.size() == 2);
        CHECK(pods[0].anchor == 1);
        CHECK(pods[1].anchor == 3);
        CHECK(pod_multiplicity(s, pods[1]) == 1);
        auto [moved, arc] = move_pod(s, pods[1], Turn::ccw);
        (void)arc;
        validate(moved);
        auto after = find_pods(moved);
        REQUIRE(after.size() == 2);
        CHECK(after[1].anchor == 4);
        CHECK(equivalent(moved, pi_star(5, 1, 4)));
    }
    SUBCASE("joining adjacent pods")
    {
        Triangulation cur = pi_star(4, 1, 2);
        auto ps = find_pods(cur);
        REQUIRE(ps.size() == 2);
        // the neighbor pod blocks the passage toward it
        CHECK_THROWS_AS(move_pod(cur, ps[1], Turn::cw), Error);
        int m0 = pod_multiplicity(cur, ps[0]);
        int m1 = pod_multiplicity(cur, ps[1]);
        auto [joined, arc] = join_pods(cur, ps[0], ps[1]);
        (void)arc;
        validate(joined);
        auto after = find_pods(joined);
        REQUIRE(!after.empty());
        std::set<int> anchors;
        int best = 0;
        for (const auto& p : after) {
            anchors.insert(p.anchor);
            best = std::max(best, pod_multiplicity(joined, p));
        }
        CHECK(anchors.size() == 1); // one pod position left
        CHECK(best == m0 + m1);     // multiplicities add
        CHECK(joined.interior_arcs().size() == cur.interior_arcs().size());
    }
    SUBCASE("bad pod arguments are refused")
    {
        Triangulation s = gamma_star(4, 1);
        Pod fake = find_pods(s)[0];
        fake.face = 999;
        CHECK_THROWS_AS(move_pod(s, fake, Turn::ccw), Error);
        CHECK_THROWS_AS(join_pods(s, find_pods(s)[0], find_pods(s)[0]), Error);
    }
}
