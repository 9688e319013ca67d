#include "doctest.h"

#include <random>

#include "flipmod/canon.hpp"
#include "flipmod/contract.hpp"
#include "flipmod/error.hpp"
#include "flipmod/explorer.hpp"
#include "flipmod/families.hpp"
#include "flipmod/flip.hpp"

using namespace flipmod;

namespace {

bool has_loop_arc_at(const Triangulation& t, int p)
{
    int v = t.vertex_id(VertexRef::privileged(p));
    for (int a : t.interior_arcs())
        if (t.origin(a) == v && t.head(a) == v)
            return true;
    return false;
}

} // namespace

TEST_CASE("deleting a vertex")
{
    SUBCASE("zigzag loses one diagonal")
    {
        for (int n = 5; n <= 8; ++n)
            for (int p : {1, 2, n})
                CHECK(delete_vertex(zigzag(n), p).interior_arcs().size() ==
                      static_cast<size_t>(n - 4));
    }
    SUBCASE("small cases of the pierced families")
    {
        Triangulation a2m = delete_vertex(a_triangulation(3, Sign::minus), 3);
        CHECK(has_loop_arc_at(a2m, 1));
        Triangulation a2p = delete_vertex(a_triangulation(3, Sign::plus), 3);
        CHECK(has_loop_arc_at(a2p, 2));
        CHECK_FALSE(equivalent(a2m, a2p));
        // both collapse to the unique smallest triangulation
        CHECK(equivalent(delete_vertex(a2m, 2), delete_vertex(a2p, 2)));
    }
    SUBCASE("degenerate deletions are refused")
    {
        CHECK_THROWS_AS(delete_vertex(a_triangulation(1, Sign::minus), 1), Error);
        CHECK_THROWS_AS(delete_vertex(zigzag(3), 2), Error);
    }
    SUBCASE("two-loop family recursion at small n")
    {
        CHECK(equivalent(delete_vertex(b_triangulation(3, Sign::plus), 3),
                         b_triangulation(2, Sign::plus)));
        CHECK(equivalent(delete_vertex(b_triangulation(2, Sign::minus), 2),
                         b_triangulation(1, Sign::minus)));
    }
}

TEST_CASE("flip incidence")
{
    ExploreConfig cfg;
    cfg.workers = 1;

    SUBCASE("on the annulus with two boundary vertices, every flip is incident to both arcs")
    {
        auto g = build_graph(a_triangulation(2, Sign::minus), cfg, "A");
        for (const auto& rep : g.reps)
            for (auto& [arc, nb] : neighbors(rep)) {
                CHECK(flip_incident_to(rep, nb, 1));
                CHECK(flip_incident_to(rep, nb, 2));
            }
    }
    SUBCASE("on a disc, incidence is exactly touching the boundary triangle")
    {
        auto g = build_graph(zigzag(6), cfg, "Z");
        for (const auto& rep : g.reps)
            for (auto& [arc, nb] : neighbors(rep))
                for (int p = 1; p <= 6; ++p) {
                    int fk = rep.face_key(rep.priv_dart[p - 1]);
                    bool affects = fk == rep.face_key(arc) ||
                                   fk == rep.face_key(rep.twin(arc));
                    CHECK(flip_incident_to(rep, nb, p) == affects);
                }
    }
    SUBCASE("non-adjacent input is refused")
    {
        CHECK_THROWS_AS(
            flip_incident_to(gamma_star(4, 1), gamma_star(4, 3), 1), Error);
    }
}

TEST_CASE("path projection")
{
    std::mt19937_64 rng(41);
    SUBCASE("constant path projects to a constant path")
    {
        FlipSequence p;
        p.start = a_triangulation(3, Sign::minus);
        CHECK(project_path(p, 2).length() == 0);
        CHECK(incident_flip_count(p, 2) == 0);
    }
    SUBCASE("fully incident paths vanish")
    {
        FlipSequence p;
        p.start = a_triangulation(2, Sign::minus);
        for (int i = 0; i < 4; ++i) {
            const Triangulation& cur = p.end();
            auto arcs = flippable_arcs(cur);
            int a = arcs[rng() % arcs.size()];
            p.push(a, flip(cur, a).first);
        }
        CHECK(incident_flip_count(p, 1) == 4);
        CHECK(project_path(p, 1).length() == 0);
    }
    SUBCASE("length drops by exactly the incident count")
    {
        for (int trial = 0; trial < 40; ++trial) {
            FlipSequence p;
            p.start = gamma_star(3, 1 + trial % 3);
            for (int i = 0; i < 6; ++i) {
                const Triangulation& cur = p.end();
                auto arcs = flippable_arcs(cur);
                int a = arcs[rng() % arcs.size()];
                p.push(a, flip(cur, a).first);
            }
            FlipSequence proj = project_path(p, 3);
            CHECK(proj.length() == 6 - incident_flip_count(p, 3));
            validate_path(proj);
            CHECK(equivalent(proj.end(), delete_vertex(p.end(), 3)));
        }
    }
}
