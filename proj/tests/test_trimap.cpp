#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "flipmod/error.hpp"
#include "flipmod/families.hpp"
#include "flipmod/trimap.hpp"

using namespace flipmod;

TEST_CASE("constructed maps validate")
{
    CHECK_NOTHROW(validate(zigzag(6)));
    CHECK_NOTHROW(validate(a_triangulation(5, Sign::minus)));
    CHECK(a_triangulation(5, Sign::minus).interior_arcs().size() == 6);
}

TEST_CASE("corrupted tables are rejected")
{
    Triangulation t = zigzag(5);
    SUBCASE("twin fixed point")
    {
        int arc = t.interior_arcs()[0];
        t.darts[arc].twin = arc;
        CHECK_THROWS_AS(validate(t), Error);
    }
    SUBCASE("broken face cycle")
    {
        t.darts[0].next = 0;
        CHECK_THROWS_AS(validate(t), Error);
    }
    SUBCASE("mislabeled vertex")
    {
        t.verts[t.priv_vertex[0]].index = 2;
        CHECK_THROWS_AS(validate(t), Error);
    }
}

TEST_CASE("triangle at a boundary arc")
{
    Triangulation z = zigzag(4);
    // the zigzag square's diagonal joins a_2 and a_4
    Triangle f = z.triangle_at(z.priv_dart[0]);
    std::set<int> labels;
    for (int v : f.vertices)
        labels.insert(z.verts[v].index);
    CHECK(labels == std::set<int>{1, 2, 4});
    CHECK_THROWS_AS(z.triangle_at(z.interior_arcs()[0]), Error);

    // the pierced family keeps its loop next to a_1
    Triangulation a = a_triangulation(2, Sign::minus);
    Triangle lf = a.triangle_at(a.priv_dart[0]);
    bool sees_loop_arc = false;
    for (int d : lf.darts)
        sees_loop_arc = sees_loop_arc ||
                        (a.is_interior(d) && a.origin(d) == a.head(d) &&
                         a.verts[a.origin(d)].index == 1);
    CHECK(sees_loop_arc);
}

TEST_CASE("interior degree")
{
    Triangulation z = zigzag(6);
    // an ear's apex meets no diagonal; the ear's closing diagonal is
    // incident once to each of its side vertices
    CHECK(z.interior_degree(VertexRef::privileged(1)) == 0);
    CHECK(z.interior_degree(VertexRef::privileged(6)) == 1);
    CHECK(z.interior_degree(VertexRef::privileged(2)) == 2);
    int sum = 0;
    for (int v = 0; v < static_cast<int>(z.verts.size()); ++v)
        sum += z.interior_degree(v);
    CHECK(sum == 2 * static_cast<int>(z.interior_arcs().size()));

    Triangulation star = gamma_star(5, 2);
    CHECK(star.interior_degree(VertexRef::loop(0)) >= 6);
    CHECK_THROWS_AS(star.vertex_id(VertexRef::privileged(9)), Error);
}

TEST_CASE("ears")
{
    Triangulation z = zigzag(6);
    CHECK(z.has_ear_at(1));
    CHECK(z.has_ear_at(4));
    CHECK_FALSE(z.has_ear_at(2));
    CHECK_FALSE(z.has_ear_at(3));
    CHECK(a_triangulation(5, Sign::minus).has_ear_at(3));
    for (int q = 1; q <= 4; ++q)
        CHECK_FALSE(gamma_star(4, 2).has_ear_at(q));
}

TEST_CASE("dart renumbering does not change the map")
{
    std::mt19937_64 rng(7);
    Triangulation t = a_triangulation(4, Sign::plus);
    std::vector<int32_t> perm(t.dart_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Triangulation p = permute_darts(t, perm);
    CHECK_NOTHROW(validate(p));
    CHECK(p.interior_arcs().size() == t.interior_arcs().size());
}

TEST_CASE("relabelings are valid maps")
{
    Triangulation t = a_triangulation(5, Sign::minus);
    CHECK_NOTHROW(validate(rotate_labels(t, 2)));
    CHECK_NOTHROW(validate(reflect_fix_a1(t)));
    // the reflection is an involution up to renumbering
    Triangulation twice = reflect_fix_a1(reflect_fix_a1(t));
    CHECK(twice.darts.size() == t.darts.size());
}

TEST_CASE("triangulation json round trip is bit exact")
{
    for (Triangulation t : {zigzag(7), a_triangulation(3, Sign::plus),
                            b_triangulation(2, Sign::minus)}) {
        auto j = triangulation_to_json(t);
        Triangulation back = triangulation_from_json(j);
        CHECK(triangulation_to_json(back).dump() == j.dump());
    }
}
