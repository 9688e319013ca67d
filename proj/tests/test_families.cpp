#include "doctest.h"

#include <set>

#include "flipmod/canon.hpp"
#include "flipmod/contract.hpp"
#include "flipmod/error.hpp"
#include "flipmod/families.hpp"
#include "flipmod/flip.hpp"

using namespace flipmod;

namespace {

std::set<std::pair<int, int>> diagonal_set(const Triangulation& t)
{
    std::set<std::pair<int, int>> out;
    for (int a : t.interior_arcs()) {
        int u = t.verts[t.origin(a)].index, v = t.verts[t.head(a)].index;
        out.insert({std::min(u, v), std::max(u, v)});
    }
    return out;
}

} // namespace

TEST_CASE("zigzag")
{
    CHECK(zigzag(3).interior_arcs().empty());
    CHECK(diagonal_set(zigzag(5)) == std::set<std::pair<int, int>>{{2, 5}, {2, 4}});
    Triangulation z6 = zigzag(6);
    for (int q = 1; q <= 6; ++q)
        CHECK(z6.has_ear_at(q) == (q == 1 || q == 4));
    CHECK_THROWS_AS(zigzag(2), Error);
}

TEST_CASE("fan")
{
    Triangulation f = polygon_fan(9, 4);
    CHECK(f.interior_degree(VertexRef::privileged(4)) == 6);
    CHECK(f.has_ear_at(3));
    CHECK(f.has_ear_at(5));
}

TEST_CASE("one-loop family")
{
    for (int n = 1; n <= 8; ++n)
        for (Sign sg : {Sign::minus, Sign::plus})
            CHECK(a_triangulation(n, sg).interior_arcs().size() ==
                  static_cast<size_t>(n + 1));
    CHECK(equivalent(a_triangulation(1, Sign::minus), a_triangulation(1, Sign::plus)));
    CHECK_FALSE(equivalent(a_triangulation(2, Sign::minus), a_triangulation(2, Sign::plus)));

    // surviving ears where the second loop will pierce
    for (int n = 3; n <= 8; ++n) {
        CHECK(a_triangulation(n, Sign::minus).has_ear_at(n / 2 + 1));
        CHECK(a_triangulation(n, Sign::plus).has_ear_at(1));
    }
}

TEST_CASE("two-loop family")
{
    for (int n = 1; n <= 6; ++n)
        for (Sign sg : {Sign::minus, Sign::plus})
            CHECK(b_triangulation(n, sg).interior_arcs().size() ==
                  static_cast<size_t>(n + 5));
    CHECK_FALSE(equivalent(b_triangulation(1, Sign::minus), b_triangulation(1, Sign::plus)));
}

TEST_CASE("star forms")
{
    for (int n = 1; n <= 6; ++n)
        for (int u = 1; u <= n; ++u) {
            Triangulation s = gamma_star(n, u);
            int hub = s.vertex_id(VertexRef::loop(0));
            for (int a : s.interior_arcs())
                CHECK((s.origin(a) == hub || s.head(a) == hub));
        }
    // distinct corners give distinct classes
    std::set<CanonicalCode> codes;
    for (int u = 1; u <= 5; ++u)
        codes.insert(canonical_code(gamma_star(5, u)));
    CHECK(codes.size() == 5);

    // one flip relates neighboring corners
    for (int u = 1; u <= 4; ++u) {
        Triangulation s = gamma_star(4, u);
        CanonicalCode next_star = canonical_code(gamma_star(4, u % 4 + 1));
        bool reachable = false;
        for (auto& [arc, nb] : neighbors(s))
            reachable = reachable || canonical_code(nb) == next_star;
        CHECK(reachable);
    }
}

TEST_CASE("family parser")
{
    CHECK(equivalent(parse_family("Z:6"), zigzag(6)));
    CHECK(equivalent(parse_family("A:4:-"), a_triangulation(4, Sign::minus)));
    CHECK(equivalent(parse_family("B:2:+"), b_triangulation(2, Sign::plus)));
    CHECK(equivalent(parse_family("star:5:2"), gamma_star(5, 2)));
    CHECK(equivalent(parse_family("fan:7:3"), polygon_fan(7, 3)));
    CHECK_THROWS_AS(parse_family("Q:4"), Error);
    CHECK_THROWS_AS(parse_family("A:4"), Error);
}

TEST_CASE("pierce refuses a missing ear")
{
    CHECK_THROWS_AS(
        pierce_ear(gamma_star(4, 1), 2, PierceSide::before, TopologySpec::pi(4), 1), Error);
}
