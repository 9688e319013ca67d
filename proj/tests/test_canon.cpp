#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/explorer.hpp"
#include "flipmod/families.hpp"
#include "flipmod/flip.hpp"

using namespace flipmod;

namespace {

Triangulation shuffled(const Triangulation& t, std::mt19937_64& rng)
{
    std::vector<int32_t> perm(t.dart_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permute_darts(t, perm);
}

} // namespace

TEST_CASE("codes ignore dart numbering")
{
    std::mt19937_64 rng(11);
    for (Triangulation t : {zigzag(8), a_triangulation(5, Sign::minus),
                            b_triangulation(3, Sign::plus), gamma_star(4, 3)}) {
        CanonicalCode c = canonical_code(t);
        for (int i = 0; i < 10; ++i)
            CHECK(canonical_code(shuffled(t, rng)) == c);
    }
}

TEST_CASE("the four small annulus classes are distinct")
{
    // flips from one seed must close into exactly four classes
    std::set<CanonicalCode> seen;
    std::mt19937_64 rng(3);
    Triangulation cur = a_triangulation(2, Sign::minus);
    seen.insert(canonical_code(cur));
    for (int i = 0; i < 200; ++i) {
        auto arcs = flippable_arcs(cur);
        cur = flip(cur, arcs[rng() % arcs.size()]).first;
        seen.insert(canonical_code(cur));
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("swapping two unmarked loops does not change the code")
{
    // two unmarked loops on the same surface; exchange their spec indices
    TopologySpec two = TopologySpec::gamma(3);
    two.loops.push_back(BoundaryLoop{false, ""});

    Triangulation a = a_triangulation(3, Sign::minus);
    a.spec = two;
    a.loop_dart.push_back(-1);
    a.loop_vertex.push_back(-1);
    Triangulation t = pierce_ear(a, 2, PierceSide::after, two, 1);

    Triangulation swapped = t;
    for (auto& d : swapped.darts)
        if (d.mark.kind == MarkKind::loop)
            d.mark.index = 1 - d.mark.index;
    for (auto& v : swapped.verts)
        if (v.kind == VertexKind::loop)
            v.index = 1 - v.index;
    std::swap(swapped.loop_dart[0], swapped.loop_dart[1]);
    std::swap(swapped.loop_vertex[0], swapped.loop_vertex[1]);
    validate(swapped);
    CHECK(canonical_code(swapped) == canonical_code(t));

    // with marked labels the same swap must be visible
    Triangulation b = b_triangulation(3, Sign::minus);
    Triangulation bs = b;
    for (auto& d : bs.darts)
        if (d.mark.kind == MarkKind::loop)
            d.mark.index = 1 - d.mark.index;
    for (auto& v : bs.verts)
        if (v.kind == VertexKind::loop)
            v.index = 1 - v.index;
    std::swap(bs.loop_dart[0], bs.loop_dart[1]);
    std::swap(bs.loop_vertex[0], bs.loop_vertex[1]);
    validate(bs);
    CHECK(canonical_code(bs) != canonical_code(b));
}

TEST_CASE("code equality agrees with the rooted isomorphism oracle")
{
    std::mt19937_64 rng(17);
    ExploreConfig cfg;
    cfg.workers = 1;
    auto g = build_graph(a_triangulation(3, Sign::minus), cfg, "A");
    REQUIRE(g.node_count() == 15);
    for (int64_t i = 0; i < g.node_count(); ++i)
        for (int64_t j = 0; j < g.node_count(); ++j) {
            bool same_code =
                canonical_code(shuffled(g.reps[i], rng)) ==
                canonical_code(shuffled(g.reps[j], rng));
            CHECK(same_code == rooted_isomorphic(g.reps[i], g.reps[j]));
            CHECK(same_code == (i == j));
        }
}

TEST_CASE("equivalent classes have matching neighbor code multisets")
{
    std::mt19937_64 rng(23);
    Triangulation t = a_triangulation(4, Sign::plus);
    Triangulation u = shuffled(t, rng);
    REQUIRE(equivalent(t, u));
    auto codes = [](const Triangulation& x) {
        std::multiset<CanonicalCode> out;
        for (auto& [arc, nb] : neighbors(x))
            out.insert(canonical_code(nb));
        return out;
    };
    CHECK(codes(t) == codes(u));
}

TEST_CASE("mismatched surfaces are refused")
{
    CHECK_THROWS_AS(equivalent(zigzag(4), a_triangulation(4, Sign::minus)), Error);
    CHECK_THROWS_AS(equivalent(zigzag(4), zigzag(5)), Error);
}

TEST_CASE("hex form round trips")
{
    CanonicalCode c = canonical_code(b_triangulation(2, Sign::plus));
    CHECK(CanonicalCode::from_hex(c.hex()) == c);
}
