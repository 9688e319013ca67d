#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <algorithm>

#include <nlohmann/json.hpp>

#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/explorer.hpp"
#include "flipmod/families.hpp"
#include "flipmod/flip.hpp"

using namespace flipmod;

namespace {

ExploreConfig quiet()
{
    ExploreConfig cfg;
    cfg.workers = 2;
    return cfg;
}

} // namespace

TEST_CASE("closures of the small graphs")
{
    auto cfg = quiet();
    auto g1 = build_graph(a_triangulation(1, Sign::minus), cfg, "A:1:-");
    CHECK(g1.node_count() == 1);
    CHECK(g1.edge_count() == 0);

    auto g2 = build_graph(a_triangulation(2, Sign::minus), cfg, "A:2:-");
    CHECK(g2.node_count() == 4);
    CHECK(g2.edge_count() == 3);

    auto hexagon = build_graph(zigzag(6), cfg, "Z:6");
    CHECK(hexagon.node_count() == 14); // Catalan number for the hexagon
    CHECK(diameter(hexagon, cfg).diameter == 4);
}

TEST_CASE("graphs are simple and closed under flips")
{
    auto cfg = quiet();
    auto g = build_graph(a_triangulation(3, Sign::minus), cfg, "A");
    for (int64_t u = 0; u < g.node_count(); ++u) {
        for (size_t i = 0; i < g.adj[u].size(); ++i) {
            CHECK(g.adj[u][i] != u);
            if (i > 0)
                CHECK(g.adj[u][i - 1] < g.adj[u][i]);
        }
        for (auto& [arc, nb] : neighbors(g.reps[u])) {
            int v = g.find(canonical_code(nb));
            CHECK(v >= 0);
            if (v != u)
                CHECK(std::binary_search(g.adj[u].begin(), g.adj[u].end(), v));
        }
    }
}

TEST_CASE("eccentricities on the four-node path")
{
    auto cfg = quiet();
    auto g = build_graph(a_triangulation(2, Sign::minus), cfg, "A:2:-");
    std::multiset<int> eccs;
    for (int i = 0; i < g.node_count(); ++i)
        eccs.insert(eccentricity(g, i));
    CHECK(eccs == std::multiset<int>{2, 2, 3, 3});
    CHECK(diameter(g, cfg).diameter == 3);
}

TEST_CASE("diameter matches a full sweep")
{
    auto cfg = quiet();
    for (auto seed : {zigzag(7), a_triangulation(3, Sign::plus)}) {
        auto g = build_graph(seed, cfg, "x");
        int brute = 0;
        for (int i = 0; i < g.node_count(); ++i)
            brute = std::max(brute, eccentricity(g, i));
        CHECK(diameter(g, cfg).diameter == brute);
    }
}

TEST_CASE("parallel build equals the reference build")
{
    auto cfg = quiet();
    cfg.workers = 4;
    auto par = build_graph(a_triangulation(3, Sign::minus), cfg, "A:3:-");
    auto ref = build_graph_reference(a_triangulation(3, Sign::minus), cfg.max_nodes, "A:3:-");
    CHECK(graph_to_json(par).dump() == graph_to_json(ref).dump());
}

TEST_CASE("distance and witness")
{
    auto cfg = quiet();
    Triangulation t = gamma_star(4, 1);
    auto [zero, wz] = distance(t, t, cfg);
    CHECK(zero == 0);
    CHECK(wz.length() == 0);

    auto [d, w] = distance(gamma_star(4, 1), gamma_star(4, 3), cfg);
    CHECK(d == 2);
    validate_path(w);
    CHECK(equivalent(w.start, gamma_star(4, 1)));
    CHECK(equivalent(w.end(), gamma_star(4, 3)));

    // witnesses agree with distances in the built graph
    auto g = build_graph(a_triangulation(3, Sign::minus), cfg, "A");
    auto dm = bfs_distances(g, 0);
    for (int i = 0; i < g.node_count(); ++i) {
        auto [di, wi] = distance(g.reps[0], g.reps[i], cfg);
        CHECK(di == dm[i]);
        CHECK(wi.length() == di);
    }
}

TEST_CASE("node budget fails loudly")
{
    auto cfg = quiet();
    cfg.max_nodes = 3;
    CHECK_THROWS_AS(build_graph(zigzag(8), cfg, "Z"), Error);
}

TEST_CASE("save, load, dot")
{
    auto cfg = quiet();
    auto g = build_graph(a_triangulation(2, Sign::minus), cfg, "A:2:-");
    std::string path = "test_graph_tmp.json";
    save_graph(g, path);
    auto h = load_graph(path);
    std::string again = path + "2";
    save_graph(h, again);
    std::ifstream f1(path), f2(again);
    std::string s1((std::istreambuf_iterator<char>(f1)), {});
    std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(s1 == s2);
    CHECK(h.node_count() == g.node_count());

    std::string dot = "test_graph_tmp.dot";
    export_dot(h, dot);
    std::ifstream fd(dot);
    std::string body((std::istreambuf_iterator<char>(fd)), {});
    CHECK(std::count(body.begin(), body.end(), '\n') == 2 + 4 + 3); // header/footer + nodes + edges
    std::remove(path.c_str());
    std::remove(again.c_str());
    std::remove(dot.c_str());
}

TEST_CASE("loading a tampered graph is refused")
{
    auto cfg = quiet();
    auto g = build_graph(a_triangulation(2, Sign::minus), cfg, "A:2:-");
    auto j = graph_to_json(g);
    j["n"] = 7;
    CHECK_THROWS_AS(graph_from_json(j), Error);
    auto j2 = graph_to_json(g);
    j2["nodes"][0] = "00";
    CHECK_THROWS_AS(graph_from_json(j2), Error);
}
