// Compares the serial reference closure against the layered parallel one
// on a couple of mid-sized graphs.
#include <chrono>
#include <cstdio>
#include <functional>

#include "flipmod/explorer.hpp"
#include "flipmod/families.hpp"

using namespace flipmod;

namespace {

double time_of(const std::function<FlipGraph()>& f, int64_t& nodes)
{
    auto t0 = std::chrono::steady_clock::now();
    FlipGraph g = f();
    nodes = g.node_count();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench(const char* name, const Triangulation& seed)
{
    ExploreConfig cfg;
    int64_t nodes = 0;
    double serial = time_of(
        [&] { return build_graph_reference(seed, cfg.max_nodes, name); }, nodes);
    std::printf("%-10s %8lld nodes | reference %7.3fs", name, (long long)nodes, serial);
    for (int workers : {1, 2, 4, 8}) {
        ExploreConfig c = cfg;
        c.workers = workers;
        int64_t k = 0;
        double t = time_of([&] { return build_graph(seed, c, name); }, k);
        std::printf(" | %dw %7.3fs (x%.2f)", workers, t, serial / t);
    }
    std::printf("\n");

    // eccentricity sweep comparison on the built graph
    FlipGraph g = build_graph(seed, cfg, name);
    for (int workers : {1, 8}) {
        ExploreConfig c = cfg;
        c.workers = workers;
        auto t0 = std::chrono::steady_clock::now();
        auto d = diameter(g, c);
        double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%-10s diameter=%d sweeps=%lld | %dw %7.3fs\n", name, d.diameter,
                    (long long)d.sweeps, workers, t);
    }
}

} // namespace

int main()
{
    bench("gamma6", a_triangulation(6, Sign::minus));
    bench("gamma7", a_triangulation(7, Sign::minus));
    bench("disc12", zigzag(12));
    return 0;
}
