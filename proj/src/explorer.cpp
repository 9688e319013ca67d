#include "flipmod/explorer.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <queue>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "flipmod/error.hpp"
#include "flipmod/flip.hpp"

namespace flipmod {

ExploreConfig ExploreConfig::from_env()
{
    ExploreConfig cfg;
    if (const char* w = std::getenv("FLIPMOD_WORKERS"))
        cfg.workers = std::atoi(w);
    if (const char* m = std::getenv("FLIPMOD_MAX_NODES"))
        cfg.max_nodes = std::atoll(m);
    if (const char* s = std::getenv("FLIPMOD_SEED"))
        cfg.seed = std::strtoull(s, nullptr, 0);
    return cfg;
}

int64_t FlipGraph::edge_count() const
{
    int64_t twice = 0;
    for (const auto& a : adj)
        twice += static_cast<int64_t>(a.size());
    return twice / 2;
}

int FlipGraph::find(const CanonicalCode& c) const
{
    auto it = std::lower_bound(
        sorted_.begin(), sorted_.end(), c,
        [&](int32_t i, const CanonicalCode& x) { return codes[i] < x; });
    if (it != sorted_.end() && codes[*it] == c)
        return *it;
    return -1;
}

void FlipGraph::rebuild_index()
{
    sorted_.resize(codes.size());
    for (size_t i = 0; i < sorted_.size(); ++i)
        sorted_[i] = static_cast<int32_t>(i);
    std::sort(sorted_.begin(), sorted_.end(),
              [&](int32_t a, int32_t b) { return codes[a] < codes[b]; });
}

namespace {

int effective_workers(const ExploreConfig& cfg)
{
#ifdef _OPENMP
    int w = cfg.workers;
    if (w <= 0)
        w = omp_get_max_threads();
    return std::max(1, w);
#else
    (void)cfg;
    return 1;
#endif
}

struct Expansion {
    CanonicalCode code;
    Triangulation rep;
};

std::vector<Expansion> expand_node(const Triangulation& rep)
{
    std::vector<Expansion> out;
    for (int a : flippable_arcs(rep)) {
        Triangulation t = flip(rep, a).first;
        CanonicalCode c = canonical_code(t);
        out.push_back(Expansion{std::move(c), renumber_canonical(t)});
    }
    return out;
}

} // namespace

static FlipGraph build_graph_core(const Triangulation& seed, int64_t max_nodes,
                                  int workers, std::string seed_family)
{
    validate(seed);
    FlipGraph g;
    g.spec = seed.spec;
    g.seed_family = std::move(seed_family);

    std::unordered_map<CanonicalCode, int32_t, CodeHash> index;
    Triangulation root = renumber_canonical(seed);
    g.codes.push_back(canonical_code(root));
    g.reps.push_back(std::move(root));
    index.emplace(g.codes[0], 0);
    g.adj.emplace_back();

    std::vector<int32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::vector<Expansion>> results(frontier.size());
        const int chunk = static_cast<int>(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
        for (int i = 0; i < chunk; ++i)
            results[i] = expand_node(g.reps[frontier[i]]);
        (void)workers;

        std::vector<int32_t> next_frontier;
        for (int i = 0; i < chunk; ++i) {
            int32_t u = frontier[i];
            for (auto& ex : results[i]) {
                int32_t v;
                auto it = index.find(ex.code);
                if (it == index.end()) {
                    v = static_cast<int32_t>(g.codes.size());
                    if (v >= max_nodes)
                        fail(errc::budget_exceeded,
                             "node budget " + std::to_string(max_nodes) + " exhausted");
                    index.emplace(ex.code, v);
                    g.codes.push_back(std::move(ex.code));
                    g.reps.push_back(std::move(ex.rep));
                    g.adj.emplace_back();
                    next_frontier.push_back(v);
                } else {
                    v = it->second;
                }
                if (v != u) {
                    g.adj[u].push_back(v);
                    g.adj[v].push_back(u);
                }
            }
        }
        frontier = std::move(next_frontier);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    g.rebuild_index();
    return g;
}

FlipGraph build_graph(const Triangulation& seed, const ExploreConfig& cfg,
                      std::string seed_family)
{
    return build_graph_core(seed, cfg.max_nodes, effective_workers(cfg),
                            std::move(seed_family));
}

FlipGraph build_graph_reference(const Triangulation& seed, int64_t max_nodes,
                                std::string seed_family)
{
    // Straightforward queue BFS; kept independent of the layered parallel
    // core so the two can be compared.
    validate(seed);
    FlipGraph g;
    g.spec = seed.spec;
    g.seed_family = std::move(seed_family);

    std::unordered_map<CanonicalCode, int32_t, CodeHash> index;
    Triangulation root = renumber_canonical(seed);
    g.codes.push_back(canonical_code(root));
    g.reps.push_back(std::move(root));
    index.emplace(g.codes[0], 0);
    g.adj.emplace_back();

    std::queue<int32_t> q;
    q.push(0);
    while (!q.empty()) {
        int32_t u = q.front();
        q.pop();
        for (auto& ex : expand_node(g.reps[u])) {
            int32_t v;
            auto it = index.find(ex.code);
            if (it == index.end()) {
                v = static_cast<int32_t>(g.codes.size());
                if (v >= max_nodes)
                    fail(errc::budget_exceeded,
                         "node budget " + std::to_string(max_nodes) + " exhausted");
                index.emplace(ex.code, v);
                g.codes.push_back(std::move(ex.code));
                g.reps.push_back(std::move(ex.rep));
                g.adj.emplace_back();
                q.push(v);
            } else {
                v = it->second;
            }
            if (v != u) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
        }
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    g.rebuild_index();
    return g;
}

std::vector<int32_t> bfs_distances(const FlipGraph& g, int source)
{
    std::vector<int32_t> dist(g.codes.size(), -1);
    std::vector<int32_t> queue;
    queue.reserve(g.codes.size());
    dist[source] = 0;
    queue.push_back(source);
    for (size_t i = 0; i < queue.size(); ++i) {
        int32_t u = queue[i];
        for (int32_t v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

int eccentricity(const FlipGraph& g, int node)
{
    auto dist = bfs_distances(g, node);
    int e = 0;
    for (int32_t d : dist) {
        if (d < 0)
            fail(errc::malformed_map, "graph is not connected");
        e = std::max(e, static_cast<int>(d));
    }
    return e;
}

DiameterResult diameter(const FlipGraph& g, const ExploreConfig& cfg)
{
    DiameterResult r;
    if (g.codes.size() <= 1)
        return r;

    // double sweep for a good root, then scan level sets outside in
    auto d0 = bfs_distances(g, 0);
    int far = 0;
    for (int i = 0; i < static_cast<int>(d0.size()); ++i)
        if (d0[i] > d0[far])
            far = i;
    auto dr = bfs_distances(g, far);
    r.sweeps = 2;

    int depth = 0, opposite = far;
    for (int i = 0; i < static_cast<int>(dr.size()); ++i) {
        if (dr[i] < 0)
            fail(errc::malformed_map, "graph is not connected");
        if (dr[i] > depth) {
            depth = dr[i];
            opposite = i;
        }
    }
    r.diameter = depth;
    r.from = far;
    r.to = opposite;

    std::vector<std::vector<int32_t>> levels(depth + 1);
    for (int i = 0; i < static_cast<int>(dr.size()); ++i)
        levels[dr[i]].push_back(i);

    const int workers = effective_workers(cfg);
    for (int lev = depth; lev >= 1; --lev) {
        if (r.diameter >= 2 * lev)
            break; // pairs among the unprocessed levels cannot beat this
        const auto& batch = levels[lev];
        std::vector<int> ecc(batch.size()), target(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
        for (int i = 0; i < static_cast<int>(batch.size()); ++i) {
            auto dist = bfs_distances(g, batch[i]);
            int e = 0, t = batch[i];
            for (int j = 0; j < static_cast<int>(dist.size()); ++j)
                if (dist[j] > e) {
                    e = dist[j];
                    t = j;
                }
            ecc[i] = e;
            target[i] = t;
        }
        (void)workers;
        r.sweeps += static_cast<int64_t>(batch.size());
        for (size_t i = 0; i < batch.size(); ++i)
            if (ecc[i] > r.diameter) {
                r.diameter = ecc[i];
                r.from = batch[i];
                r.to = target[i];
            }
    }
    return r;
}

namespace {

struct SearchSide {
    std::unordered_map<CanonicalCode, int32_t, CodeHash> index;
    std::vector<Triangulation> reps;
    std::vector<int32_t> parent;
    std::vector<int32_t> depth;
    std::vector<int32_t> frontier;
};

std::vector<const Triangulation*> chain_to_root(const SearchSide& s, int32_t i)
{
    std::vector<const Triangulation*> out;
    for (; i >= 0; i = s.parent[i])
        out.push_back(&s.reps[i]);
    return out;
}

void append_walk(FlipSequence& path, const std::vector<const Triangulation*>& stops)
{
    // stops are consecutive class representatives; realize each hop as a flip
    for (size_t i = 1; i < stops.size(); ++i) {
        CanonicalCode want = canonical_code(*stops[i]);
        const Triangulation& from = path.end();
        bool ok = false;
        for (int a : flippable_arcs(from)) {
            auto [next, slot] = flip(from, a);
            (void)slot;
            if (canonical_code(next) == want) {
                path.push(a, std::move(next));
                ok = true;
                break;
            }
        }
        if (!ok)
            fail(errc::malformed_map, "witness reconstruction lost a hop");
    }
}

} // namespace

std::pair<int, FlipSequence> distance(const Triangulation& U, const Triangulation& V,
                                      const ExploreConfig& cfg)
{
    if (U.spec != V.spec)
        fail(errc::spec_mismatch, "triangulations live on different surfaces");
    FlipSequence path;
    path.start = U;
    if (equivalent(U, V))
        return {0, std::move(path)};

    SearchSide side[2];
    for (int s = 0; s < 2; ++s) {
        const Triangulation& t = s == 0 ? U : V;
        side[s].reps.push_back(renumber_canonical(t));
        side[s].parent.push_back(-1);
        side[s].depth.push_back(0);
        side[s].index.emplace(canonical_code(t), 0);
        side[s].frontier.push_back(0);
    }

    int64_t stored = 2;
    while (true) {
        int s = side[0].frontier.size() <= side[1].frontier.size() ? 0 : 1;
        if (side[s].frontier.empty())
            fail(errc::malformed_map, "flip-graph is not connected");
        // Expand one full layer; among the meetings it produces, the
        // shortest is an exact geodesic.
        int best_len = -1;
        int32_t best_mine = -1, best_other = -1;
        std::vector<int32_t> next_frontier;
        for (int32_t u : side[s].frontier) {
            for (int a : flippable_arcs(side[s].reps[u])) {
                Triangulation t = flip(side[s].reps[u], a).first;
                CanonicalCode c = canonical_code(t);
                if (side[s].index.count(c))
                    continue;
                auto other = side[1 - s].index.find(c);
                int32_t id = static_cast<int32_t>(side[s].reps.size());
                side[s].reps.push_back(renumber_canonical(t));
                side[s].parent.push_back(u);
                side[s].depth.push_back(side[s].depth[u] + 1);
                side[s].index.emplace(std::move(c), id);
                if (++stored > cfg.max_nodes)
                    fail(errc::budget_exceeded,
                         "node budget " + std::to_string(cfg.max_nodes) + " exhausted");
                if (other != side[1 - s].index.end()) {
                    int len = side[s].depth[id] + side[1 - s].depth[other->second];
                    if (best_len < 0 || len < best_len) {
                        best_len = len;
                        best_mine = id;
                        best_other = other->second;
                    }
                } else {
                    next_frontier.push_back(id);
                }
            }
        }
        if (best_len >= 0) {
            auto fwd = chain_to_root(side[0], s == 0 ? best_mine : best_other);
            std::reverse(fwd.begin(), fwd.end());
            auto bwd = chain_to_root(side[1], s == 1 ? best_mine : best_other);
            append_walk(path, fwd);
            append_walk(path, bwd);
            return {path.length(), std::move(path)};
        }
        side[s].frontier = std::move(next_frontier);
    }
}

nlohmann::json graph_to_json(const FlipGraph& g)
{
    nlohmann::json j;
    j["spec"] = spec_to_json(g.spec);
    j["n"] = g.spec.n;
    auto& nodes = j["nodes"] = nlohmann::json::array();
    for (const auto& c : g.codes)
        nodes.push_back(c.hex());
    auto& reps = j["reps"] = nlohmann::json::array();
    for (const auto& r : g.reps)
        reps.push_back(triangulation_to_json(r).at("darts"));
    auto& adj = j["adj"] = nlohmann::json::array();
    for (const auto& a : g.adj)
        adj.push_back(a);
    j["meta"] = nlohmann::json{{"seed_family", g.seed_family},
                                       {"nodes", g.node_count()},
                                       {"edges", g.edge_count()}};
    return j;
}

FlipGraph graph_from_json(const nlohmann::json& j)
{
    FlipGraph g;
    g.spec = spec_from_json(j.at("spec"));
    if (j.at("n").get<int>() != g.spec.n)
        fail(errc::spec_mismatch, "graph n does not match its spec");
    for (const auto& h : j.at("nodes"))
        g.codes.push_back(CanonicalCode::from_hex(h.get<std::string>()));
    for (const auto& darts : j.at("reps")) {
        nlohmann::json t;
        t["spec"] = spec_to_json(g.spec);
        t["darts"] = darts;
        g.reps.push_back(triangulation_from_json(t));
    }
    for (const auto& a : j.at("adj"))
        g.adj.push_back(a.get<std::vector<int32_t>>());
    if (j.contains("meta"))
        g.seed_family = j.at("meta").value("seed_family", std::string());
    if (g.codes.size() != g.reps.size() || g.codes.size() != g.adj.size())
        fail(errc::spec_mismatch, "graph tables disagree in size");
    for (size_t i = 0; i < g.reps.size(); ++i)
        if (canonical_code(g.reps[i]) != g.codes[i])
            fail(errc::spec_mismatch, "stored code does not match its representative");
    g.rebuild_index();
    return g;
}

void save_graph(const FlipGraph& g, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(errc::io_error, "cannot open '" + path + "' for writing");
    out << graph_to_json(g).dump(1, '\t') << "\n";
    if (!out)
        fail(errc::io_error, "write to '" + path + "' failed");
}

FlipGraph load_graph(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::io_error, "cannot open '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded())
        fail(errc::io_error, "'" + path + "' is not valid JSON");
    return graph_from_json(j);
}

void export_dot(const FlipGraph& g, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(errc::io_error, "cannot open '" + path + "' for writing");
    out << "graph flipmod {\n";
    for (int64_t i = 0; i < g.node_count(); ++i)
        out << "  " << i << " [label=\"" << g.codes[i].hex().substr(0, 12) << "\"];\n";
    for (int64_t u = 0; u < g.node_count(); ++u)
        for (int32_t v : g.adj[u])
            if (u < v)
                out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    if (!out)
        fail(errc::io_error, "write to '" + path + "' failed");
}

} // namespace flipmod
