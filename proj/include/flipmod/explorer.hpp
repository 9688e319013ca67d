#ifndef FLIPMOD_EXPLORER_HPP
#define FLIPMOD_EXPLORER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flipmod/canon.hpp"
#include "flipmod/path.hpp"
#include "flipmod/trimap.hpp"

namespace flipmod {

struct ExploreConfig {
    int workers = 0;              // 0: use every hardware thread
    int64_t max_nodes = 2000000;  // hard budget for closures and searches
    uint64_t seed = 0x5eed5eed;   // RNG seed for sampled suites

    static ExploreConfig from_env();
};

/// The explored modular flip-graph: one node per canonical class, one
/// stored representative per node, sorted adjacency lists.
struct FlipGraph {
    TopologySpec spec; // includes n
    std::vector<CanonicalCode> codes;
    std::vector<Triangulation> reps;
    std::vector<std::vector<int32_t>> adj;
    std::string seed_family;

    int64_t node_count() const { return static_cast<int64_t>(codes.size()); }
    int64_t edge_count() const;
    int find(const CanonicalCode& c) const; // -1 when absent
    void rebuild_index();

private:
    std::vector<int32_t> sorted_; // node ids ordered by code
};

/// Full closure under flips modulo canonical equivalence, breadth-first
/// from the seed. Node numbering is discovery order under in-order frontier
/// expansion and does not depend on the worker count.
FlipGraph build_graph(const Triangulation& seed, const ExploreConfig& cfg,
                      std::string seed_family = "");

/// Plain single-threaded closure with the same numbering; reference
/// implementation for tests and benchmarks.
FlipGraph build_graph_reference(const Triangulation& seed, int64_t max_nodes,
                                std::string seed_family = "");

/// Exact distance between two triangulations in the modular flip-graph,
/// via bidirectional search; no prebuilt graph needed. Also returns one
/// geodesic witness.
std::pair<int, FlipSequence> distance(const Triangulation& U, const Triangulation& V,
                                      const ExploreConfig& cfg);

/// BFS distances from one node over the built graph.
std::vector<int32_t> bfs_distances(const FlipGraph& g, int source);

int eccentricity(const FlipGraph& g, int node);

struct DiameterResult {
    int diameter = 0;
    int from = 0, to = 0;
    int64_t sweeps = 0; // BFS runs spent
};

/// Exact diameter by eccentricity-bound pruning over the BFS levels of a
/// far-away root; falls back to scanning whole levels when bounds stay
/// apart.
DiameterResult diameter(const FlipGraph& g, const ExploreConfig& cfg);

void save_graph(const FlipGraph& g, const std::string& path);
FlipGraph load_graph(const std::string& path);
nlohmann::json graph_to_json(const FlipGraph& g);
FlipGraph graph_from_json(const nlohmann::json& j);
void export_dot(const FlipGraph& g, const std::string& path);

} // namespace flipmod

#endif
