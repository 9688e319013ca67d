#ifndef FLIPMOD_BOUNDS_HPP
#define FLIPMOD_BOUNDS_HPP

#include <optional>
#include <vector>

#include "flipmod/explorer.hpp"
#include "flipmod/path.hpp"
#include "flipmod/trimap.hpp"

namespace flipmod {

/// Flips a one-loop-surface triangulation until every interior arc touches
/// the loop vertex. Needs at most n-1 flips; ends in a star form.
FlipSequence make_all_incident(const Triangulation& T);

/// Valid path between two one-loop-surface triangulations of length at
/// most floor(5n/2) - 2: both endpoints are starred, then the star corner
/// walks the short way around.
FlipSequence gamma_upper_path(const Triangulation& U, const Triangulation& V);

/// Flips each triangulation until it has an ear at a_q; at most four flips
/// in total, provided the interior degrees of a_q sum to at most 4.
std::pair<FlipSequence, FlipSequence> ear_pair_normalize(const Triangulation& U,
                                                         const Triangulation& V, int q);

/// Path built by repeatedly earing off a low-degree privileged vertex on
/// both sides, finishing with an exact geodesic once at most base_cutoff
/// vertices remain unfrozen. Length is at most 4n plus the base distance.
FlipSequence general_upper_path(const Triangulation& U, const Triangulation& V,
                                int base_cutoff, const ExploreConfig& cfg);

/// A pod: a maximal fan of parallel arcs from a center vertex to one
/// privileged anchor, each consecutive pair closing a triangle with a loop
/// that encloses a pea. Freshly built surfaces have single-triangle pods;
/// joining pods grows the chain.
struct Pod {
    int face;               // smallest face key of the chain; stable handle
    int center;             // vertex id of the hub
    int anchor;             // privileged index the pod hangs from
    int lead_ccw;           // outermost dart crossed when moving toward anchor+1
    int lead_cw;            // toward anchor-1
    std::vector<int> faces; // chain of pod triangles
};

std::vector<Pod> find_pods(const Triangulation& T);

enum class Turn { cw, ccw };

/// Moves a pod's anchor one privileged vertex over with a single flip.
/// On a chained pod the flip carries its outermost pea.
std::pair<Triangulation, int> move_pod(const Triangulation& T, const Pod& pod, Turn dir);

/// Joins two pods that sit next to each other around the same hub with a
/// single flip; the result encloses both peas.
std::pair<Triangulation, int> join_pods(const Triangulation& T, const Pod& first,
                                        const Pod& second);

/// Number of boundary loops enclosed by the pod.
int pod_multiplicity(const Triangulation& T, const Pod& pod);

} // namespace flipmod

#endif
