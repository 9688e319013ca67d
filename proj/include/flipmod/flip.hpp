#ifndef FLIPMOD_FLIP_HPP
#define FLIPMOD_FLIP_HPP

#include <utility>
#include <vector>

#include "flipmod/trimap.hpp"

namespace flipmod {

/// Interior arcs whose two sides lie in two distinct faces, ascending.
std::vector<int> flippable_arcs(const Triangulation& T);

bool is_flippable(const Triangulation& T, int arc);

/// Exchanges the diagonal of the quadrilateral formed by the two faces at
/// the arc. The new arc reuses the flipped arc's dart slots, so the returned
/// id equals the input id.
std::pair<Triangulation, int> flip(const Triangulation& T, int arc);

/// One entry per flippable arc, ascending by arc id.
std::vector<std::pair<int, Triangulation>> neighbors(const Triangulation& T);

} // namespace flipmod

#endif
