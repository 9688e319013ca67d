#ifndef FLIPMOD_FAMILIES_HPP
#define FLIPMOD_FAMILIES_HPP

#include <string>
#include <vector>

#include "flipmod/trimap.hpp"

namespace flipmod {

enum class Sign { minus, plus };

/// Triangulation of the disc whose diagonals form the alternating zigzag
/// path from a_n.
Triangulation zigzag(int n);

/// Disc triangulation with all diagonals at one vertex.
Triangulation polygon_fan(int n, int apex);

/// Disc triangulation from an explicit list of diagonals (endpoints are
/// privileged indices).
Triangulation disc_from_diagonals(int n, const std::vector<std::pair<int, int>>& diagonals);

/// Which copy of the boundary-parallel arc closes the quadrilateral left
/// around the new loop when an ear is pierced: the copy parallel to the
/// boundary arc entering the ear apex, or the one leaving it.
enum class PierceSide { before, after };

/// Replaces the ear at a_q by a boundary loop hanging at a_q: a loop arc at
/// a_q around the new hole, a doubled arc from the loop vertex to a_q, and
/// one boundary-parallel arc on the chosen side. The result lives on
/// `target` (same as T.spec plus one loop at `loop_index`).
Triangulation pierce_ear(const Triangulation& T, int q, PierceSide side,
                         TopologySpec target, int loop_index);

/// The far-apart pair on the surface with one boundary loop.
Triangulation a_triangulation(int n, Sign sign);

/// The far-apart pair on the surface with two marked boundary loops.
Triangulation b_triangulation(int n, Sign sign);

/// Triangulation of the one-loop surface with every interior arc incident
/// to the loop vertex; u names the privileged corner of the loop's face.
Triangulation gamma_star(int n, int u);

/// Parses "Z:n", "A:n:+|-", "B:n:+|-", "star:n:u", "fan:n:apex".
Triangulation parse_family(const std::string& text);

} // namespace flipmod

#endif
