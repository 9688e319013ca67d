#ifndef FLIPMOD_CONTRACT_HPP
#define FLIPMOD_CONTRACT_HPP

#include "flipmod/path.hpp"
#include "flipmod/trimap.hpp"

namespace flipmod {

/// Deletes privileged vertex a_p by displacing it along alpha_p onto the
/// next boundary vertex and dropping the arc that becomes duplicated.
/// Labels above p shift down by one. Result is a triangulation with n-1
/// privileged vertices.
Triangulation delete_vertex(const Triangulation& T, int p);

/// True iff the deletions of the two triangulations at a_p coincide.
/// U and V must differ by a single flip.
bool flip_incident_to(const Triangulation& U, const Triangulation& V, int p);

/// Number of steps along the path whose flip is incident to alpha_p.
int incident_flip_count(const FlipSequence& path, int p);

/// Deletes a_p from every triangulation along the path and removes the
/// steps that collapse; the result has length k - incident_flip_count.
FlipSequence project_path(const FlipSequence& path, int p);

} // namespace flipmod

#endif
