#ifndef FLIPMOD_PATH_HPP
#define FLIPMOD_PATH_HPP

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flipmod/trimap.hpp"

namespace flipmod {

/// A walk in the flip-graph: a start triangulation plus the arc flipped at
/// each step and the triangulation it produced.
struct FlipSequence {
    Triangulation start;
    struct Step {
        int arc;             // arc id in the previous triangulation
        Triangulation after; // result of the flip
    };
    std::vector<Step> steps;

    int length() const { return static_cast<int>(steps.size()); }
    const Triangulation& end() const { return steps.empty() ? start : steps.back().after; }
    const Triangulation& at(int i) const { return i == 0 ? start : steps[i - 1].after; }

    void push(int arc, Triangulation after)
    {
        steps.push_back(Step{arc, std::move(after)});
    }
};

/// Re-runs every flip and checks each step reproduces the stored result
/// up to canonical equivalence.
void validate_path(const FlipSequence& path);

/// The same walk traversed backwards. Each step flips the arc the forward
/// step introduced (flip reuses the arc's slot, so ids carry over).
FlipSequence reverse_path(const FlipSequence& path);

/// Concatenation; `tail.start` must be equivalent to `head`'s end.
FlipSequence join_paths(const FlipSequence& head, const FlipSequence& tail);

nlohmann::json path_to_json(const FlipSequence& path);
FlipSequence path_from_json(const nlohmann::json& j);

} // namespace flipmod

#endif
