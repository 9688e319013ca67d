#include "flipmod/path.hpp"

#include <nlohmann/json.hpp>

#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/flip.hpp"

namespace flipmod {

void validate_path(const FlipSequence& path)
{
    validate(path.start);
    const Triangulation* cur = &path.start;
    for (size_t i = 0; i < path.steps.size(); ++i) {
        auto [next, arc] = flip(*cur, path.steps[i].arc);
        (void)arc;
        validate(next);
        if (!equivalent(next, path.steps[i].after))
            fail(errc::malformed_map,
                 "step " + std::to_string(i) + " does not reproduce the stored result");
        cur = &path.steps[i].after;
    }
}

FlipSequence reverse_path(const FlipSequence& path)
{
    FlipSequence out;
    out.start = path.end();
    const Triangulation* cur = &out.start;
    for (int i = path.length() - 1; i >= 0; --i) {
        // The forward step flipped `arc`, whose slot now holds the introduced
        // arc. Flipping the same slot undoes it.
        auto [back, slot] = flip(*cur, path.steps[i].arc);
        (void)slot;
        out.push(path.steps[i].arc, std::move(back));
        cur = &out.steps.back().after;
    }
    return out;
}

FlipSequence join_paths(const FlipSequence& head, const FlipSequence& tail)
{
    if (!equivalent(head.end(), tail.start))
        fail(errc::bad_argument, "paths do not meet");
    // Dart ids may differ between the two representatives of the meeting
    // point, but their canonical traversals align position by position.
    // Flips never renumber darts, so one alignment carries the whole tail.
    auto pos_tail = canonical_positions(tail.start);
    auto pos_head = canonical_positions(head.end());
    std::vector<int32_t> at_position(pos_head.size());
    for (size_t d = 0; d < pos_head.size(); ++d)
        at_position[pos_head[d]] = static_cast<int32_t>(d);
    auto translate = [&](int arc) { return at_position[pos_tail[arc]]; };

    FlipSequence out = head;
    Triangulation cur = head.end();
    for (const auto& st : tail.steps) {
        int arc = translate(st.arc);
        auto [next, slot] = flip(cur, arc);
        (void)slot;
        out.push(arc, next);
        cur = out.steps.back().after;
    }
    return out;
}

nlohmann::json path_to_json(const FlipSequence& path)
{
    nlohmann::json j;
    j["start"] = triangulation_to_json(path.start);
    auto& flips = j["flips"] = nlohmann::json::array();
    for (const auto& st : path.steps)
        flips.push_back(st.arc);
    return j;
}

FlipSequence path_from_json(const nlohmann::json& j)
{
    FlipSequence out;
    out.start = triangulation_from_json(j.at("start"));
    Triangulation cur = out.start;
    for (const auto& a : j.at("flips")) {
        auto [next, slot] = flip(cur, a.get<int>());
        (void)slot;
        out.push(a.get<int>(), next);
        cur = out.steps.back().after;
    }
    return out;
}

} // namespace flipmod
