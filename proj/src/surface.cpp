#include "flipmod/surface.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "flipmod/error.hpp"

namespace flipmod {

TopologySpec TopologySpec::disc(int n)
{
    TopologySpec s;
    s.n = n;
    return s;
}

TopologySpec TopologySpec::gamma(int n)
{
    TopologySpec s;
    s.loops.push_back(BoundaryLoop{false, ""});
    s.n = n;
    return s;
}

TopologySpec TopologySpec::pi(int n)
{
    TopologySpec s;
    s.loops.push_back(BoundaryLoop{true, "-"});
    s.loops.push_back(BoundaryLoop{true, "+"});
    s.n = n;
    return s;
}

TopologySpec TopologySpec::parse(const std::string& text, int n)
{
    if (text == "disc" || text == "disk")
        return disc(n);
    if (text == "gamma")
        return gamma(n);
    if (text == "pi")
        return pi(n);
    if (!text.empty() && text.front() == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded())
            fail(errc::invalid_spec, "unparsable spec JSON");
        TopologySpec s = spec_from_json(j);
        if (n > 0)
            s.n = n;
        return s;
    }
    fail(errc::invalid_spec, "unknown surface name '" + text + "'");
}

void validate_spec(const TopologySpec& spec)
{
    if (spec.n < 1)
        fail(errc::invalid_spec, "bad n: need n >= 1");
    if (spec.genus < 0)
        fail(errc::invalid_spec, "bad genus");
    std::set<std::string> labels;
    for (const auto& l : spec.loops) {
        if (l.marked) {
            if (l.label.empty())
                fail(errc::invalid_spec, "marked loop without label");
            if (!labels.insert(l.label).second)
                fail(errc::invalid_spec, "duplicate marked label '" + l.label + "'");
        } else if (!l.label.empty()) {
            fail(errc::invalid_spec, "unmarked loop carries a label");
        }
    }
    for (const auto& p : spec.interior) {
        if (p.marked) {
            if (p.label.empty())
                fail(errc::invalid_spec, "marked interior point without label");
            if (!labels.insert(p.label).second)
                fail(errc::invalid_spec, "duplicate marked label '" + p.label + "'");
        } else if (!p.label.empty()) {
            fail(errc::invalid_spec, "unmarked interior point carries a label");
        }
    }
    // Arc counting rejects the degenerate untriangulable cases (disc with
    // n < 3 and so on).
    interior_arc_count(spec, spec.n);
}

int euler_characteristic(const TopologySpec& spec)
{
    return 2 - 2 * spec.genus - (1 + static_cast<int>(spec.loops.size()));
}

int interior_arc_count(const TopologySpec& spec, int n)
{
    if (n < 1)
        fail(errc::invalid_spec, "bad n: need n >= 1");
    int k = static_cast<int>(spec.loops.size());
    int i = static_cast<int>(spec.interior.size());
    int e = n + 4 * k + 3 * i + 6 * spec.genus - 3;
    if (e < 0)
        fail(errc::untriangulable,
             "no triangulation of this surface with n=" + std::to_string(n));
    return e;
}

nlohmann::json spec_to_json(const TopologySpec& spec)
{
    nlohmann::json j;
    j["genus"] = spec.genus;
    j["loops"] = nlohmann::json::array();
    for (const auto& l : spec.loops) {
        nlohmann::json e;
        e["marked"] = l.marked;
        if (l.marked)
            e["label"] = l.label;
        j["loops"].push_back(e);
    }
    j["interior"] = nlohmann::json::array();
    for (const auto& p : spec.interior) {
        nlohmann::json e;
        e["marked"] = p.marked;
        if (p.marked)
            e["label"] = p.label;
        j["interior"].push_back(e);
    }
    j["n"] = spec.n;
    return j;
}

TopologySpec spec_from_json(const nlohmann::json& j)
{
    TopologySpec s;
    s.genus = j.value("genus", 0);
    if (j.contains("loops"))
        for (const auto& e : j.at("loops")) {
            BoundaryLoop l;
            l.marked = e.value("marked", false);
            l.label = e.value("label", std::string());
            s.loops.push_back(l);
        }
    if (j.contains("interior"))
        for (const auto& e : j.at("interior")) {
            InteriorPoint p;
            p.marked = e.value("marked", false);
            p.label = e.value("label", std::string());
            s.interior.push_back(p);
        }
    s.n = j.value("n", 1);
    return s;
}

std::string spec_name(const TopologySpec& spec)
{
    TopologySpec bare = spec;
    bare.n = 0;
    if (bare == TopologySpec::disc(0))
        return "disc";
    if (bare == TopologySpec::gamma(0))
        return "gamma";
    if (bare == TopologySpec::pi(0))
        return "pi";
    return spec_to_json(spec).dump();
}

} // namespace flipmod
