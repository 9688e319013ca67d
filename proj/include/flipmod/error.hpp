#ifndef FLIPMOD_ERROR_HPP
#define FLIPMOD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flipmod {

enum class errc {
    invalid_spec,
    untriangulable,
    malformed_map,
    not_boundary,
    unknown_vertex,
    unflippable,
    too_few_vertices,
    not_adjacent,
    spec_mismatch,
    budget_exceeded,
    stuck,
    precondition_violated,
    obstructed,
    not_a_pod,
    not_adjacent_pods,
    io_error,
    bad_argument,
};

inline const char* errc_name(errc c)
{
    switch (c) {
    case errc::invalid_spec:          return "InvalidSpec";
    case errc::untriangulable:        return "Untriangulable";
    case errc::malformed_map:         return "MalformedMap";
    case errc::not_boundary:          return "NotBoundary";
    case errc::unknown_vertex:        return "UnknownVertex";
    case errc::unflippable:           return "Unflippable";
    case errc::too_few_vertices:      return "TooFewVertices";
    case errc::not_adjacent:          return "NotAdjacent";
    case errc::spec_mismatch:         return "SpecMismatch";
    case errc::budget_exceeded:       return "BudgetExceeded";
    case errc::stuck:                 return "Stuck";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::obstructed:            return "Obstructed";
    case errc::not_a_pod:             return "NotAPod";
    case errc::not_adjacent_pods:     return "NotAdjacentPods";
    case errc::io_error:              return "IoError";
    case errc::bad_argument:          return "BadArgument";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace flipmod

#endif
