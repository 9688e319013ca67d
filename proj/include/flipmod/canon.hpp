#ifndef FLIPMOD_CANON_HPP
#define FLIPMOD_CANON_HPP

#include <cstdint>
#include <string>

#include "flipmod/trimap.hpp"

namespace flipmod {

/// Canonical identifier of a triangulation's class in the modular flip-graph.
/// Equal iff the triangulations are related by an orientation-preserving
/// homeomorphism fixing the privileged boundary pointwise and every marked
/// point individually. Totally ordered, hashable, hex-printable.
struct CanonicalCode {
    std::string bytes;

    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;

    std::string hex() const;
    static CanonicalCode from_hex(const std::string& h);
};

struct CodeHash {
    size_t operator()(const CanonicalCode& c) const noexcept
    {
        return std::hash<std::string>()(c.bytes);
    }
};

CanonicalCode canonical_code(const Triangulation& T);

/// canonical_code equality, with a spec compatibility check.
bool equivalent(const Triangulation& a, const Triangulation& b);

/// Independent oracle for tests: attempts to grow a root-preserving dart
/// bijection between the two maps and checks labels along the way.
bool rooted_isomorphic(const Triangulation& a, const Triangulation& b);

} // namespace flipmod

#endif
