#ifndef FLIPMOD_VERIFY_HPP
#define FLIPMOD_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "flipmod/explorer.hpp"

namespace flipmod {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

using Suite = std::vector<CheckResult>;

/// Diameter law claimed for the one-loop surface.
int gamma_diameter_formula(int n);

Suite verify_gamma_small(const ExploreConfig& cfg);
Suite verify_gamma_diameter(int lo, int hi, const ExploreConfig& cfg);
Suite verify_pi_distances(const ExploreConfig& cfg);
Suite verify_associahedron(int n, const ExploreConfig& cfg);
Suite verify_deletion_laws(const ExploreConfig& cfg);
Suite verify_family_recursions(const ExploreConfig& cfg);
Suite verify_constructive_bounds(const ExploreConfig& cfg);
Suite verify_structural_invariants(const ExploreConfig& cfg);
Suite verify_projection_disc(int lo, int hi, const ExploreConfig& cfg);
Suite verify_determinism(const ExploreConfig& cfg);

/// Runs a named suite; "all" chains every suite in acceptance order.
Suite run_suite(const std::string& name, int lo, int hi, const ExploreConfig& cfg);

/// Prints one PASS/FAIL/SKIP line per check; returns true when none failed.
bool report(const Suite& suite, std::ostream& out);

} // namespace flipmod

#endif
