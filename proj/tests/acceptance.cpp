// Acceptance suite: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "flipmod/verify.hpp"

using namespace flipmod;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const Suite& suite)
{
    bool pass = true;
    std::ostringstream detail;
    for (const auto& c : suite) {
        if (!c.pass && !c.skipped) {
            pass = false;
            detail << " [" << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "]";
        }
    }
    if (!pass)
        ++failures;
    std::printf("%s criterion %d: %s%s\n", pass ? "PASS" : "FAIL", number, title.c_str(),
                detail.str().c_str());
    for (const auto& c : suite)
        std::printf("    %s  %s%s%s\n", c.skipped ? "skip" : c.pass ? "ok  " : "FAIL",
                    c.name.c_str(), c.detail.empty() ? "" : "  ", c.detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    ExploreConfig cfg = ExploreConfig::from_env();
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    Suite small = verify_gamma_small(cfg);
    criterion(1, "single-class graph of the one-loop surface at n=1",
              Suite(small.begin(), small.begin() + 3));
    criterion(2, "four-class path at n=2 with doubly incident flips",
              Suite(small.begin() + 3, small.end()));
    criterion(3, "one-loop diameter law (floor(5n/2)-2) at n=3..6, realized by the far pair",
              verify_gamma_diameter(3, 6, cfg));
    criterion(4, "two-loop distances 3 and 7, first moduli graph diameter at least 5",
              verify_pi_distances(cfg));
    criterion(5, "polygon flip-graph at n=13: Catalan node count, diameter 16",
              verify_associahedron(13, cfg));
    criterion(6, "deletion laws: equal-or-adjacent, length identity, geodesic inequality",
              verify_deletion_laws(cfg));
    criterion(7, "family recursions under deletion and the displayed distance recursions",
              verify_family_recursions(cfg));
    criterion(8, "constructive upper bounds stay between exact distance and their caps",
              verify_constructive_bounds(cfg));
    criterion(9, "structural invariants and diameter monotonicity",
              verify_structural_invariants(cfg));
    criterion(10, "byte-identical builds across 1, 2, 8 workers",
              verify_determinism(cfg));

    std::printf("%d of 10 criteria passed in %.1fs\n", 10 - failures, elapsed());
    if (failures)
        std::printf("failing criteria reflect computed values that differ from the "
                    "stated ones; the distance and diameter reports above carry the "
                    "measured numbers\n");
    return failures == 0 ? 0 : 3;
}
