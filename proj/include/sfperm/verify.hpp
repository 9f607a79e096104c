#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfperm/permutation.hpp"

namespace sfperm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Replays the constructive fixtures and property suites end to end:
// the m=2 worked example, cruciality of the built permutations up to max_m,
// the not-S-crucial witnesses, the special square-free seed family, the
// seeded randomized construction/wrapper suites, the small counterexample
// fixtures, the S-crucial equivalence and interior-square sweeps up to
// max_n, and the emptiness of the small-length crucial search.
VerifyReport verify_paper(int max_m, int max_n, std::uint64_t seed = 20240817);

// A random square-free canonical permutation of the given length, found by
// randomized backtracking (always succeeds: square-free permutations exist
// at every length). The state is a splitmix64 seed, advanced in place, so
// runs are reproducible across platforms.
Permutation random_square_free(int length, std::uint64_t& state);

}  // namespace sfperm
