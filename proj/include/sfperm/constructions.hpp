#pragma once

#include <optional>
#include <vector>

#include "sfperm/permutation.hpp"

namespace sfperm {

enum class Level { lower, medium, upper };

// Index classes mod 4: with offset i, indices == i (mod 4) are lower (local
// minima), indices == i+2 are upper (local maxima), the rest medium.
struct LevelDecomposition {
    int offset = 0;
    std::vector<Level> level_of;  // level_of[k] is the level of index k+1

    Level at1(int idx) const { return level_of[static_cast<std::size_t>(idx - 1)]; }
};

// The smallest offset in {0,1,2,3} whose lower symbols are below both
// neighbors and upper symbols above both neighbors, or nothing if no offset
// works. Any permutation without a length-4 square admits some offset.
std::optional<LevelDecomposition> level_decomposition(const Permutation& p);

// True iff some offset gives a valid level structure (S1), the levels are
// value-separated lower < medium < upper (S2), and the medium subsequence is
// square-free (S3). Such permutations are square-free.
bool is_hml(const Permutation& p);

enum class HmlKind { construction1, construction2 };

// Output of construction1/construction2 with its provenance, so the
// wrappers can refuse permutations that were not built here.
struct HmlPermutation {
    Permutation perm;
    HmlKind kind;
};

// Interleaves a (low block, odd indices == 1 mod 4), b (medium, even
// indices) and c (high block, indices == 3 mod 4) into a square-free
// permutation of length 4m-1. Requires |a| = |c| = m, |b| = 2m-1, every
// symbol of a below every symbol of b below every symbol of c, b square-free.
HmlPermutation construction1(const Permutation& a, const Permutation& b, const Permutation& c);

// Mirror image by value: u (high block) at indices == 1 mod 4, w (low block)
// at == 3 mod 4, v (medium) at even indices; u above v above w, v square-free.
HmlPermutation construction2(const Permutation& u, const Permutation& v, const Permutation& w);

// True iff no length-4 factor of p is order-isomorphic to 2341, 3214, 4123
// or 1432. Holds for every HML-constructed permutation.
bool forbidden_factor_check(const Permutation& p);

// x . p1 . y with x above and y below every symbol of p1; square-free
// whenever p1 came from construction1.
Permutation wrap1(int x, const HmlPermutation& p1, int y);

// z . p2 . t with z below and t above every symbol of p2; square-free
// whenever p2 came from construction2.
Permutation wrap2(int z, const HmlPermutation& p2, int t);

// Recover provenance for a permutation that structurally is a
// construction1/construction2 output: split it by index classes and rerun
// the construction. Empty if p could not have been produced that way.
std::optional<HmlPermutation> as_construction1(const Permutation& p);
std::optional<HmlPermutation> as_construction2(const Permutation& p);

// Order-preserving relabeling of p onto {lo, lo+1, ..., lo+n-1}.
Permutation relabel_onto(const Permutation& p, int lo);

// A canonical square-free permutation r of length 2m-1 with r_2 > r_3 and
// r_{2m-3} > r_{2m-2}, m >= 2. Even m is built by construction2 with
// ascending boundary blocks and a recursively built medium; odd m by
// construction1 with ascending blocks, stripping the first and last symbols
// and canonicalizing. All three postconditions are asserted on the result.
Permutation special_square_free(int m);

// The named intermediates of the length-(8m+5) crucial construction.
struct EmParts {
    int m = 0;
    Permutation r;        // special square-free seed, length 2m-1
    Permutation y;        // r relabeled onto [3m+4, 5m+2]
    Permutation x;        // (3m+3)(3m+2)...(2m+4)
    Permutation z;        // (6m+2)(6m+1)...(5m+3)
    Permutation h_prime;  // construction1(x, y, z), length 4m-1
    Permutation h;        // (6m+3) h_prime (2m+3), length 4m+1
    Permutation s;        // (6m+4)...(8m+4) ascending
    Permutation t;        // 2...(2m+2) ascending
    Permutation e_prime;  // construction2(s, h, t), length 8m+3
    Permutation e;        // 1 e_prime (8m+5), length 8m+5
};

// Builds the {0,1,8m+4,8m+5}-crucial square-free permutation of length
// 8m+5 step by step, keeping every intermediate for inspection.
EmParts build_em(int m);

}  // namespace sfperm
