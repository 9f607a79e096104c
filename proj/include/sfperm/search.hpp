#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sfperm/crucial.hpp"
#include "sfperm/permutation.hpp"

namespace sfperm {

// A slice of the search space: all branches whose depth-prefix_depth prefix
// has lexicographic rank == index (mod count) among all such prefixes.
struct ShardSpec {
    int prefix_depth = 0;
    std::uint64_t index = 0;
    std::uint64_t count = 1;
    bool operator==(const ShardSpec&) const = default;
};

enum class SearchMode { count_square_free, find_crucial };

struct SearchSpec {
    int n = 0;
    PositionPattern positions;
    SearchMode mode = SearchMode::find_crucial;
    std::optional<ShardSpec> shard;
    bool force = false;    // permit n beyond the ceiling
    int ceiling = 14;      // guard against accidental week-long runs

    void validate() const;
};

struct SearchResult {
    int n = 0;
    std::uint64_t total_enumerated = 0;       // square-free permutations visited
    std::vector<Permutation> hits;            // sorted lexicographically, distinct
    double elapsed_seconds = 0.0;
};

// Backtracking over canonical permutations of {1,...,n}, extending prefixes
// symbol by symbol and pruning every prefix with a square ending at its last
// index. Invokes consumer once per square-free permutation, in lexicographic
// order within the shard, and returns the count.
std::uint64_t enumerate_square_free(int n, const std::function<void(const Permutation&)>& consumer,
                                    const std::optional<ShardSpec>& shard = std::nullopt);

std::uint64_t count_square_free(int n);

// All square-free permutations of length spec.n that are P-crucial for the
// resolved position set. Deterministic and independent of sharding.
SearchResult find_p_crucial(const SearchSpec& spec);

// Splits base into shard_count disjoint specs whose union covers the whole
// space, keyed by the shortest prefix depth with at least shard_count
// prefixes.
std::vector<SearchSpec> shard_plan(const SearchSpec& base, std::uint64_t shard_count);
std::vector<SearchSpec> shard_plan(int n, std::uint64_t shard_count);

// Runs every shard (sequentially or on `jobs` threads) and aggregates:
// hits are merged, sorted, and must be pairwise distinct — a duplicate
// indicates a sharding bug and throws.
SearchResult run_sharded(const SearchSpec& base, std::uint64_t shard_count, int jobs = 1);

}  // namespace sfperm
