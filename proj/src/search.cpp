#include "sfperm/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace sfperm {

void SearchSpec::validate() const {
    if (n < 1) throw std::invalid_argument("search length must be >= 1");
    if (shard && shard->index >= shard->count)
        throw std::invalid_argument("shard index must be below shard count");
    if (n > ceiling && !force)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the ceiling of " +
                                    std::to_string(ceiling) +
                                    "; pass force to run anyway");
}

namespace {

class Enumerator {
public:
    Enumerator(int n, const std::function<void(const Permutation&)>& consumer,
               const std::optional<ShardSpec>& shard)
        : n_(n), consumer_(consumer), shard_(shard.value_or(ShardSpec{})) {
        prefix_.reserve(static_cast<std::size_t>(n));
        used_.assign(static_cast<std::size_t>(n) + 1, false);
    }

    std::uint64_t run() {
        dfs(0);
        return count_;
    }

private:
    // Lexicographic rank of the current prefix among all sequences of the
    // same length with distinct values from {1,...,n}.
    std::uint64_t prefix_rank() const {
        std::uint64_t rank = 0;
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        for (std::size_t pos = 0; pos < prefix_.size(); ++pos) {
            int smaller = 0;
            for (int v = 1; v < prefix_[pos]; ++v)
                if (!seen[static_cast<std::size_t>(v)]) ++smaller;
            rank = rank * static_cast<std::uint64_t>(n_ - static_cast<int>(pos)) +
                   static_cast<std::uint64_t>(smaller);
            seen[static_cast<std::size_t>(prefix_[pos])] = true;
        }
        return rank;
    }

    void dfs(int depth) {
        if (shard_.count > 1 && depth == shard_.prefix_depth &&
            prefix_rank() % shard_.count != shard_.index)
            return;
        if (depth == n_) {
            ++count_;
            consumer_(Permutation(prefix_));
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            prefix_.push_back(v);
            used_[static_cast<std::size_t>(v)] = true;
            if (!has_square_ending_at(prefix_)) dfs(depth + 1);
            prefix_.pop_back();
            used_[static_cast<std::size_t>(v)] = false;
        }
    }

    int n_;
    const std::function<void(const Permutation&)>& consumer_;
    ShardSpec shard_;
    std::vector<int> prefix_;
    std::vector<bool> used_;
    std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_square_free(int n, const std::function<void(const Permutation&)>& consumer,
                                    const std::optional<ShardSpec>& shard) {
    if (n < 1) throw std::invalid_argument("enumeration length must be >= 1");
    if (shard && shard->index >= shard->count)
        throw std::invalid_argument("shard index must be below shard count");
    return Enumerator(n, consumer, shard).run();
}

std::uint64_t count_square_free(int n) {
    return enumerate_square_free(n, [](const Permutation&) {});
}

SearchResult find_p_crucial(const SearchSpec& spec) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();
    PositionSet positions = spec.positions.resolve(spec.n);
    SearchResult result;
    result.n = spec.n;
    result.total_enumerated = enumerate_square_free(
        spec.n,
        [&](const Permutation& p) {
            if (spec.mode == SearchMode::find_crucial && is_p_crucial(p, positions))
                result.hits.push_back(p);
        },
        spec.shard);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<SearchSpec> shard_plan(const SearchSpec& base, std::uint64_t shard_count) {
    if (shard_count < 1) throw std::invalid_argument("shard count must be >= 1");
    if (base.n < 1) throw std::invalid_argument("search length must be >= 1");
    int depth = 0;
    std::uint64_t prefixes = 1;
    while (prefixes < shard_count && depth < base.n) {
        prefixes *= static_cast<std::uint64_t>(base.n - depth);
        ++depth;
    }
    std::vector<SearchSpec> plan;
    plan.reserve(shard_count);
    for (std::uint64_t i = 0; i < shard_count; ++i) {
        SearchSpec s = base;
        s.shard = ShardSpec{depth, i, shard_count};
        plan.push_back(std::move(s));
    }
    return plan;
}

std::vector<SearchSpec> shard_plan(int n, std::uint64_t shard_count) {
    SearchSpec base;
    base.n = n;
    base.mode = SearchMode::count_square_free;
    return shard_plan(base, shard_count);
}

SearchResult run_sharded(const SearchSpec& base, std::uint64_t shard_count, int jobs) {
    base.validate();
    const auto start = std::chrono::steady_clock::now();
    auto plan = shard_plan(base, shard_count);
    std::vector<SearchResult> partials(plan.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < plan.size(); ++i) partials[i] = find_p_crucial(plan[i]);
    } else {
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) {
            workers.emplace_back([&plan, &partials, j, jobs]() {
                for (std::size_t i = static_cast<std::size_t>(j); i < plan.size();
                     i += static_cast<std::size_t>(jobs))
                    partials[i] = find_p_crucial(plan[i]);
            });
        }
        for (auto& w : workers) w.join();
    }
    SearchResult result;
    result.n = base.n;
    for (auto& p : partials) {
        result.total_enumerated += p.total_enumerated;
        result.hits.insert(result.hits.end(), p.hits.begin(), p.hits.end());
    }
    std::sort(result.hits.begin(), result.hits.end());
    if (std::adjacent_find(result.hits.begin(), result.hits.end()) != result.hits.end())
        throw std::logic_error("sharding bug: duplicate hit across shards");
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace sfperm
