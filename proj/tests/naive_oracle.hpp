#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// square-scan helpers: isomorphism goes through sorted-rank patterns and
// square detection is a plain double loop over all (start, half) pairs.

#include <algorithm>
#include <vector>

namespace oracle {

inline std::vector<int> pattern(const std::vector<int>& v) {
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) -
                                  sorted.begin());
    return out;
}

inline bool iso(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() == b.size() && pattern(a) == pattern(b);
}

inline bool contains_square(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    for (int start = 0; start < n; ++start)
        for (int half = 2; start + 2 * half <= n; ++half) {
            std::vector<int> x1(p.begin() + start, p.begin() + start + half);
            std::vector<int> x2(p.begin() + start + half, p.begin() + start + 2 * half);
            if (iso(x1, x2)) return true;
        }
    return false;
}

// All square-free permutations of {1,...,n} by filtering the full n!.
inline std::vector<std::vector<int>> all_square_free(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        if (!contains_square(v)) out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace oracle
