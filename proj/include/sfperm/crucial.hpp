#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfperm/permutation.hpp"

namespace sfperm {

// A subset of {0,...,n} of extension positions for a host of length n.
struct PositionSet {
    int n = 0;
    std::vector<int> members;  // sorted, unique

    PositionSet() = default;
    PositionSet(int n, std::vector<int> members);

    bool contains(int pos) const;
    std::string str() const;
    bool operator==(const PositionSet&) const = default;
};

// A position set pattern that is resolved against a concrete length:
// either a keyword (left|right|bi|s|interior) or a list of terms that are
// absolute integers or n-relative expressions such as "n-1".
struct PositionPattern {
    enum class Keyword { none, left, right, bi, s, interior };
    struct Term {
        bool n_relative = false;
        int value = 0;  // absolute value, or offset added to n
        bool operator==(const Term&) const = default;
    };

    Keyword keyword = Keyword::none;
    std::vector<Term> terms;

    static PositionPattern parse(std::string_view text);
    PositionSet resolve(int n) const;
    std::string str() const;
};

// True iff every extension of p in position pos contains a square.
bool position_blocked(const Permutation& p, int pos);

// The square-free extension of p at pos with smallest insertion rank, or
// nothing iff the position is blocked.
std::optional<Permutation> square_free_extension_witness(const Permutation& p, int pos);

// True iff p is square-free and every position in s is blocked. A
// non-square-free p yields false; strict mode throws instead, for catching
// caller bugs.
bool is_p_crucial(const Permutation& p, const PositionSet& s, bool strict = false);

enum class CrucialKind { left, right, bi, s };

bool named_crucial(const Permutation& p, CrucialKind kind);

// All positions of {0,...,n} at which p is blocked.
PositionSet blocked_positions(const Permutation& p);

}  // namespace sfperm
