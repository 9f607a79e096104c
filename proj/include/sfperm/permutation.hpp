#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfperm {

// A word of pairwise-distinct integers. Only the relative order of symbols
// matters for pattern notions; a permutation is "canonical" when its symbol
// set is exactly {1,...,n}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> symbols);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }

    // 0-based access.
    int operator[](int idx) const { return symbols_[static_cast<std::size_t>(idx)]; }
    // 1-based access, bounds-checked.
    int at1(int idx) const;

    const std::vector<int>& symbols() const { return symbols_; }
    std::span<const int> span() const { return symbols_; }

    bool is_canonical() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;  // lexicographic

    std::string str() const;

private:
    std::vector<int> symbols_;
};

// Location of a square factor: the factors [start, start+half_len-1] and
// [start+half_len, start+2*half_len-1] are order-isomorphic. 1-based start.
struct SquareWitness {
    int start = 0;
    int half_len = 0;
    bool operator==(const SquareWitness&) const = default;
};

// True iff u and v have equal length and identical relative order at every
// index pair. Bails out on the first mismatching pair.
bool factors_isomorphic(std::span<const int> u, std::span<const int> v);

// Replaces each symbol by its rank, so order-isomorphic inputs collapse to
// the same representative over {1,...,n}. Idempotent.
Permutation canonicalize(const Permutation& p);

bool order_isomorphic(const Permutation& p, const Permutation& q);

// The factor p_i...p_j with raw symbols, 1 <= i <= j <= n.
Permutation factor(const Permutation& p, int i, int j);

// Witness with minimal start, ties broken by minimal half_len; empty iff p
// is square-free.
std::optional<SquareWitness> find_square(const Permutation& p);

bool is_square_free(const Permutation& p);

// Existence-only square test. Scans short half-lengths across all starts
// first, which finds the length-4/8/16 squares the constructions produce
// far sooner than the find_square scan order would.
bool contains_square(const Permutation& p);

// Existence of a square factor with the given half length.
bool contains_square_of_half(const Permutation& p, int half);

// True iff some square factor ends exactly at the last symbol of prefix.
// A permutation contains a square iff some prefix has one ending at its
// last index, which is what makes suffix pruning sound.
bool has_square_ending_at(std::span<const int> prefix);

// The canonical extension of p in position pos obtained by inserting the
// given rank: values >= rank are shifted up and rank becomes the
// (pos+1)-th symbol. Deleting that symbol recovers canonicalize(p).
Permutation extension_at(const Permutation& p, int pos, int rank);

// All n+1 canonical extensions of p in position pos, in increasing rank
// order. Every length-(n+1) extension of p at pos is order-isomorphic to
// exactly one element.
std::vector<Permutation> extensions(const Permutation& p, int pos);

// Base-10 integers separated by spaces and/or commas.
Permutation parse_permutation(std::string_view text);

}  // namespace sfperm
