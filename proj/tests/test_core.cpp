#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "naive_oracle.hpp"
#include "sfperm/permutation.hpp"

using namespace sfperm;

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("permutation construction rejects duplicates") {
    CHECK_NOTHROW(Permutation({5, 9, 4}));
    CHECK_NOTHROW(Permutation(std::vector<int>{}));
    try {
        Permutation p({1, 7, 7, 2});
        FAIL("duplicate accepted");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find('7') != std::string::npos);
    }
}

TEST_CASE("canonicalize") {
    CHECK(canonicalize(Permutation({2, 6, 4, 8})) == Permutation({1, 3, 2, 4}));
    CHECK(canonicalize(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
    CHECK(canonicalize(Permutation({5, 9, 4})) == Permutation({2, 3, 1}));

    SUBCASE("idempotent and order-isomorphic to input") {
        Permutation p({-3, 12, 0, 7});
        Permutation c = canonicalize(p);
        CHECK(c.is_canonical());
        CHECK(canonicalize(c) == c);
        CHECK(order_isomorphic(p, c));
    }
}

TEST_CASE("order_isomorphic") {
    CHECK(order_isomorphic(Permutation({1, 3, 2, 4}), Permutation({2, 6, 4, 8})));
    CHECK_FALSE(order_isomorphic(Permutation({1, 2}), Permutation({2, 1})));
    CHECK_FALSE(order_isomorphic(Permutation({1, 3, 2}), Permutation({5, 9, 4})));
    CHECK_FALSE(order_isomorphic(Permutation({1, 2}), Permutation({1, 2, 3})));

    SUBCASE("matches canonical-form equality on all length-4 pairs") {
        auto perms = all_permutations(4);
        for (const auto& a : perms)
            for (const auto& b : perms) {
                Permutation pa(a), pb(b);
                CHECK(order_isomorphic(pa, pb) == (canonicalize(pa) == canonicalize(pb)));
            }
    }
}

TEST_CASE("factor") {
    Permutation p({1, 3, 6, 4, 2, 5, 7});
    CHECK(factor(p, 2, 4) == Permutation({3, 6, 4}));
    CHECK(factor(p, 4, 6) == Permutation({4, 2, 5}));
    CHECK(factor(Permutation({1, 3, 2}), 1, 3) == Permutation({1, 3, 2}));
    CHECK_THROWS_AS(factor(p, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(factor(p, 3, 8), std::out_of_range);
    CHECK_THROWS_AS(factor(p, 5, 4), std::out_of_range);
}

TEST_CASE("find_square and is_square_free") {
    CHECK(find_square(Permutation({1, 3, 2, 4})) == SquareWitness{1, 2});
    CHECK(find_square(Permutation({1, 2, 3, 4})) == SquareWitness{1, 2});
    CHECK_FALSE(find_square(Permutation({1, 3, 6, 4, 2, 5, 7})).has_value());
    CHECK(is_square_free(Permutation({1, 3, 6, 4, 2, 5, 7})));
    CHECK(is_square_free(Permutation({1, 3, 5, 4, 2, 6})));
    CHECK_FALSE(is_square_free(Permutation({1, 3, 2, 4})));

    SUBCASE("witness tie-break: minimal start, then minimal half") {
        // 12345678 has squares everywhere; the first is at start 1, half 2
        CHECK(find_square(Permutation({1, 2, 3, 4, 5, 6, 7, 8})) == SquareWitness{1, 2});
    }

    SUBCASE("witness factors really are order-isomorphic") {
        Permutation p({2, 1, 4, 3, 6, 5});
        auto w = find_square(p);
        REQUIRE(w.has_value());
        CHECK(order_isomorphic(factor(p, w->start, w->start + w->half_len - 1),
                               factor(p, w->start + w->half_len, w->start + 2 * w->half_len - 1)));
    }
}

TEST_CASE("length <= 3 is always square-free") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& v : all_permutations(n)) CHECK(is_square_free(Permutation(v)));
}

TEST_CASE("square scan agrees with the naive oracle up to length 8") {
    for (int n = 4; n <= 8; ++n)
        for (const auto& v : all_permutations(n)) {
            Permutation p(v);
            bool naive = oracle::contains_square(v);
            CHECK(find_square(p).has_value() == naive);
            CHECK(contains_square(p) == naive);
        }
}

TEST_CASE("square exists iff some prefix has a square ending at its last index") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& v : all_permutations(n)) {
            bool suffix_hit = false;
            for (std::size_t k = 4; k <= v.size(); ++k)
                suffix_hit = suffix_hit ||
                             has_square_ending_at(std::span<const int>(v.data(), k));
            CHECK(suffix_hit == find_square(Permutation(v)).has_value());
        }
}

TEST_CASE("extension_at") {
    CHECK(extension_at(Permutation({1, 2, 3}), 2, 2) == Permutation({1, 3, 2, 4}));
    CHECK(extension_at(Permutation({1, 2, 3}), 2, 3) == Permutation({1, 2, 3, 4}));
    CHECK(extension_at(Permutation({1, 2}), 0, 3) == Permutation({3, 1, 2}));
    CHECK(extension_at(Permutation({1, 2}), 2, 1) == Permutation({2, 3, 1}));
    CHECK_THROWS_AS(extension_at(Permutation({1, 2}), 3, 1), std::out_of_range);
    CHECK_THROWS_AS(extension_at(Permutation({1, 2}), 0, 4), std::out_of_range);
    CHECK_THROWS_AS(extension_at(Permutation({1, 2}), 0, 0), std::out_of_range);
    CHECK_THROWS_AS(extension_at(Permutation(std::vector<int>{}), 0, 1), std::invalid_argument);
}

TEST_CASE("extensions") {
    CHECK(extensions(Permutation({1, 2, 3}), 2).size() == 4);
    auto e123 = extensions(Permutation({1, 2, 3}), 2);
    CHECK(std::find(e123.begin(), e123.end(), Permutation({1, 3, 2, 4})) != e123.end());

    CHECK(extensions(Permutation({1, 2}), 0) ==
          std::vector<Permutation>{Permutation({1, 2, 3}), Permutation({2, 1, 3}),
                                   Permutation({3, 1, 2})});

    SUBCASE("member order-isomorphic to the inserted-minimum example") {
        auto exts = extensions(Permutation({1, 3, 5, 4, 2, 6}), 4);
        Permutation target({1, 4, 6, 5, 2, 3, 7});
        CHECK(std::any_of(exts.begin(), exts.end(),
                          [&](const Permutation& q) { return order_isomorphic(q, target); }));
    }

    SUBCASE("pairwise non-isomorphic; deletion recovers the original") {
        for (const auto& v : all_permutations(4)) {
            Permutation p(v);
            for (int pos = 0; pos <= p.size(); ++pos) {
                auto exts = extensions(p, pos);
                CHECK(static_cast<int>(exts.size()) == p.size() + 1);
                for (std::size_t i = 0; i < exts.size(); ++i) {
                    auto symbols = exts[i].symbols();
                    symbols.erase(symbols.begin() + pos);
                    CHECK(canonicalize(Permutation(symbols)) == canonicalize(p));
                    for (std::size_t j = i + 1; j < exts.size(); ++j)
                        CHECK_FALSE(order_isomorphic(exts[i], exts[j]));
                }
            }
        }
    }
}

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("1 16 15 2") == Permutation({1, 16, 15, 2}));
    CHECK(parse_permutation("0,1,20,21") == Permutation({0, 1, 20, 21}));
    CHECK(parse_permutation(" -3, 4  7 ") == Permutation({-3, 4, 7}));
    CHECK_THROWS_AS(parse_permutation("1 2 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 2 2"), std::invalid_argument);
}
