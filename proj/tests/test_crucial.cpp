#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sfperm/constructions.hpp"
#include "sfperm/crucial.hpp"
#include "sfperm/search.hpp"

using namespace sfperm;

namespace {

const Permutation kM({1, 3, 5, 4, 2, 6});
const Permutation kMPrime({1, 4, 6, 5, 2, 3, 7});
const Permutation kP17({2, 4, 3, 1, 5, 11, 10, 6, 9, 12, 8, 7, 13, 17, 15, 14, 16});
const Permutation kQ18({2, 4, 3, 1, 5, 11, 10, 6, 9, 12, 8, 7, 13, 17, 15, 0, 14, 16});

const Permutation& e2() {
    static const Permutation e = build_em(2).e;
    return e;
}

}  // namespace

TEST_CASE("PositionSet validation") {
    PositionSet s(17, {17, 0, 1, 16});
    CHECK(s.members == std::vector<int>{0, 1, 16, 17});
    CHECK(s.contains(16));
    CHECK_FALSE(s.contains(2));
    CHECK(s.str() == "0,1,16,17");
    CHECK_THROWS_AS(PositionSet(5, {0, 6}), std::invalid_argument);
    CHECK_THROWS_AS(PositionSet(5, {-1}), std::invalid_argument);
}

TEST_CASE("PositionPattern parsing and resolution") {
    CHECK(PositionPattern::parse("0,1,20,21").resolve(21).members ==
          std::vector<int>{0, 1, 20, 21});
    CHECK(PositionPattern::parse("0,1,n-1,n").resolve(9).members ==
          std::vector<int>{0, 1, 8, 9});
    CHECK(PositionPattern::parse("left").resolve(7).members == std::vector<int>{0});
    CHECK(PositionPattern::parse("right").resolve(7).members == std::vector<int>{7});
    CHECK(PositionPattern::parse("bi").resolve(7).members == std::vector<int>{0, 7});
    CHECK(PositionPattern::parse("s").resolve(3).members == std::vector<int>{0, 1, 2, 3});
    CHECK(PositionPattern::parse("interior").resolve(9).members ==
          std::vector<int>{3, 4, 5, 6});
    CHECK(PositionPattern::parse("0,1,n-1,n").str() == "0,1,n-1,n");
    CHECK_THROWS_AS(PositionPattern::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PositionPattern::parse("0,zz"), std::invalid_argument);
    CHECK_THROWS_AS(PositionPattern::parse("n+1"), std::invalid_argument);
}

TEST_CASE("position_blocked") {
    CHECK_FALSE(position_blocked(kM, 4));
    CHECK(position_blocked(e2(), 21));
    CHECK_FALSE(position_blocked(Permutation({1, 2}), 0));
    CHECK_THROWS_AS(position_blocked(kM, 7), std::out_of_range);
}

TEST_CASE("square_free_extension_witness") {
    SUBCASE("M at position 4 yields the counterexample extension") {
        auto w = square_free_extension_witness(kM, 4);
        REQUIRE(w.has_value());
        CHECK(is_square_free(*w));
        // smallest square-free insertion rank; still isomorphic to M'
        auto exts = extensions(kM, 4);
        auto first_free = std::find_if(exts.begin(), exts.end(),
                                       [](const Permutation& q) { return is_square_free(q); });
        CHECK(*w == *first_free);
    }
    SUBCASE("P17 at position 15 yields a Q18-isomorphic witness") {
        auto w = square_free_extension_witness(kP17, 15);
        REQUIRE(w.has_value());
        CHECK(order_isomorphic(*w, kQ18));
    }
    CHECK_FALSE(square_free_extension_witness(e2(), 20).has_value());

    SUBCASE("empty witness iff blocked, across all positions of a small host") {
        Permutation p({1, 3, 6, 4, 2, 5, 7});
        for (int pos = 0; pos <= p.size(); ++pos)
            CHECK(position_blocked(p, pos) == !square_free_extension_witness(p, pos).has_value());
    }
}

TEST_CASE("is_p_crucial") {
    CHECK(is_p_crucial(e2(), PositionSet(21, {0, 1, 20, 21})));
    CHECK(is_p_crucial(kP17, PositionSet(17, {0, 1, 16, 17})));
    CHECK_FALSE(is_p_crucial(Permutation({1, 3, 2, 4}), PositionSet(4, {0})));
    CHECK_THROWS_AS((void)is_p_crucial(kM, PositionSet(5, {0})), std::invalid_argument);
    SUBCASE("strict mode rejects non-square-free hosts") {
        CHECK_THROWS_AS((void)is_p_crucial(Permutation({1, 3, 2, 4}), PositionSet(4, {0}), true),
                        std::invalid_argument);
    }
}

TEST_CASE("named_crucial") {
    CHECK_FALSE(named_crucial(kP17, CrucialKind::s));
    CHECK_FALSE(named_crucial(e2(), CrucialKind::s));
    CHECK_FALSE(named_crucial(Permutation({1, 2}), CrucialKind::left));
    CHECK(named_crucial(kP17, CrucialKind::left));
    CHECK(named_crucial(kP17, CrucialKind::right));
    CHECK(named_crucial(kP17, CrucialKind::bi));
}

TEST_CASE("blocked_positions") {
    SUBCASE("E_2 is blocked at the ends and across the interior") {
        PositionSet blocked = blocked_positions(e2());
        for (int pos : {0, 1, 20, 21}) CHECK(blocked.contains(pos));
        for (int pos = 3; pos <= 18; ++pos) CHECK(blocked.contains(pos));
        CHECK_FALSE(blocked.contains(19));  // position 8m+3
    }
    CHECK_FALSE(blocked_positions(kP17).contains(15));
    CHECK(blocked_positions(Permutation({1, 2, 3})).members.empty());
}

TEST_CASE("cruciality is monotone-decreasing in the position set") {
    enumerate_square_free(5, [](const Permutation& p) {
        PositionSet blocked = blocked_positions(p);
        // p is s-crucial for s iff s is contained in the blocked set, which
        // gives monotonicity for free; verify the characterization.
        for (int a = 0; a <= 5; ++a)
            for (int b = a; b <= 5; ++b) {
                std::vector<int> members;
                for (int i = a; i <= b; ++i) members.push_back(i);
                PositionSet s(5, members);
                bool expected = std::all_of(members.begin(), members.end(),
                                            [&](int i) { return blocked.contains(i); });
                CHECK(is_p_crucial(p, s) == expected);
            }
    });
}

TEST_CASE("S-crucial equivalence with the corrected position set, small lengths") {
    for (int n = 5; n <= 7; ++n) {
        enumerate_square_free(n, [&](const Permutation& p) {
            bool corrected = is_p_crucial(p, PositionSet(n, {0, 1, 2, n - 2, n - 1, n}));
            if (corrected || named_crucial(p, CrucialKind::s))
                CHECK(corrected == named_crucial(p, CrucialKind::s));
        });
    }
}

TEST_CASE("interior positions of square-free hosts force length-4 squares") {
    for (int n = 5; n <= 7; ++n) {
        enumerate_square_free(n, [&](const Permutation& p) {
            for (int pos = 3; pos <= n - 3; ++pos)
                for (int rank = 1; rank <= n + 1; ++rank)
                    CHECK(contains_square_of_half(extension_at(p, pos, rank), 2));
        });
    }
}

TEST_CASE("the M / M' counterexample stands") {
    CHECK(is_square_free(kM));
    CHECK(is_square_free(kMPrime));
    auto exts = extensions(kM, 4);
    CHECK(std::find(exts.begin(), exts.end(), kMPrime) != exts.end());
    CHECK(kM.size() - 2 == 4);  // the failing position is n-2
}
