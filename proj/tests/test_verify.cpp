#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sfperm/verify.hpp"

using namespace sfperm;

TEST_CASE("verify_paper passes at the smallest scope") {
    VerifyReport report = verify_paper(2, 5);
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 9);
    for (const auto& c : report.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("verify_paper is deterministic for a fixed seed") {
    VerifyReport a = verify_paper(2, 5, 42);
    VerifyReport b = verify_paper(2, 5, 42);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].pass == b.checks[i].pass);
        CHECK(a.checks[i].detail == b.checks[i].detail);
    }
    CHECK(a.seed == 42);
}

TEST_CASE("verify_paper rejects parameters below the minimums") {
    CHECK_THROWS_AS((void)verify_paper(1, 9), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_paper(2, 4), std::invalid_argument);
}

TEST_CASE("random_square_free produces square-free canonical permutations") {
    std::uint64_t state = 7;
    for (int len : {1, 2, 5, 9, 15, 23}) {
        Permutation p = random_square_free(len, state);
        CHECK(p.size() == len);
        CHECK(p.is_canonical());
        CHECK(is_square_free(p));
    }
}
