#include "sfperm/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sfperm/constructions.hpp"
#include "sfperm/crucial.hpp"
#include "sfperm/search.hpp"

namespace sfperm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int rand_below(std::uint64_t& state, int bound) {
    return static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(bound));
}

Permutation random_permutation(int length, std::uint64_t& state) {
    std::vector<int> v(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    for (int i = length - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rand_below(state, i + 1))]);
    return Permutation(std::move(v));
}

bool random_square_free_dfs(std::vector<int>& prefix, std::vector<bool>& used, int length,
                            std::uint64_t& state) {
    if (static_cast<int>(prefix.size()) == length) return true;
    std::vector<int> order;
    for (int v = 1; v <= length; ++v)
        if (!used[static_cast<std::size_t>(v)]) order.push_back(v);
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rand_below(state, i + 1))]);
    for (int v : order) {
        prefix.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        if (!has_square_ending_at(prefix) && random_square_free_dfs(prefix, used, length, state))
            return true;
        prefix.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
    return false;
}

struct Checker {
    VerifyReport& report;
    CheckResult current;
    bool failed = false;

    void begin(std::string name) {
        current = CheckResult{std::move(name), true, ""};
        failed = false;
    }
    void require(bool condition, const std::string& detail) {
        if (!condition && !failed) {
            current.pass = false;
            current.detail = detail;
            failed = true;
        }
    }
    void end(const std::string& summary = "") {
        if (current.pass) current.detail = summary;
        report.checks.push_back(std::move(current));
    }
};

const Permutation kP17({2, 4, 3, 1, 5, 11, 10, 6, 9, 12, 8, 7, 13, 17, 15, 14, 16});
const Permutation kQ18({2, 4, 3, 1, 5, 11, 10, 6, 9, 12, 8, 7, 13, 17, 15, 0, 14, 16});

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Permutation random_square_free(int length, std::uint64_t& state) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(length) + 1, false);
    if (!random_square_free_dfs(prefix, used, length, state))
        throw std::logic_error("no square-free permutation found");  // cannot happen
    return Permutation(std::move(prefix));
}

VerifyReport verify_paper(int max_m, int max_n, std::uint64_t seed) {
    if (max_m < 2) throw std::invalid_argument("max_m must be >= 2");
    if (max_n < 5) throw std::invalid_argument("max_n must be >= 5");

    VerifyReport report;
    report.seed = seed;
    Checker check{report};

    // Worked example for m = 2, symbol for symbol.
    check.begin("em2-fixtures-exact");
    {
        EmParts p = build_em(2);
        check.require(p.h_prime == Permutation({9, 12, 14, 11, 8, 10, 13}), "H'_2 mismatch");
        check.require(p.h == Permutation({15, 9, 12, 14, 11, 8, 10, 13, 7}), "H_2 mismatch");
        check.require(p.e_prime == Permutation({16, 15, 2, 9, 17, 12, 3, 14, 18, 11, 4, 8, 19,
                                                10, 5, 13, 20, 7, 6}),
                      "E'_2 mismatch");
        check.require(p.e == Permutation({1, 16, 15, 2, 9, 17, 12, 3, 14, 18, 11, 4, 8, 19, 10,
                                          5, 13, 20, 7, 6, 21}),
                      "E_2 mismatch");
    }
    check.end();

    check.begin("em-crucial");
    for (int m = 2; m <= max_m; ++m) {
        EmParts p = build_em(m);
        const int n = 8 * m + 5;
        check.require(p.e.size() == n, "length mismatch at m = " + std::to_string(m));
        check.require(is_square_free(p.e), "not square-free at m = " + std::to_string(m));
        check.require(is_p_crucial(p.e, PositionSet(n, {0, 1, n - 1, n})),
                      "not {0,1,8m+4,8m+5}-crucial at m = " + std::to_string(m));
    }
    check.end("m in [2," + std::to_string(max_m) + "]");

    check.begin("em-not-s-crucial");
    for (int m = 2; m <= std::min(max_m, 10); ++m) {
        EmParts p = build_em(m);
        check.require(square_free_extension_witness(p.e, 8 * m + 3).has_value(),
                      "position 8m+3 blocked at m = " + std::to_string(m));
    }
    check.end("witness at position 8m+3 for m in [2," + std::to_string(std::min(max_m, 10)) + "]");

    check.begin("special-square-free-family");
    for (int m = 2; m <= 50; ++m) {
        Permutation r = special_square_free(m);  // throws if postconditions fail
        check.require(r.size() == 2 * m - 1, "length mismatch at m = " + std::to_string(m));
        check.require(is_square_free(r), "not square-free at m = " + std::to_string(m));
        check.require(r.at1(2) > r.at1(3) && r.at1(2 * m - 3) > r.at1(2 * m - 2),
                      "descent conditions fail at m = " + std::to_string(m));
    }
    check.end("m in [2,50]");

    // Seeded randomized suites over valid construction inputs.
    std::uint64_t state = seed;
    const int kCases = 500;

    check.begin("construction-1-properties");
    for (int i = 0; i < kCases; ++i) {
        int m = 1 + rand_below(state, 12);
        int base = rand_below(state, 41) - 20;
        int g1 = rand_below(state, 4), g2 = rand_below(state, 4);
        Permutation a = relabel_onto(random_permutation(m, state), base);
        Permutation b = relabel_onto(random_square_free(2 * m - 1, state), base + m + g1);
        Permutation c = relabel_onto(random_permutation(m, state), base + 3 * m - 1 + g1 + g2);
        Permutation p = construction1(a, b, c).perm;
        std::string at = " (case " + std::to_string(i) + ", m = " + std::to_string(m) + ")";
        check.require(is_square_free(p), "output not square-free" + at);
        check.require(is_hml(p), "output not HML" + at);
        check.require(forbidden_factor_check(p), "forbidden factor present" + at);
        auto levels = level_decomposition(p);
        check.require(levels && levels->offset == 1, "level offset != 1" + at);
        check.require(is_square_free(wrap1(p.symbols().empty() ? 1 : *std::max_element(p.symbols().begin(), p.symbols().end()) + 1 + rand_below(state, 5),
                                           {p, HmlKind::construction1},
                                           *std::min_element(p.symbols().begin(), p.symbols().end()) - 1 - rand_below(state, 5))),
                      "wrapped permutation not square-free" + at);
    }
    check.end(std::to_string(kCases) + " random cases");

    check.begin("construction-2-properties");
    for (int i = 0; i < kCases; ++i) {
        int m = 1 + rand_below(state, 12);
        int base = rand_below(state, 41) - 20;
        int g1 = rand_below(state, 4), g2 = rand_below(state, 4);
        Permutation w = relabel_onto(random_permutation(m, state), base);
        Permutation v = relabel_onto(random_square_free(2 * m - 1, state), base + m + g1);
        Permutation u = relabel_onto(random_permutation(m, state), base + 3 * m - 1 + g1 + g2);
        Permutation p = construction2(u, v, w).perm;
        std::string at = " (case " + std::to_string(i) + ", m = " + std::to_string(m) + ")";
        check.require(is_square_free(p), "output not square-free" + at);
        check.require(is_hml(p), "output not HML" + at);
        check.require(forbidden_factor_check(p), "forbidden factor present" + at);
        auto levels = level_decomposition(p);
        check.require(levels && levels->offset == 3, "level offset != 3" + at);
        check.require(is_square_free(wrap2(*std::min_element(p.symbols().begin(), p.symbols().end()) - 1 - rand_below(state, 5),
                                           {p, HmlKind::construction2},
                                           *std::max_element(p.symbols().begin(), p.symbols().end()) + 1 + rand_below(state, 5))),
                      "wrapped permutation not square-free" + at);
    }
    check.end(std::to_string(kCases) + " random cases");

    // Counterexample to the uncorrected equivalence claim.
    check.begin("counterexample-m");
    {
        Permutation m_perm({1, 3, 5, 4, 2, 6});
        Permutation m_prime({1, 4, 6, 5, 2, 3, 7});
        check.require(is_square_free(m_perm), "M not square-free");
        check.require(is_square_free(m_prime), "M' not square-free");
        auto exts = extensions(m_perm, 4);
        check.require(std::find(exts.begin(), exts.end(), m_prime) != exts.end(),
                      "M' not among extensions of M at position 4");
        check.require(!position_blocked(m_perm, 4), "position 4 of M reported blocked");
    }
    check.end();

    check.begin("p17-fixtures");
    {
        check.require(is_p_crucial(kP17, PositionSet(17, {0, 1, 16, 17})),
                      "P17 not {0,1,16,17}-crucial");
        check.require(is_square_free(kQ18), "Q18 not square-free");
        auto exts = extensions(kP17, 15);
        check.require(std::find(exts.begin(), exts.end(), canonicalize(kQ18)) != exts.end(),
                      "Q18 not among extensions of P17 at position 15");
        check.require(!named_crucial(kP17, CrucialKind::s), "P17 reported S-crucial");
        auto witness = square_free_extension_witness(kP17, 15);
        check.require(witness && order_isomorphic(*witness, kQ18), "witness at 15 not ~ Q18");
    }
    check.end();

    // Exhaustive sweeps over all square-free permutations of small lengths.
    const int sweep_max = std::min(max_n, 9);
    check.begin("s-crucial-equivalence");
    for (int n = 5; n <= sweep_max; ++n) {
        PositionSet corrected(n, {0, 1, 2, n - 2, n - 1, n});
        enumerate_square_free(n, [&](const Permutation& p) {
            // S-crucial implies corrected-crucial by monotonicity, so a
            // discrepancy can only be corrected-crucial without S-crucial.
            if (is_p_crucial(p, corrected))
                check.require(named_crucial(p, CrucialKind::s),
                              "discrepancy at " + p.str());
        });
    }
    check.end("n in [5," + std::to_string(sweep_max) + "]");

    check.begin("interior-length-4-square");
    for (int n = 5; n <= sweep_max; ++n) {
        enumerate_square_free(n, [&](const Permutation& p) {
            if (check.failed) return;
            for (int pos = 3; pos <= n - 3; ++pos)
                for (int rank = 1; rank <= n + 1; ++rank)
                    check.require(contains_square_of_half(extension_at(p, pos, rank), 2),
                                  "no length-4 square at " + p.str() + " pos " +
                                      std::to_string(pos) + " rank " + std::to_string(rank));
        });
    }
    check.end("n in [5," + std::to_string(sweep_max) + "]");

    check.begin("search-no-small-crucial");
    for (int n = 4; n <= std::min(max_n, 11); ++n) {
        SearchSpec spec;
        spec.n = n;
        spec.positions = PositionPattern::parse("0,1,n-1,n");
        SearchResult r = find_p_crucial(spec);
        check.require(r.hits.empty(), std::to_string(r.hits.size()) + " hits at n = " +
                                          std::to_string(n));
    }
    check.end("n in [4," + std::to_string(std::min(max_n, 11)) + "]");

    return report;
}

}  // namespace sfperm
