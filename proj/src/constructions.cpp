#include "sfperm/constructions.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace sfperm {

namespace {

bool offset_valid(const Permutation& p, int offset) {
    const int n = p.size();
    for (int j = 1; j <= n; ++j) {
        int cls = ((j - offset) % 4 + 4) % 4;
        if (cls == 0) {  // lower: below both neighbors
            if (j > 1 && p.at1(j) >= p.at1(j - 1)) return false;
            if (j < n && p.at1(j) >= p.at1(j + 1)) return false;
        } else if (cls == 2) {  // upper: above both neighbors
            if (j > 1 && p.at1(j) <= p.at1(j - 1)) return false;
            if (j < n && p.at1(j) <= p.at1(j + 1)) return false;
        }
    }
    return true;
}

LevelDecomposition make_levels(const Permutation& p, int offset) {
    LevelDecomposition d;
    d.offset = offset;
    d.level_of.resize(static_cast<std::size_t>(p.size()));
    for (int j = 1; j <= p.size(); ++j) {
        int cls = ((j - offset) % 4 + 4) % 4;
        d.level_of[static_cast<std::size_t>(j - 1)] =
            cls == 0 ? Level::lower : (cls == 2 ? Level::upper : Level::medium);
    }
    return d;
}

// S2 + S3 for a given valid offset.
bool separated_and_medium_square_free(const Permutation& p, const LevelDecomposition& d) {
    std::vector<int> medium;
    int max_lower = INT_MIN, min_medium = INT_MAX, max_medium = INT_MIN, min_upper = INT_MAX;
    for (int j = 1; j <= p.size(); ++j) {
        int v = p.at1(j);
        switch (d.at1(j)) {
            case Level::lower: max_lower = std::max(max_lower, v); break;
            case Level::upper: min_upper = std::min(min_upper, v); break;
            case Level::medium:
                medium.push_back(v);
                min_medium = std::min(min_medium, v);
                max_medium = std::max(max_medium, v);
                break;
        }
    }
    if (max_lower != INT_MIN && min_medium != INT_MAX && max_lower >= min_medium) return false;
    if (max_medium != INT_MIN && min_upper != INT_MAX && max_medium >= min_upper) return false;
    // degenerate but possible on very short inputs: lower vs upper directly
    if (max_lower != INT_MIN && min_upper != INT_MAX && max_lower >= min_upper) return false;
    return is_square_free(Permutation(std::move(medium)));
}

void check_blocks(const Permutation& low, const Permutation& mid, const Permutation& high,
                  const char* low_name, const char* mid_name, const char* high_name,
                  const char* sep_cond, const char* sf_cond) {
    const int m = low.size();
    if (m < 1 || high.size() != m || mid.size() != 2 * m - 1)
        throw std::invalid_argument(std::string("length mismatch: |") + low_name + "| = |" +
                                    high_name + "| = m >= 1 and |" + mid_name +
                                    "| = 2m-1 required");
    auto max_of = [](const Permutation& p) { return *std::max_element(p.symbols().begin(), p.symbols().end()); };
    auto min_of = [](const Permutation& p) { return *std::min_element(p.symbols().begin(), p.symbols().end()); };
    if (max_of(low) >= min_of(mid) || max_of(mid) >= min_of(high))
        throw std::invalid_argument(std::string(sep_cond) + " violated: need " + low_name +
                                    " < " + mid_name + " < " + high_name + " symbol-wise");
    if (!is_square_free(mid))
        throw std::invalid_argument(std::string(sf_cond) + " violated: " + mid_name +
                                    " contains a square");
}

// odd1 at indices == 1 mod 4, odd3 at == 3 mod 4, mid at even indices.
Permutation interleave(const Permutation& odd1, const Permutation& mid, const Permutation& odd3) {
    const int m = odd1.size();
    std::vector<int> out(static_cast<std::size_t>(4 * m - 1));
    for (int i = 1; i <= 4 * m - 1; ++i) {
        int v;
        if (i % 4 == 1)
            v = odd1.at1((i + 3) / 4);
        else if (i % 4 == 3)
            v = odd3.at1((i + 1) / 4);
        else
            v = mid.at1(i / 2);
        out[static_cast<std::size_t>(i - 1)] = v;
    }
    return Permutation(std::move(out));
}

}  // namespace

std::optional<LevelDecomposition> level_decomposition(const Permutation& p) {
    for (int offset = 0; offset < 4; ++offset)
        if (offset_valid(p, offset)) return make_levels(p, offset);
    return std::nullopt;
}

bool is_hml(const Permutation& p) {
    for (int offset = 0; offset < 4; ++offset) {
        if (!offset_valid(p, offset)) continue;
        if (separated_and_medium_square_free(p, make_levels(p, offset))) return true;
    }
    return false;
}

HmlPermutation construction1(const Permutation& a, const Permutation& b, const Permutation& c) {
    check_blocks(a, b, c, "A", "B", "C", "(A1)", "(A2)");
    return {interleave(a, b, c), HmlKind::construction1};
}

HmlPermutation construction2(const Permutation& u, const Permutation& v, const Permutation& w) {
    check_blocks(w, v, u, "W", "V", "U", "(B1)", "(B2)");
    return {interleave(u, v, w), HmlKind::construction2};
}

bool forbidden_factor_check(const Permutation& p) {
    static const int patterns[4][4] = {{2, 3, 4, 1}, {3, 2, 1, 4}, {4, 1, 2, 3}, {1, 4, 3, 2}};
    auto s = p.span();
    for (int start = 0; start + 4 <= p.size(); ++start) {
        auto f = s.subspan(static_cast<std::size_t>(start), 4);
        for (const auto& pat : patterns)
            if (factors_isomorphic(f, std::span<const int>(pat, 4))) return false;
    }
    return true;
}

Permutation wrap1(int x, const HmlPermutation& p1, int y) {
    if (p1.kind != HmlKind::construction1)
        throw std::invalid_argument("wrap1 requires a construction1 permutation");
    auto [mn, mx] = std::minmax_element(p1.perm.symbols().begin(), p1.perm.symbols().end());
    if (x <= *mx || y >= *mn)
        throw std::invalid_argument("wrap1 requires x > every symbol > y");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p1.perm.size() + 2));
    out.push_back(x);
    out.insert(out.end(), p1.perm.symbols().begin(), p1.perm.symbols().end());
    out.push_back(y);
    return Permutation(std::move(out));
}

Permutation wrap2(int z, const HmlPermutation& p2, int t) {
    if (p2.kind != HmlKind::construction2)
        throw std::invalid_argument("wrap2 requires a construction2 permutation");
    auto [mn, mx] = std::minmax_element(p2.perm.symbols().begin(), p2.perm.symbols().end());
    if (z >= *mn || t <= *mx)
        throw std::invalid_argument("wrap2 requires z < every symbol < t");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p2.perm.size() + 2));
    out.push_back(z);
    out.insert(out.end(), p2.perm.symbols().begin(), p2.perm.symbols().end());
    out.push_back(t);
    return Permutation(std::move(out));
}

namespace {

// Split p into its three index-class blocks and rerun the construction.
std::optional<HmlPermutation> reassemble(const Permutation& p, HmlKind kind) {
    const int n = p.size();
    if (n < 3 || n % 4 != 3) return std::nullopt;
    std::vector<int> odd1, mid, odd3;
    for (int i = 1; i <= n; ++i) {
        if (i % 4 == 1)
            odd1.push_back(p.at1(i));
        else if (i % 4 == 3)
            odd3.push_back(p.at1(i));
        else
            mid.push_back(p.at1(i));
    }
    try {
        HmlPermutation h = kind == HmlKind::construction1
                               ? construction1(Permutation(odd1), Permutation(mid), Permutation(odd3))
                               : construction2(Permutation(odd1), Permutation(mid), Permutation(odd3));
        return h;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<HmlPermutation> as_construction1(const Permutation& p) {
    return reassemble(p, HmlKind::construction1);
}

std::optional<HmlPermutation> as_construction2(const Permutation& p) {
    return reassemble(p, HmlKind::construction2);
}

Permutation relabel_onto(const Permutation& p, int lo) {
    Permutation c = canonicalize(p);
    std::vector<int> out(c.symbols().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[static_cast<int>(i)] + lo - 1;
    return Permutation(std::move(out));
}

namespace {

Permutation ascending(int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation descending(int hi, int lo) {
    std::vector<int> v;
    for (int x = hi; x >= lo; --x) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation special_core(int m) {
    if (m == 2) return Permutation({3, 2, 1});
    if (m % 2 == 0) {
        // m = 2k: construction2 output of length 4k-1 = 2m-1 already has the
        // two descents at positions (2,3) and (2m-3,2m-2).
        int k = m / 2;
        Permutation w = ascending(1, k);
        Permutation v = k == 1 ? Permutation({2}) : relabel_onto(special_core(k), k + 1);
        Permutation u = ascending(3 * k, 4 * k - 1);
        return construction2(u, v, w).perm;
    }
    // m = 2k+1: build a construction1 permutation of length 2m+1, strip the
    // first and last symbols, canonicalize.
    int mm = (m - 1) / 2 + 1;  // block size of the wider construction
    Permutation a = ascending(1, mm);
    Permutation b = relabel_onto(special_core(mm), mm + 1);
    Permutation c = ascending(3 * mm, 4 * mm - 1);
    Permutation q = construction1(a, b, c).perm;
    return canonicalize(factor(q, 2, q.size() - 1));
}

}  // namespace

Permutation special_square_free(int m) {
    if (m < 2) throw std::invalid_argument("special_square_free requires m >= 2");
    Permutation r = special_core(m);
    const int n = 2 * m - 1;
    if (r.size() != n || !is_square_free(r) || r.at1(2) <= r.at1(3) ||
        r.at1(2 * m - 3) <= r.at1(2 * m - 2))
        throw std::logic_error("special_square_free postcondition failed for m = " +
                               std::to_string(m));
    return r;
}

EmParts build_em(int m) {
    if (m < 2) throw std::invalid_argument("build_em requires m >= 2");
    EmParts parts;
    parts.m = m;
    parts.r = special_square_free(m);
    parts.y = relabel_onto(parts.r, 3 * m + 4);
    parts.x = descending(3 * m + 3, 2 * m + 4);
    parts.z = descending(6 * m + 2, 5 * m + 3);
    HmlPermutation hp = construction1(parts.x, parts.y, parts.z);
    parts.h_prime = hp.perm;
    parts.h = wrap1(6 * m + 3, hp, 2 * m + 3);
    parts.s = ascending(6 * m + 4, 8 * m + 4);
    parts.t = ascending(2, 2 * m + 2);
    HmlPermutation ep = construction2(parts.s, parts.h, parts.t);
    parts.e_prime = ep.perm;
    parts.e = wrap2(1, ep, 8 * m + 5);
    return parts;
}

}  // namespace sfperm
