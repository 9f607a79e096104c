#include "sfperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sfperm {

Permutation::Permutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw std::invalid_argument("duplicate symbol: " + std::to_string(*dup));
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    Permutation p;
    p.symbols_ = std::move(v);
    return p;
}

int Permutation::at1(int idx) const {
    if (idx < 1 || idx > size())
        throw std::out_of_range("index " + std::to_string(idx) + " out of range [1," +
                                std::to_string(size()) + "]");
    return symbols_[static_cast<std::size_t>(idx - 1)];
}

bool Permutation::is_canonical() const {
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size(); ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ' ';
        os << symbols_[static_cast<std::size_t>(i)];
    }
    return os.str();
}

bool factors_isomorphic(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 1; i < u.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((u[j] < u[i]) != (v[j] < v[i])) return false;
    return true;
}

Permutation canonicalize(const Permutation& p) {
    auto sorted = p.symbols();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(sorted.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), p[static_cast<int>(i)]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(out));
}

bool order_isomorphic(const Permutation& p, const Permutation& q) {
    return factors_isomorphic(p.span(), q.span());
}

Permutation factor(const Permutation& p, int i, int j) {
    if (i < 1 || j > p.size() || i > j)
        throw std::out_of_range("factor range [" + std::to_string(i) + "," + std::to_string(j) +
                                "] invalid for length " + std::to_string(p.size()));
    std::vector<int> out(p.symbols().begin() + (i - 1), p.symbols().begin() + j);
    return Permutation(std::move(out));
}

std::optional<SquareWitness> find_square(const Permutation& p) {
    const int n = p.size();
    for (int start = 1; start <= n; ++start) {
        for (int half = 2; start + 2 * half - 1 <= n; ++half) {
            auto s = p.span();
            if (factors_isomorphic(s.subspan(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(half)),
                                   s.subspan(static_cast<std::size_t>(start - 1 + half), static_cast<std::size_t>(half))))
                return SquareWitness{start, half};
        }
    }
    return std::nullopt;
}

bool is_square_free(const Permutation& p) { return !find_square(p).has_value(); }

bool contains_square(const Permutation& p) {
    const int n = p.size();
    auto s = p.span();
    for (int half = 2; 2 * half <= n; ++half)
        for (int start = 0; start + 2 * half <= n; ++start)
            if (factors_isomorphic(s.subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(half)),
                                   s.subspan(static_cast<std::size_t>(start + half), static_cast<std::size_t>(half))))
                return true;
    return false;
}

bool contains_square_of_half(const Permutation& p, int half) {
    if (half < 2) return false;
    auto s = p.span();
    for (int start = 0; start + 2 * half <= p.size(); ++start)
        if (factors_isomorphic(s.subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(half)),
                               s.subspan(static_cast<std::size_t>(start + half), static_cast<std::size_t>(half))))
            return true;
    return false;
}

bool has_square_ending_at(std::span<const int> prefix) {
    const std::size_t k = prefix.size();
    for (std::size_t half = 2; 2 * half <= k; ++half)
        if (factors_isomorphic(prefix.subspan(k - 2 * half, half), prefix.subspan(k - half, half)))
            return true;
    return false;
}

Permutation extension_at(const Permutation& p, int pos, int rank) {
    const int n = p.size();
    if (n == 0) throw std::invalid_argument("cannot extend an empty permutation");
    if (pos < 0 || pos > n)
        throw std::out_of_range("position " + std::to_string(pos) + " out of range [0," +
                                std::to_string(n) + "]");
    if (rank < 1 || rank > n + 1)
        throw std::out_of_range("rank " + std::to_string(rank) + " out of range [1," +
                                std::to_string(n + 1) + "]");
    Permutation c = canonicalize(p);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int v : c.symbols()) out.push_back(v >= rank ? v + 1 : v);
    out.insert(out.begin() + pos, rank);
    return Permutation(std::move(out));
}

std::vector<Permutation> extensions(const Permutation& p, int pos) {
    const int n = p.size();
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int rank = 1; rank <= n + 1; ++rank) out.push_back(extension_at(p, pos, rank));
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
        if (i >= text.size()) break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw std::invalid_argument("malformed permutation near '" +
                                        std::string(text.substr(i, 8)) + "'");
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Permutation(std::move(out));
}

}  // namespace sfperm
