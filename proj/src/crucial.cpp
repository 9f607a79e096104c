#include "sfperm/crucial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sfperm {

PositionSet::PositionSet(int n_, std::vector<int> members_) : n(n_), members(std::move(members_)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int pos : members)
        if (pos < 0 || pos > n)
            throw std::invalid_argument("position " + std::to_string(pos) +
                                        " outside {0,...," + std::to_string(n) + "}");
}

bool PositionSet::contains(int pos) const {
    return std::binary_search(members.begin(), members.end(), pos);
}

std::string PositionSet::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) os << ',';
        os << members[i];
    }
    return os.str();
}

PositionPattern PositionPattern::parse(std::string_view text) {
    PositionPattern pat;
    if (text == "left") { pat.keyword = Keyword::left; return pat; }
    if (text == "right") { pat.keyword = Keyword::right; return pat; }
    if (text == "bi") { pat.keyword = Keyword::bi; return pat; }
    if (text == "s") { pat.keyword = Keyword::s; return pat; }
    if (text == "interior") { pat.keyword = Keyword::interior; return pat; }

    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i >= text.size()) break;
        std::size_t end = text.find(',', i);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(i, end - i);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        Term term;
        if (!tok.empty() && tok.front() == 'n') {
            term.n_relative = true;
            tok.remove_prefix(1);
            if (tok.empty()) {
                term.value = 0;
            } else {
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), term.value);
                if (ec != std::errc{} || ptr != tok.data() + tok.size() || term.value > 0)
                    throw std::invalid_argument("malformed position term 'n" + std::string(tok) + "'");
            }
        } else {
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), term.value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::invalid_argument("malformed position term '" + std::string(tok) + "'");
        }
        pat.terms.push_back(term);
        i = end;
    }
    if (pat.terms.empty()) throw std::invalid_argument("empty position set");
    return pat;
}

PositionSet PositionPattern::resolve(int n) const {
    std::vector<int> members;
    switch (keyword) {
        case Keyword::left: members = {0}; break;
        case Keyword::right: members = {n}; break;
        case Keyword::bi: members = {0, n}; break;
        case Keyword::s:
            for (int i = 0; i <= n; ++i) members.push_back(i);
            break;
        case Keyword::interior:
            for (int i = 3; i <= n - 3; ++i) members.push_back(i);
            break;
        case Keyword::none:
            for (const Term& t : terms) members.push_back(t.n_relative ? n + t.value : t.value);
            break;
    }
    return PositionSet(n, std::move(members));
}

std::string PositionPattern::str() const {
    switch (keyword) {
        case Keyword::left: return "left";
        case Keyword::right: return "right";
        case Keyword::bi: return "bi";
        case Keyword::s: return "s";
        case Keyword::interior: return "interior";
        case Keyword::none: break;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ',';
        if (terms[i].n_relative) {
            os << 'n';
            if (terms[i].value != 0) os << terms[i].value;
        } else {
            os << terms[i].value;
        }
    }
    return os.str();
}

bool position_blocked(const Permutation& p, int pos) {
    const int n = p.size();
    for (int rank = 1; rank <= n + 1; ++rank)
        if (!contains_square(extension_at(p, pos, rank))) return false;
    return true;
}

std::optional<Permutation> square_free_extension_witness(const Permutation& p, int pos) {
    const int n = p.size();
    for (int rank = 1; rank <= n + 1; ++rank) {
        Permutation q = extension_at(p, pos, rank);
        if (!contains_square(q)) return q;
    }
    return std::nullopt;
}

bool is_p_crucial(const Permutation& p, const PositionSet& s, bool strict) {
    if (s.n != p.size())
        throw std::invalid_argument("position set is sized for length " + std::to_string(s.n) +
                                    ", permutation has length " + std::to_string(p.size()));
    if (!is_square_free(p)) {
        if (strict) throw std::invalid_argument("permutation is not square-free");
        return false;
    }
    for (int pos : s.members)
        if (!position_blocked(p, pos)) return false;
    return true;
}

bool named_crucial(const Permutation& p, CrucialKind kind) {
    const int n = p.size();
    std::vector<int> members;
    switch (kind) {
        case CrucialKind::left: members = {0}; break;
        case CrucialKind::right: members = {n}; break;
        case CrucialKind::bi: members = {0, n}; break;
        case CrucialKind::s:
            for (int i = 0; i <= n; ++i) members.push_back(i);
            break;
    }
    return is_p_crucial(p, PositionSet(n, std::move(members)));
}

PositionSet blocked_positions(const Permutation& p) {
    std::vector<int> members;
    for (int pos = 0; pos <= p.size(); ++pos)
        if (position_blocked(p, pos)) members.push_back(pos);
    return PositionSet(p.size(), std::move(members));
}

}  // namespace sfperm
