#pragma once

#include <json.hpp>

#include "sfperm/constructions.hpp"
#include "sfperm/crucial.hpp"
#include "sfperm/search.hpp"
#include "sfperm/verify.hpp"

namespace sfperm {

inline void to_json(nlohmann::json& j, const Permutation& p) { j = p.symbols(); }

inline void to_json(nlohmann::json& j, const SquareWitness& w) {
    j = {{"start", w.start}, {"half_len", w.half_len}};
}

inline void to_json(nlohmann::json& j, const PositionSet& s) {
    j = {{"n", s.n}, {"members", s.members}};
}

inline void to_json(nlohmann::json& j, const EmParts& p) {
    j = {{"m", p.m},          {"r", p.r},           {"y", p.y},
         {"x", p.x},          {"z", p.z},           {"h_prime", p.h_prime},
         {"h", p.h},          {"s", p.s},           {"t", p.t},
         {"e_prime", p.e_prime}, {"e", p.e}};
}

inline void to_json(nlohmann::json& j, const SearchResult& r) {
    j = {{"n", r.n},
         {"total_enumerated", r.total_enumerated},
         {"hit_count", r.hits.size()},
         {"hits", r.hits},
         {"elapsed_seconds", r.elapsed_seconds}};
}

inline void to_json(nlohmann::json& j, const CheckResult& c) {
    j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
    j = {{"seed", r.seed}, {"all_pass", r.all_pass()}, {"checks", r.checks}};
}

}  // namespace sfperm
