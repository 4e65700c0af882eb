#pragma once

// JSON records for the library types. Objects use insertion order so that
// printed output is stable:
//
//   candidate       {"h": 3, "elements": [3, 4, 5]}
//   profile         {"h": 3, "residues": [0, 1, 2]}
//   point           {"num": 1, "den": 3}
//   root set        [point, ...] ascending by angle
//   branch vector   {"h": 3, "p": 2, "l": [0, 1, 0]}
//   search report   {"h": 3, "p": 2, "solutions": [[0, 1, 0]], "exhaustive": true}

#include <nlohmann/json.hpp>

#include "branches.hpp"
#include "cyclotomic.hpp"
#include "residue_system.hpp"

namespace crs {

using json = nlohmann::ordered_json;

inline json to_json(const CrsCandidate& c) {
    return json{{"h", c.modulus().value()}, {"elements", std::vector<Int>(c.elements().begin(), c.elements().end())}};
}

/// Throws json exceptions on missing or mistyped fields, std::domain_error on
/// an invalid modulus or length.
inline CrsCandidate candidate_from_json(const json& j) {
    if (!j.is_object()) throw std::domain_error("candidate record must be an object");
    return CrsCandidate(j.at("h").get<Int>(), j.at("elements").get<std::vector<Int>>());
}

inline json to_json(const ResidueProfile& p) {
    return json{{"h", p.modulus.value()}, {"residues", p.residues}};
}

inline json to_json(const CyclotomicPoint& pt) {
    return json{{"num", pt.num()}, {"den", pt.den()}};
}

inline json to_json(const RootSet& s) {
    json arr = json::array();
    for (const auto& pt : s) arr.push_back(to_json(pt));
    return arr;
}

inline json to_json(const BranchVector& bv) {
    return json{{"h", bv.h().value()}, {"p", bv.p()}, {"l", std::vector<Int>(bv.l().begin(), bv.l().end())}};
}

inline BranchVector branch_vector_from_json(const json& j) {
    if (!j.is_object()) throw std::domain_error("branch vector record must be an object");
    return BranchVector(j.at("h").get<Int>(), j.at("p").get<Int>(), j.at("l").get<std::vector<Int>>());
}

inline json to_json(const NoSolution& n) {
    return json{{"gcd", n.gcd}, {"witness_k", n.witness_k}};
}

inline json to_json(const BranchSearchReport& r) {
    json solutions = json::array();
    for (const auto& bv : r.solutions) solutions.push_back(to_json(bv));
    return json{{"h", r.h.value()}, {"p", r.p}, {"solutions", std::move(solutions)}, {"exhaustive", r.exhaustive}};
}

}  // namespace crs
