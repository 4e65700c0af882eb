#pragma once

/**
 * @file residue_system.hpp
 * @brief Candidate residue systems, the membership test and the transforms
 * that preserve or break it.
 *
 * A candidate is an ordered list of exactly h integers together with the
 * modulus h. It is a complete residue system when the residue map into
 * {0, ..., h-1} is injective (equivalently surjective, since both sides have
 * h members). Candidates are lists rather than sets so that repeated
 * integers are representable; such a candidate simply fails the test.
 *
 * The transforms are total constructors. Whether the result is complete
 * depends on gcd conditions that the caller checks, which is what lets the
 * failing direction of each law be built and inspected.
 */

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcore.hpp"

namespace crs {

class CrsCandidate {
public:
    CrsCandidate(Modulus h, std::vector<Int> elements) : h_(h), elements_(std::move(elements)) {
        if (static_cast<Int>(elements_.size()) != h_.value()) {
            throw std::domain_error("candidate mod " + std::to_string(h_.value()) + " needs exactly " +
                                    std::to_string(h_.value()) + " elements, got " +
                                    std::to_string(elements_.size()));
        }
    }

    CrsCandidate(Int h, std::vector<Int> elements) : CrsCandidate(Modulus(h), std::move(elements)) {}

    Modulus modulus() const noexcept { return h_; }
    std::span<const Int> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    Int operator[](std::size_t i) const { return elements_[i]; }

    friend bool operator==(const CrsCandidate&, const CrsCandidate&) = default;

private:
    Modulus h_;
    std::vector<Int> elements_;
};

/// Canonical residues of a candidate, in element order.
struct ResidueProfile {
    Modulus modulus;
    std::vector<Int> residues;

    friend bool operator==(const ResidueProfile&, const ResidueProfile&) = default;
};

inline ResidueProfile residue_profile(const CrsCandidate& c) {
    ResidueProfile out{c.modulus(), {}};
    out.residues.reserve(c.size());
    for (Int a : c.elements()) out.residues.push_back(canonical_residue(a, c.modulus()));
    return out;
}

/// True iff the residue map is injective.
inline bool is_crs(const CrsCandidate& c) {
    std::vector<bool> seen(static_cast<std::size_t>(c.modulus().value()), false);
    for (Int a : c.elements()) {
        auto r = static_cast<std::size_t>(canonical_residue(a, c.modulus()));
        if (seen[r]) return false;
        seen[r] = true;
    }
    return true;
}

/// The system {0, 1, ..., h-1}.
inline CrsCandidate canonical_crs(Modulus h) {
    std::vector<Int> elements(static_cast<std::size_t>(h.value()));
    for (Int i = 0; i < h.value(); ++i) elements[static_cast<std::size_t>(i)] = i;
    return {h, std::move(elements)};
}

/// {p*a_i + l}. Complete (given a complete input) iff gcd(p, h) = 1.
inline CrsCandidate affine(const CrsCandidate& c, Int p, Int l) {
    std::vector<Int> out;
    out.reserve(c.size());
    for (Int a : c.elements()) out.push_back(checked_add(checked_mul(p, a), l));
    return {c.modulus(), std::move(out)};
}

/// {p*a_i}. Complete (given a complete input) iff gcd(p, h) = 1.
inline CrsCandidate scale(const CrsCandidate& c, Int p) {
    return affine(c, p, 0);
}

/// {a_i + h*l_i}. Complete iff the input is.
inline CrsCandidate shift_multiples(const CrsCandidate& c, std::span<const Int> ls) {
    if (ls.size() != c.size()) {
        throw std::domain_error("shift vector has " + std::to_string(ls.size()) + " entries, modulus is " +
                                std::to_string(c.modulus().value()));
    }
    const Int h = c.modulus().value();
    std::vector<Int> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(checked_add(c[i], checked_mul(h, ls[i])));
    return {c.modulus(), std::move(out)};
}

}  // namespace crs
