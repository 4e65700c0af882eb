#pragma once

/**
 * @file branches.hpp
 * @brief Branches of the p-th root on the unit circle and the search for a
 * branch vector that maps the h-th roots of unity back onto themselves.
 *
 * The l-th branch sends e^{i*theta} to e^{i*(theta + 2*pi*l)/p}, with theta
 * taken as the canonical argument in [0, 2*pi). Applied to omega_h^k this
 * lands on e^{2*pi*i*(k + h*l)/(h*p)}, which is again an h-th root of unity
 * exactly when p divides k + h*l. Such an l exists for every k iff
 * gcd(h, p) = 1, and then it is unique mod p:
 *
 *     l_k = -k * h^{-1}  (mod p)
 */

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyclotomic.hpp"
#include "modcore.hpp"

namespace crs {

class BranchVector {
public:
    BranchVector(Modulus h, Int p, std::vector<Int> l) : h_(h), p_(p), l_(std::move(l)) {
        if (p_ < 1) throw std::domain_error("root degree p must be >= 1, got " + std::to_string(p_));
        if (static_cast<Int>(l_.size()) != h_.value()) {
            throw std::domain_error("branch vector needs " + std::to_string(h_.value()) + " entries, got " +
                                    std::to_string(l_.size()));
        }
        for (Int lk : l_) {
            if (lk < 0 || lk >= p_) {
                throw std::domain_error("branch index " + std::to_string(lk) + " outside [0, " +
                                        std::to_string(p_) + ")");
            }
        }
    }

    BranchVector(Int h, Int p, std::vector<Int> l) : BranchVector(Modulus(h), p, std::move(l)) {}

    Modulus h() const noexcept { return h_; }
    Int p() const noexcept { return p_; }
    std::span<const Int> l() const noexcept { return l_; }
    Int operator[](std::size_t k) const { return l_[k]; }

    friend bool operator==(const BranchVector&, const BranchVector&) = default;
    friend auto operator<=>(const BranchVector& a, const BranchVector& b) {
        return std::lexicographical_compare_three_way(a.l_.begin(), a.l_.end(), b.l_.begin(), b.l_.end());
    }

private:
    Modulus h_;
    Int p_;
    std::vector<Int> l_;
};

/// gcd(h, p) > 1: no branch index makes k + h*l divisible by p at witness_k.
struct NoSolution {
    Int gcd;
    Int witness_k;

    friend bool operator==(const NoSolution&, const NoSolution&) = default;
};

using BranchSolution = std::variant<BranchVector, NoSolution>;

struct BranchSearchReport {
    Modulus h;
    Int p;
    std::vector<BranchVector> solutions;  // lexicographic
    bool exhaustive = false;
};

class budget_exceeded : public std::domain_error {
public:
    budget_exceeded(Int p, Int h, Int cap)
        : std::domain_error("branch search over " + std::to_string(p) + "^" + std::to_string(h) +
                            " vectors exceeds budget " + std::to_string(cap)) {}
};

/// Thrown when the q-th power of the h-th roots has fewer than h points, so
/// a branch vector has nothing to index.
class collapsed_set : public std::domain_error {
public:
    collapsed_set(Int q, Int h, Int g)
        : std::domain_error("omega_" + std::to_string(h) + "^" + std::to_string(q) + " collapses (gcd " +
                            std::to_string(g) + ")"),
          gcd_(g) {}

    Int gcd() const noexcept { return gcd_; }

private:
    Int gcd_;
};

/// The l-th branch of the p-th root at pt.
inline CyclotomicPoint branch_root(const CyclotomicPoint& pt, Int l, Int p) {
    if (p < 1) throw std::domain_error("root degree p must be >= 1, got " + std::to_string(p));
    if (l < 0 || l >= p) {
        throw std::domain_error("branch index " + std::to_string(l) + " outside [0, " + std::to_string(p) + ")");
    }
    return point_from_exponent(checked_add(pt.num(), checked_mul(pt.den(), l)), checked_mul(pt.den(), p));
}

namespace detail {

// Branch k of the vector goes to the k-th point of pts in angle order.
inline RootSet apply_positional(const RootSet& pts, std::span<const Int> l, Int p) {
    RootSet out;
    std::size_t k = 0;
    for (const auto& pt : pts) out.insert(branch_root(pt, l[k++], p));
    return out;
}

}  // namespace detail

inline RootSet apply_branches(const BranchVector& bv) {
    return detail::apply_positional(omega_set(bv.h()), bv.l(), bv.p());
}

inline BranchSolution solve_branch_vector(Modulus h, Int p) {
    if (p < 1) throw std::domain_error("root degree p must be >= 1, got " + std::to_string(p));
    const Int d = gcd(h.value(), p);
    if (d != 1) {
        Int witness = 0;
        while (witness % d == 0) ++witness;  // smallest k with d not dividing k
        return NoSolution{d, witness};
    }
    std::vector<Int> l(static_cast<std::size_t>(h.value()), 0);
    if (p > 1) {
        const Modulus pm(p);
        const Int h_inv = mod_inverse(h.value(), pm);
        for (Int k = 0; k < h.value(); ++k) {
            l[static_cast<std::size_t>(k)] = canonical_residue(checked_mul(-canonical_residue(k, pm), h_inv), pm);
        }
    }
    return BranchVector(h, p, std::move(l));
}

/// Enumerates every vector in {0, ..., p-1}^h and keeps those that map the
/// h-th roots onto themselves. Refuses to start when p^h > cap.
inline BranchSearchReport brute_force_branch_search(Modulus h, Int p, Int cap) {
    if (p < 1) throw std::domain_error("root degree p must be >= 1, got " + std::to_string(p));
    const Int hv = h.value();
    Int total = 1;
    for (Int i = 0; i < hv; ++i) {
        if (total > cap / p) throw budget_exceeded(p, hv, cap);
        total *= p;
    }
    if (total > cap) throw budget_exceeded(p, hv, cap);

    // table[k][l] = branch l of omega_h^k, as an index into the h-th roots,
    // or -1 when the branch leaves them.
    const auto hs = static_cast<std::size_t>(hv);
    const auto ps = static_cast<std::size_t>(p);
    std::vector<Int> table(hs * ps, -1);
    std::size_t k = 0;
    for (const auto& pt : omega_set(h)) {
        for (Int l = 0; l < p; ++l) {
            const auto img = branch_root(pt, l, p);
            if (hv % img.den() == 0) table[k * ps + static_cast<std::size_t>(l)] = img.num() * (hv / img.den());
        }
        ++k;
    }

    BranchSearchReport report{h, p, {}, true};
    std::vector<Int> digits(hs, 0);
    std::vector<char> hit(hs);
    for (Int n = 0; n < total; ++n) {
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < hs && ok; ++i) {
            const Int idx = table[i * ps + static_cast<std::size_t>(digits[i])];
            if (idx < 0 || hit[static_cast<std::size_t>(idx)]) {
                ok = false;
            } else {
                hit[static_cast<std::size_t>(idx)] = 1;
            }
        }
        if (ok) report.solutions.emplace_back(h, p, digits);

        // Odometer with the last position fastest, so output is lexicographic.
        for (std::size_t i = hs; i-- > 0;) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return report;
}

namespace detail {

inline void require_match(Modulus h, Int p, const BranchVector& bv) {
    if (bv.h() != h || bv.p() != p) {
        throw std::domain_error("branch vector is for (h=" + std::to_string(bv.h().value()) +
                                ", p=" + std::to_string(bv.p()) + "), expected (h=" + std::to_string(h.value()) +
                                ", p=" + std::to_string(p) + ")");
    }
}

}  // namespace detail

/// ((omega_h)_l^{1/p})^q
inline RootSet rational_power_root_first(Modulus h, Int p, Int q, const BranchVector& bv) {
    detail::require_match(h, p, bv);
    return power_set(apply_branches(bv), q);
}

/// (omega_h^q)_l^{1/p}. Throws collapsed_set when gcd(q, h) > 1.
inline RootSet rational_power_power_first(Modulus h, Int p, Int q, const BranchVector& bv) {
    detail::require_match(h, p, bv);
    const RootSet powered = power_set(omega_set(h), q);
    if (static_cast<Int>(powered.size()) < h.value()) {
        throw collapsed_set(q, h.value(), gcd(q, h.value()));
    }
    return detail::apply_positional(powered, bv.l(), p);
}

}  // namespace crs
