#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact roots of unity and finite sets of them.
 *
 * A point e^{2*pi*i*num/den} is stored as the reduced fraction num/den of a
 * full turn, with 0 <= num < den. Reduced form makes points of different
 * orders compare structurally: the square of a primitive fourth root is
 * stored as 1/2, the same as -1.
 *
 * RootSet keeps its points deduplicated and sorted by angle, so the k-th
 * element of omega_set(h) is omega^k.
 */

#include <cmath>
#include <compare>
#include <complex>
#include <iterator>
#include <numbers>
#include <set>
#include <span>
#include <stdexcept>
#include <string>

#include "modcore.hpp"

namespace crs {

class CyclotomicPoint {
public:
    /// The point 1.
    constexpr CyclotomicPoint() noexcept = default;

    constexpr Int num() const noexcept { return num_; }
    constexpr Int den() const noexcept { return den_; }

    friend constexpr bool operator==(const CyclotomicPoint&, const CyclotomicPoint&) = default;

    /// Ordered by angle in [0, 2*pi).
    friend constexpr std::strong_ordering operator<=>(const CyclotomicPoint& a, const CyclotomicPoint& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    /// e^{2*pi*i*k/n}, reduced. Requires n >= 1.
    friend constexpr CyclotomicPoint point_from_exponent(Int k, Int n);

private:
    constexpr CyclotomicPoint(Int num, Int den) noexcept : num_(num), den_(den) {}

    Int num_ = 0;
    Int den_ = 1;
};

constexpr CyclotomicPoint point_from_exponent(Int k, Int n) {
    if (n < 1) throw std::domain_error("root order must be >= 1, got " + std::to_string(n));
    if (n == 1) return {};
    Int r = canonical_residue(k, Modulus(n));
    if (r == 0) return {};
    Int g = gcd(r, n);
    return {r / g, n / g};
}

inline std::complex<double> eval_complex(const CyclotomicPoint& pt) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(pt.num()) / static_cast<double>(pt.den());
    return {std::cos(angle), std::sin(angle)};
}

class RootSet {
public:
    using container = std::set<CyclotomicPoint>;
    using const_iterator = container::const_iterator;

    RootSet() = default;

    template<std::input_iterator It>
    RootSet(It first, It last) : points_(first, last) {}

    RootSet(std::initializer_list<CyclotomicPoint> pts) : points_(pts) {}

    void insert(const CyclotomicPoint& pt) { points_.insert(pt); }
    bool contains(const CyclotomicPoint& pt) const { return points_.contains(pt); }

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const_iterator begin() const noexcept { return points_.begin(); }
    const_iterator end() const noexcept { return points_.end(); }

    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    container points_;
};

/// All h-th roots of unity.
inline RootSet omega_set(Modulus h) {
    RootSet out;
    for (Int k = 0; k < h.value(); ++k) out.insert(point_from_exponent(k, h.value()));
    return out;
}

/// {omega_h^{a_i}}; repeated residues collapse.
inline RootSet exponent_set(std::span<const Int> exponents, Modulus h) {
    if (static_cast<Int>(exponents.size()) != h.value()) {
        throw std::domain_error("exponent list has " + std::to_string(exponents.size()) + " entries, modulus is " +
                                std::to_string(h.value()));
    }
    RootSet out;
    for (Int a : exponents) out.insert(point_from_exponent(a, h.value()));
    return out;
}

/// Elementwise p-th power. p may be zero or negative.
inline RootSet power_set(const RootSet& s, Int p) {
    RootSet out;
    for (const auto& pt : s) {
        const Int reduced_p = pt.den() == 1 ? 0 : canonical_residue(p, Modulus(pt.den()));
        out.insert(point_from_exponent(checked_mul(pt.num(), reduced_p), pt.den()));
    }
    return out;
}

inline bool equals_omega(const RootSet& s, Modulus h) {
    if (static_cast<Int>(s.size()) != h.value()) return false;
    return s == omega_set(h);
}

}  // namespace crs
