#pragma once

/**
 * @file modcore.hpp
 * @brief Checked integer arithmetic, gcd machinery and congruence predicates.
 *
 * Everything here works on a fixed-width signed integer. Arithmetic that
 * would leave the representable range throws crs::overflow_error instead
 * of wrapping, since a wrapped product silently breaks every congruence
 * test built on top of it.
 */

#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace crs {

using Int = std::int64_t;

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Checked arithmetic. Every operation on user-supplied integers goes
// through one of these.

template<std::signed_integral T>
constexpr T checked_add(T a, T b) {
    T r{};
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

template<std::signed_integral T>
constexpr T checked_sub(T a, T b) {
    T r{};
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

template<std::signed_integral T>
constexpr T checked_mul(T a, T b) {
    T r{};
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

template<std::signed_integral T>
constexpr T checked_neg(T a) {
    return checked_sub(T{0}, a);
}

template<std::signed_integral T>
constexpr T checked_abs(T a) {
    return a < 0 ? checked_neg(a) : a;
}

/// A modulus m >= 2.
class Modulus {
public:
    constexpr explicit Modulus(Int m) : m_(m) {
        if (m < 2) throw std::domain_error("modulus must be >= 2, got " + std::to_string(m));
    }

    constexpr Int value() const noexcept { return m_; }
    constexpr operator Int() const noexcept { return m_; }

    friend constexpr bool operator==(Modulus, Modulus) = default;

private:
    Int m_;
};

/// Nonnegative greatest common divisor. gcd(0, 0) is a domain error.
template<std::signed_integral T>
constexpr T gcd(T a, T b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    using U = std::make_unsigned_t<T>;
    // Magnitudes in the unsigned type so that |min()| is representable.
    U x = a < 0 ? U(0) - U(a) : U(a);
    U y = b < 0 ? U(0) - U(b) : U(b);
    while (y != 0) {
        U t = x % y;
        x = y;
        y = t;
    }
    if (x > U(std::numeric_limits<T>::max())) throw overflow_error("gcd not representable");
    return T(x);
}

template<std::signed_integral T>
struct EgcdResult {
    T g;
    T x;
    T y;

    friend constexpr bool operator==(const EgcdResult&, const EgcdResult&) = default;
};

/// Extended Euclid: g = gcd(a, b) and a*x + b*y = g. The (x, y) pair is
/// whatever the iteration produces; only the identity is guaranteed.
template<std::signed_integral T>
constexpr EgcdResult<T> egcd(T a, T b) {
    if (a == 0 && b == 0) throw std::domain_error("egcd(0, 0) is undefined");
    T old_r = a, r = b;
    T old_s = 1, s = 0;
    T old_t = 0, t = 1;
    while (r != 0) {
        if (old_r == std::numeric_limits<T>::min() && r == -1) throw overflow_error("integer overflow in division");
        T q = old_r / r;
        T nr = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = nr;
        T ns = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = ns;
        T nt = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = nt;
    }
    if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
    return {old_r, old_s, old_t};
}

/// Thrown by mod_inverse when gcd(a, m) != 1.
class not_invertible : public std::domain_error {
public:
    not_invertible(Int value, Int modulus, Int g)
        : std::domain_error(std::to_string(value) + " is not invertible mod " + std::to_string(modulus) +
                            " (gcd " + std::to_string(g) + ")"),
          gcd_(g) {}

    Int gcd() const noexcept { return gcd_; }

private:
    Int gcd_;
};

/// The representative of a in [0, m).
constexpr Int canonical_residue(Int a, Modulus m) {
    Int r = a % m.value();
    return r < 0 ? r + m.value() : r;
}

/// u in [0, m) with a*u = 1 (mod m).
constexpr Int mod_inverse(Int a, Modulus m) {
    Int reduced = canonical_residue(a, m);
    if (reduced == 0) throw not_invertible(a, m, m.value());
    auto [g, x, y] = egcd(reduced, m.value());
    (void)y;
    if (g != 1) throw not_invertible(a, m, g);
    return canonical_residue(x, m);
}

/// m divides (a - b). Compared through residues so no subtraction can overflow.
constexpr bool congruent(Int a, Int b, Modulus m) {
    return canonical_residue(a, m) == canonical_residue(b, m);
}

// The congruence laws below return whether the stated equivalence holds for
// one concrete tuple. They are the objects the property suites quantify over.

/// With d = gcd(k, m): k*a = k*b (mod m) iff a = b (mod m/d). Requires k != 0.
/// When d = m the reduced modulus is 1 and every pair is congruent.
inline bool cancellation_holds(Int k, Int a, Int b, Modulus m) {
    if (k == 0) throw std::domain_error("cancellation law needs k != 0");
    const Int d = gcd(k, m.value());
    const bool lhs = congruent(checked_mul(k, a), checked_mul(k, b), m);
    const Int reduced = m.value() / d;
    const bool rhs = reduced == 1 ? true : congruent(a, b, Modulus(reduced));
    return lhs == rhs;
}

/// With gcd(k, m) = 1: k*a = k*b (mod m) iff a = b (mod m).
inline bool coprime_cancellation_holds(Int k, Int a, Int b, Modulus m) {
    if (gcd(k, m.value()) != 1) throw std::domain_error("coprime cancellation needs gcd(k, m) = 1");
    return congruent(checked_mul(k, a), checked_mul(k, b), m) == congruent(a, b, m);
}

/// a = b (mod h) iff a + c = b + c (mod h).
inline bool translation_holds(Int a, Int b, Int c, Modulus h) {
    return congruent(a, b, h) == congruent(checked_add(a, c), checked_add(b, c), h);
}

/// a + h*c = b + h*d (mod h) iff a = b (mod h).
inline bool multiple_shift_holds(Int a, Int b, Int c, Int d, Modulus h) {
    const Int lhs_a = checked_add(a, checked_mul(h.value(), c));
    const Int lhs_b = checked_add(b, checked_mul(h.value(), d));
    return congruent(lhs_a, lhs_b, h) == congruent(a, b, h);
}

}  // namespace crs
