#pragma once

/**
 * @file verify.hpp
 * @brief A bounded sweep that checks every congruence and residue-system law
 * the library implements, reporting per-law check counts and the first
 * counterexample found.
 *
 * Sweep bounds: moduli h in [2, hmax], multipliers/root degrees p in
 * [1, pmax], and exhaustive branch enumeration for every (h, p) in that box
 * with p^h <= cap. Randomized parts use a fixed seed, so two runs with the
 * same bounds produce identical reports.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "branches.hpp"
#include "cyclotomic.hpp"
#include "modcore.hpp"
#include "residue_system.hpp"

namespace crs {

struct PropertyResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t counterexamples = 0;
    std::optional<std::string> first_counterexample;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (!ok) {
            if (!first_counterexample) first_counterexample = describe();
            ++counterexamples;
        }
    }
};

struct VerifyBounds {
    Int hmax;
    Int pmax;
    Int cap;
    std::uint64_t seed = 0x5eed;
};

namespace detail {

inline std::string list_str(std::span<const Int> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

/// A uniformly shuffled complete system mod h with entries spread over
/// [-spread*h, spread*h].
template<class Rng>
CrsCandidate random_crs(Modulus h, Int spread, Rng& rng) {
    std::uniform_int_distribution<Int> lift(-spread, spread);
    std::vector<Int> e(static_cast<std::size_t>(h.value()));
    for (Int r = 0; r < h.value(); ++r) e[static_cast<std::size_t>(r)] = r + h.value() * lift(rng);
    std::shuffle(e.begin(), e.end(), rng);
    return {h, std::move(e)};
}

template<class Rng>
std::vector<Int> random_list(std::size_t n, Int lo, Int hi, Rng& rng) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    std::vector<Int> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace detail

inline std::vector<PropertyResult> verify_all(const VerifyBounds& b) {
    if (b.hmax < 2) throw std::domain_error("hmax must be >= 2");
    if (b.pmax < 1) throw std::domain_error("pmax must be >= 1");
    if (b.cap < 1) throw std::domain_error("cap must be >= 1");

    std::mt19937_64 rng(b.seed);
    std::deque<PropertyResult> out;  // stable references while appending
    auto add = [&](std::string name) -> PropertyResult& {
        out.push_back({std::move(name), 0, 0, std::nullopt});
        return out.back();
    };

    // Congruence laws, quantified over random tuples.
    {
        auto& canc = add("cancellation_by_gcd");
        auto& coprime = add("coprime_cancellation");
        auto& trans = add("translation");
        auto& mshift = add("multiple_shift");
        std::uniform_int_distribution<Int> mod_dist(2, std::max<Int>(2, b.hmax));
        std::uniform_int_distribution<Int> small(-1000, 1000);
        std::uniform_int_distribution<Int> kdist(-b.pmax, b.pmax);
        for (int i = 0; i < 20000; ++i) {
            const Modulus m(mod_dist(rng));
            Int k = kdist(rng);
            if (k == 0) k = 1;
            const Int a = small(rng), bb = small(rng), c = small(rng), d = small(rng);
            auto tuple = [=] {
                return "k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(bb) +
                       " m=" + std::to_string(m.value());
            };
            canc.record(cancellation_holds(k, a, bb, m), tuple);
            if (gcd(k, m.value()) == 1) coprime.record(coprime_cancellation_holds(k, a, bb, m), tuple);
            trans.record(translation_holds(a, bb, c, m), tuple);
            mshift.record(multiple_shift_holds(a, bb, c, d, m), tuple);
        }
    }

    // Membership test against its three equivalent characterizations.
    {
        auto& pr = add("distinct_residues_characterization");
        for (Int hv = 2; hv <= b.hmax; ++hv) {
            const Modulus h(hv);
            for (int t = 0; t < 50; ++t) {
                const CrsCandidate c(h, detail::random_list(static_cast<std::size_t>(hv), -2 * hv, 2 * hv, rng));
                const bool crs = is_crs(c);
                bool pairwise_distinct = true;
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j)
                        if (congruent(c[i], c[j], h)) pairwise_distinct = false;
                bool unique_match = true;
                if (crs) {
                    for (Int a = -3 * hv; a <= 3 * hv; ++a) {
                        int matches = 0;
                        for (Int e : c.elements()) matches += congruent(a, e, h);
                        if (matches != 1) unique_match = false;
                    }
                }
                pr.record(crs == pairwise_distinct && unique_match,
                          [&] { return "h=" + std::to_string(hv) + " elements=" + detail::list_str(c.elements()); });
            }
        }
    }

    // Scaling and affine maps of complete systems.
    {
        auto& sc = add("scale_preserves_iff_coprime");
        auto& af = add("affine_preserves_iff_coprime");
        for (Int hv = 2; hv <= b.hmax; ++hv) {
            const Modulus h(hv);
            for (int t = 0; t < 10; ++t) {
                const auto c = detail::random_crs(h, 5, rng);
                for (Int p = -b.pmax; p <= b.pmax; ++p) {
                    const bool coprime = p != 0 && gcd(p, hv) == 1;
                    auto desc = [&] {
                        return "h=" + std::to_string(hv) + " p=" + std::to_string(p) +
                               " elements=" + detail::list_str(c.elements());
                    };
                    sc.record(is_crs(scale(c, p)) == coprime, desc);
                    for (Int l = -2; l <= 2; ++l) af.record(is_crs(affine(c, p, l)) == coprime, desc);
                }
            }
        }
    }

    // Shifting by multiples of h never changes membership.
    {
        auto& sh = add("shift_by_multiples_preserves_membership");
        for (Int hv = 2; hv <= b.hmax; ++hv) {
            const Modulus h(hv);
            for (int t = 0; t < 50; ++t) {
                const auto n = static_cast<std::size_t>(hv);
                const CrsCandidate c =
                    t % 2 ? detail::random_crs(h, 3, rng) : CrsCandidate(h, detail::random_list(n, -2 * hv, 2 * hv, rng));
                const auto ls = detail::random_list(n, -10, 10, rng);
                sh.record(is_crs(shift_multiples(c, ls)) == is_crs(c), [&] {
                    return "h=" + std::to_string(hv) + " elements=" + detail::list_str(c.elements()) +
                           " shifts=" + detail::list_str(ls);
                });
            }
        }
    }

    // Exponent sets and powers of the roots of unity.
    {
        auto& ex = add("exponent_set_is_omega_iff_crs");
        auto& pw = add("power_of_omega_is_omega_iff_coprime");
        for (Int hv = 2; hv <= b.hmax; ++hv) {
            const Modulus h(hv);
            for (int t = 0; t < 50; ++t) {
                const auto a = detail::random_list(static_cast<std::size_t>(hv), -3 * hv, 3 * hv, rng);
                ex.record(equals_omega(exponent_set(a, h), h) == is_crs(CrsCandidate(h, a)),
                          [&] { return "h=" + std::to_string(hv) + " exponents=" + detail::list_str(a); });
            }
            const RootSet omega = omega_set(h);
            for (Int p = 1; p <= b.pmax; ++p) {
                pw.record(equals_omega(power_set(omega, p), h) == (gcd(p, hv) == 1),
                          [&] { return "h=" + std::to_string(hv) + " p=" + std::to_string(p); });
            }
        }
    }

    // Branch vectors.
    {
        auto& solve = add("branch_vector_exists_iff_coprime");
        auto& divis = add("branch_quotients_form_crs");
        auto& oracle = add("branch_search_matches_construction");
        auto& rational = add("rational_powers_agree");
        for (Int hv = 2; hv <= b.hmax; ++hv) {
            const Modulus h(hv);
            for (Int p = 1; p <= b.pmax; ++p) {
                const bool coprime = gcd(hv, p) == 1;
                const auto sol = solve_branch_vector(h, p);
                auto desc = [&] { return "h=" + std::to_string(hv) + " p=" + std::to_string(p); };
                const auto* bv = std::get_if<BranchVector>(&sol);
                bool ok = (bv != nullptr) == coprime;
                if (bv) ok = ok && equals_omega(apply_branches(*bv), h);
                if (const auto* ns = std::get_if<NoSolution>(&sol)) {
                    // No l in [0, p) makes k + h*l divisible by p at the witness.
                    for (Int l = 0; l < p; ++l) ok = ok && (ns->witness_k + hv * l) % p != 0;
                }
                solve.record(ok, desc);

                if (bv) {
                    std::vector<Int> quotients;
                    bool all_divisible = true;
                    for (Int k = 0; k < hv; ++k) {
                        const Int num = checked_add(k, checked_mul(hv, (*bv)[static_cast<std::size_t>(k)]));
                        all_divisible = all_divisible && num % p == 0;
                        quotients.push_back(num / p);
                    }
                    divis.record(all_divisible && is_crs(CrsCandidate(h, quotients)), desc);

                    for (Int q = 1; q <= b.pmax; ++q) {
                        if (gcd(q, hv) != 1) continue;
                        const auto a = rational_power_root_first(h, p, q, *bv);
                        const auto c = rational_power_power_first(h, p, q, *bv);
                        rational.record(equals_omega(a, h) && a == c, [&] { return desc() + " q=" + std::to_string(q); });
                    }
                }

                // p^h within budget?
                Int total = 1;
                bool within = true;
                for (Int i = 0; i < hv && within; ++i) {
                    if (total > b.cap / p) within = false;
                    else total *= p;
                }
                if (within && total <= b.cap) {
                    const auto report = brute_force_branch_search(h, p, b.cap);
                    const bool agree = coprime ? (report.solutions.size() == 1 && bv && report.solutions[0] == *bv)
                                               : report.solutions.empty();
                    oracle.record(agree, desc);
                }
            }
        }
    }

    return {out.begin(), out.end()};
}

}  // namespace crs
