#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "braidsplit/class_function.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"
#include "braidsplit/rat_poly.hpp"

namespace braidsplit {

/// Characters h_n^k of H^k(P_n, Q) for k = 0..n and chi_n^k of A_n^k for
/// k = 0..n-1, all derived from the cycle polynomials of S_n.
///
/// h_n^k(lambda) = (-1)^k z_lambda [z^{n-k}] N_lambda(z) is the only primary
/// path; chi_n^k is its alternating prefix sum.
class BraidCharacterTable {
public:
    explicit BraidCharacterTable(int n) : n_(n) {
        if (n < 1) throw UsageError("braid characters need n >= 1");
        const auto classes = enumerate_partitions(n);
        for (const auto& lambda : classes) cycle_polys_.push_back(cycle_polynomial(lambda));

        for (int k = 0; k <= n; ++k) {
            ClassFunction h(n);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                mpq_class value = mpq_class(class_data(classes[i]).centralizer_order) * cycle_polys_[i].coeff(n - k);
                if (k % 2) value = -value;
                if (value.get_den() != 1) {
                    throw InvariantViolation("h_" + std::to_string(n) + "^" + std::to_string(k) + " at " +
                                             bracketed(classes[i]) + " is " + to_string(value) +
                                             ", not an integer");
                }
                h.value_at(i) = value;
            }
            h_.push_back(std::move(h));
        }

        for (int k = 0; k < n; ++k) {
            ClassFunction chi(n);
            for (int j = 0; j <= k; ++j) {
                if ((k - j) % 2) {
                    chi -= h_[static_cast<std::size_t>(j)];
                } else {
                    chi += h_[static_cast<std::size_t>(j)];
                }
            }
            chi_.push_back(std::move(chi));
        }
    }

    int n() const noexcept { return n_; }

    const ClassFunction& h(int k) const {
        if (k < 0 || k > n_) throw UsageError("h_n^k needs 0 <= k <= n");
        return h_[static_cast<std::size_t>(k)];
    }

    const ClassFunction& chi(int k) const {
        if (k < 0 || k >= n_) throw UsageError("chi_n^k needs 0 <= k <= n-1");
        return chi_[static_cast<std::size_t>(k)];
    }

    const RatPoly& cycle_poly(const Partition& lambda) const { return cycle_polys_[h_.front().index_of(lambda)]; }

private:
    int n_;
    std::vector<RatPoly> cycle_polys_;
    std::vector<ClassFunction> h_;
    std::vector<ClassFunction> chi_;
};

/// Process-wide table cache; tables are immutable once inserted.
inline const BraidCharacterTable& braid_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const BraidCharacterTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<const BraidCharacterTable>(n);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

inline ClassFunction braid_character(int n, int k) { return braid_table(n).h(k); }

inline ClassFunction a_character(int n, int k) { return braid_table(n).chi(k); }

// ---------------------------------------------------------------------------
// Closed forms for selected (k, lambda), evaluated without touching N_lambda.

enum class ClosedForm {
    degree_one,     // h_n^1 as a character polynomial in m_1, m_2
    degree_two,     // h_n^2 as a character polynomial in m_1..m_4
    top_degree,     // h_n^{n-1}, supported on rectangles (j^m)
    subtop_degree,  // h_n^{n-2}, supported on at most two part sizes
    long_cycle,     // h_n^{n-d}([n]) = (-1)^{n-d} mu(n/d) when d | n
};

inline const char* name(ClosedForm f) {
    switch (f) {
        case ClosedForm::degree_one: return "h^1 character polynomial";
        case ClosedForm::degree_two: return "h^2 character polynomial";
        case ClosedForm::top_degree: return "h^{n-1} on rectangles";
        case ClosedForm::subtop_degree: return "h^{n-2} with harmonic numbers";
        case ClosedForm::long_cycle: return "h^{n-d} at the long cycle";
    }
    return "?";
}

inline constexpr ClosedForm all_closed_forms[] = {ClosedForm::degree_one, ClosedForm::degree_two,
                                                  ClosedForm::top_degree, ClosedForm::subtop_degree,
                                                  ClosedForm::long_cycle};

inline bool covers(ClosedForm f, int n, int k, const Partition& lambda) {
    if (lambda.size() != n || k < 0 || k > n) return false;
    switch (f) {
        case ClosedForm::degree_one: return k == 1;
        case ClosedForm::degree_two: return k == 2;
        case ClosedForm::top_degree: return k == n - 1;
        case ClosedForm::subtop_degree: return k == n - 2;
        case ClosedForm::long_cycle: return lambda == single_row(n);
    }
    return false;
}

/// H_m = 1 + 1/2 + ... + 1/m, exact.
inline mpq_class harmonic_number(int m) {
    mpq_class h = 0;
    for (int i = 1; i <= m; ++i) h += ratio(1, i);
    return h;
}

namespace detail {

inline mpq_class signed_unit(int exponent) { return (exponent % 2 == 0) ? mpq_class(1) : mpq_class(-1); }

/// mu(j) j^{m-1} (m-1)!: z_lambda times the (unsigned) z-coefficient of binom(M_j, m).
inline mpq_class rectangle_factor(int j, int m) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m - 1));
    return mpq_class(moebius(j) * power * factorial(m - 1));
}

/// mu extended by zero to non-integral arguments j/2.
inline int moebius_half(int j) { return (j % 2 == 0) ? moebius(j / 2) : 0; }

}  // namespace detail

/// Value of the closed form f at (n, k, lambda), or nullopt outside its domain.
inline std::optional<mpq_class> closed_form_value(ClosedForm f, int n, int k, const Partition& lambda) {
    if (!covers(f, n, k, lambda)) return std::nullopt;
    auto m = [&](int j) { return static_cast<long>(lambda.multiplicity(j)); };
    switch (f) {
        case ClosedForm::degree_one:
            return mpq_class(binomial(m(1), 2) + binomial(m(2), 1));
        case ClosedForm::degree_two:
            return mpq_class(2 * binomial(m(1), 3) + 3 * binomial(m(1), 4) + binomial(m(1), 2) * binomial(m(2), 1) -
                             binomial(m(2), 2) - binomial(m(3), 1) - binomial(m(4), 1));
        case ClosedForm::top_degree: {
            if (lambda.distinct_parts() != 1) return mpq_class(0);
            const int j = lambda.largest();
            const int mult = lambda.length();
            return mpq_class(detail::signed_unit(mult - n) * detail::rectangle_factor(j, mult));
        }
        case ClosedForm::subtop_degree: {
            const int distinct = lambda.distinct_parts();
            if (distinct > 2) return mpq_class(0);
            if (distinct == 2) {
                const int i = lambda.largest();
                const int j = lambda.parts().back();
                const int mi = lambda.multiplicity(i);
                const int mj = lambda.multiplicity(j);
                return mpq_class(detail::signed_unit(mi + mj - n) * detail::rectangle_factor(i, mi) *
                                 detail::rectangle_factor(j, mj));
            }
            // Rectangle (j^m). The z^2 coefficient of binom(M_j, m) collects the
            // quadratic term of M_j and the product of two linear terms; the latter
            // carries mu(j)^2 H_{m-1} / j^2 before rescaling by z_lambda.
            const int j = lambda.largest();
            const int mult = lambda.length();
            mpz_class power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(mult - 1));
            const int mu = moebius(j);
            mpq_class bracket = ratio(mu * mu, j) * harmonic_number(mult - 1) - detail::moebius_half(j);
            return mpq_class(detail::signed_unit(mult - n) * bracket * mpq_class(power * factorial(mult - 1)));
        }
        case ClosedForm::long_cycle: {
            const int d = n - k;
            if (d < 1 || n % d != 0) return mpq_class(0);
            return mpq_class(detail::signed_unit(n - d) * moebius(n / d));
        }
    }
    return std::nullopt;
}

/// First closed form covering (n, k, lambda). Throws DomainError when none applies.
inline mpq_class closed_form_check(int n, int k, const Partition& lambda) {
    for (ClosedForm f : all_closed_forms) {
        if (auto v = closed_form_value(f, n, k, lambda)) return *v;
    }
    throw DomainError("no closed form for h_" + std::to_string(n) + "^" + std::to_string(k) + " at " +
                      bracketed(lambda));
}

// ---------------------------------------------------------------------------
// Derived class functions.

/// sum_k h_n^k sgn^k, the character of the sign-twisted total cohomology.
inline ClassFunction sign_twisted_sum(int n) {
    const auto& table = braid_table(n);
    ClassFunction out(n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int sgn = sign_character(out.classes()[i]);
        mpq_class acc = 0;
        for (int k = 0; k <= n; ++k) {
            const auto& v = table.h(k).value_at(i);
            acc += (sgn < 0 && k % 2) ? mpq_class(-v) : v;
        }
        out.value_at(i) = acc;
    }
    return out;
}

/// sum_k h_n^k, the character of the total cohomology.
inline ClassFunction total_cohomology_character(int n) {
    const auto& table = braid_table(n);
    ClassFunction out(n);
    for (int k = 0; k <= n; ++k) out += table.h(k);
    return out;
}

/// Character of B_{n,m} = sum_k (A_n^k)^{m^k}.
inline ClassFunction b_character(int n, int m) {
    if (n < 2 || m < 1) throw UsageError("b_character needs n >= 2 and m >= 1");
    const auto& table = braid_table(n);
    ClassFunction out(n);
    mpz_class weight = 1;
    for (int k = 0; k < n; ++k) {
        out += table.chi(k) * mpq_class(weight);
        weight *= m;
    }
    return out;
}

/// Even and odd parts B^+_{n,m}, B^-_{n,m}; their difference is the virtual
/// character z_lambda nu*_{n,1/m}(C_lambda).
struct SignedBCharacter {
    ClassFunction plus;
    ClassFunction minus;

    ClassFunction difference() const { return plus - minus; }
};

inline SignedBCharacter b_character_signed(int n, int m) {
    if (n < 2 || m < 1) throw UsageError("b_character needs n >= 2 and m >= 1");
    const auto& table = braid_table(n);
    SignedBCharacter out{ClassFunction(n), ClassFunction(n)};
    mpz_class weight = 1;
    for (int k = 0; k < n; ++k) {
        (k % 2 ? out.minus : out.plus) += table.chi(k) * mpq_class(weight);
        weight *= m;
    }
    return out;
}

}  // namespace braidsplit
