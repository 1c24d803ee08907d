#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"

namespace braidsplit {

/// num/den reduced to lowest terms.
inline mpq_class ratio(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical "p/q" rendering; integers render without a denominator.
inline std::string to_string(const mpq_class& q) { return q.get_str(); }

inline mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw UsageError("empty rational");
    mpq_class q;
    bool ok = true;
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos) {
        ok = digits_ok(s, true);
    } else {
        ok = digits_ok(std::string_view(s).substr(0, slash), true) &&
             digits_ok(std::string_view(s).substr(slash + 1), false);
    }
    if (s.front() == '+') s.erase(0, 1);
    if (!ok || q.set_str(s, 10) != 0) throw UsageError("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw UsageError("rational with zero denominator");
    q.canonicalize();
    return q;
}

/// Dense univariate polynomial over Q; index i holds the coefficient of z^i.
///
/// The highest stored coefficient is never zero, so structural equality is
/// polynomial equality. GMP keeps every coefficient in lowest terms.
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

    static RatPoly monomial(const mpq_class& c, int degree) {
        std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1);
        v.back() = c;
        return RatPoly(std::move(v));
    }

    static RatPoly variable() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    mpq_class coeff(int i) const {
        if (i < 0 || i > degree()) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    mpq_class leading() const { return is_zero() ? mpq_class(0) : coeffs_.back(); }

    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

    RatPoly& operator+=(const RatPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator-=(const RatPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator*=(const mpq_class& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    RatPoly& operator*=(const RatPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const mpq_class& c) { return a *= c; }
    friend RatPoly operator*(const mpq_class& c, RatPoly a) { return a *= c; }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RatPoly(std::move(out));
    }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Synthetic division by (z - root): returns (quotient, remainder).
    std::pair<RatPoly, mpq_class> divide_linear(const mpq_class& root) const {
        if (is_zero()) return {RatPoly{}, mpq_class(0)};
        std::vector<mpq_class> q(coeffs_.size() - 1);
        mpq_class carry = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            carry = carry * root + coeffs_[i];
            if (i > 0) q[i - 1] = carry;
        }
        return {RatPoly(std::move(q)), carry};
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<mpq_class> coeffs_;
};

/// Exact Horner evaluation.
inline mpq_class evaluate(const RatPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

/// M_j(z) = (1/j) sum_{d | j} mu(d) z^{j/d}.
inline RatPoly necklace_polynomial(int j) {
    if (j < 1) throw UsageError("necklace_polynomial: j must be positive");
    std::vector<mpq_class> c(static_cast<std::size_t>(j) + 1);
    for (int d = 1; d <= j; ++d) {
        if (j % d != 0 || moebius(d) == 0) continue;
        c[static_cast<std::size_t>(j / d)] += ratio(moebius(d), j);
    }
    return RatPoly(std::move(c));
}

/// binom(P, m) = P (P - 1) ... (P - m + 1) / m!
inline RatPoly poly_binomial(const RatPoly& p, int m) {
    if (m < 0) throw UsageError("poly_binomial: m must be nonnegative");
    RatPoly acc = RatPoly::constant(1);
    for (int k = 0; k < m; ++k) acc *= p - RatPoly::constant(k);
    acc *= ratio(1, factorial(m));
    return acc;
}

/// N_lambda(z) = prod_j binom(M_j(z), m_j(lambda)).
inline RatPoly cycle_polynomial(const Partition& lambda) {
    RatPoly acc = RatPoly::constant(1);
    const auto m = lambda.multiplicities();
    for (std::size_t j = 1; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        acc *= poly_binomial(necklace_polynomial(static_cast<int>(j)), m[j]);
    }
    return acc;
}

/// Coefficients as "p/q" strings, constant term first.
inline std::vector<std::string> coefficient_strings(const RatPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

/// Human-readable form over a common denominator, e.g. "(z^4 - 2z^3 + z^2)/4".
inline std::string format_polynomial(const RatPoly& p, char var = 'z') {
    if (p.is_zero()) return "0";
    mpz_class den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::string body;
    for (int i = p.degree(); i >= 0; --i) {
        mpq_class scaled = p.coeff(i) * den;
        if (scaled == 0) continue;
        mpz_class num = scaled.get_num();
        bool negative = num < 0;
        if (negative) num = -num;
        if (body.empty()) {
            if (negative) body += "-";
        } else {
            body += negative ? " - " : " + ";
        }
        if (num != 1 || i == 0) body += num.get_str();
        if (i >= 1) body += var;
        if (i >= 2) body += "^" + std::to_string(i);
    }
    if (den == 1) return body;
    return "(" + body + ")/" + den.get_str();
}

}  // namespace braidsplit
