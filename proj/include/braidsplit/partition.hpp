#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "braidsplit/error.hpp"

namespace braidsplit {

/// An integer partition stored as a weakly decreasing list of positive parts.
///
/// The same object labels a conjugacy class of S_n (cycle type), a
/// factorization type of a square-free polynomial, and a Specht module.
/// The multiplicity view m_j is derived on demand.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw UsageError("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw UsageError("partition parts must be weakly decreasing");
            }
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// m_j: number of parts equal to j.
    int multiplicity(int j) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
    }

    /// Dense multiplicity vector; index j holds m_j for 0 <= j <= size().
    std::vector<int> multiplicities() const {
        std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
        for (int p : parts_) ++m[static_cast<std::size_t>(p)];
        return m;
    }

    /// Number of distinct part sizes j with m_j > 0.
    int distinct_parts() const {
        int count = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
        }
        return count;
    }

    /// Transpose of the Young diagram.
    Partition conjugate() const {
        std::vector<int> cols;
        for (int r = 1; r <= largest(); ++r) {
            int c = static_cast<int>(
                std::count_if(parts_.begin(), parts_.end(), [r](int p) { return p >= r; }));
            cols.push_back(c);
        }
        return Partition(std::move(cols));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical order: reverse lexicographic on part lists, so [4] precedes [3,1].
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

inline Partition single_row(int n) { return n == 0 ? Partition{} : Partition{std::vector<int>{n}}; }

inline Partition single_column(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

namespace detail {

inline void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n in canonical (reverse lexicographic) order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw UsageError("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::enumerate_into(n, n, prefix, out);
    return out;
}

inline mpz_class factorial(int n) {
    if (n < 0) throw UsageError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

struct ClassData {
    mpz_class centralizer_order;  // z_lambda
    mpz_class class_size;         // c_lambda
};

/// z_lambda = prod_j j^{m_j} m_j!  and  c_lambda = n!/z_lambda.
inline ClassData class_data(const Partition& lambda) {
    mpz_class z = 1;
    const auto m = lambda.multiplicities();
    for (std::size_t j = 1; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), j, static_cast<unsigned long>(m[j]));
        z *= power * factorial(m[j]);
    }
    return {z, factorial(lambda.size()) / z};
}

/// Arithmetic Moebius function by trial division.
inline int moebius(long long d) {
    if (d < 1) throw UsageError("moebius: argument must be positive");
    int result = 1;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        d /= p;
        if (d % p == 0) return 0;
        result = -result;
    }
    if (d > 1) result = -result;
    return result;
}

/// Sign of a permutation of cycle type lambda: (-1)^(n - l(lambda)).
inline int sign_character(const Partition& lambda) {
    return ((lambda.size() - lambda.length()) % 2 == 0) ? 1 : -1;
}

/// "3,1,1"; the empty partition renders as "".
inline std::string to_string(const Partition& lambda) {
    std::string s;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda.parts()[i]);
    }
    return s;
}

/// "[3,1,1]", the notation used in printed tables.
inline std::string bracketed(const Partition& lambda) { return "[" + to_string(lambda) + "]"; }

inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw UsageError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace braidsplit
