#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidsplit/class_function.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"

namespace braidsplit {

/// Partition naming the irreducible Specht module S^mu.
using SpechtLabel = Partition;

namespace detail {

/// Murnaghan-Nakayama recursion, memoized on (remaining shape, remaining cycles).
///
/// Shapes are handled through beta-sets (first-column hook lengths): removing
/// a border strip of length r is moving one bead from b to b - r onto an empty
/// position, and the strip height minus one equals the number of beads
/// strictly between the two positions.
class MurnaghanNakayama {
public:
    mpz_class value(const std::vector<int>& shape, std::span<const int> cycles) {
        if (cycles.empty()) return shape.empty() ? 1 : 0;
        Key key{shape, std::vector<int>(cycles.begin(), cycles.end())};
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }

        const int r = cycles.front();
        const int len = static_cast<int>(shape.size());
        std::vector<int> beta(shape.size());
        for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

        mpz_class total = 0;
        for (int i = 0; i < len; ++i) {
            const int from = beta[static_cast<std::size_t>(i)];
            const int to = from - r;
            if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
            const auto between = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > to && b < from; });

            std::vector<int> moved = beta;
            moved[static_cast<std::size_t>(i)] = to;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<int> next;
            for (int t = 0; t < len; ++t) {
                const int part = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
                if (part > 0) next.push_back(part);
            }
            mpz_class sub = value(next, cycles.subspan(1));
            if (between % 2) {
                total -= sub;
            } else {
                total += sub;
            }
        }

        std::lock_guard lock(mutex_);
        memo_.emplace(std::move(key), total);
        return total;
    }

    static MurnaghanNakayama& instance() {
        static MurnaghanNakayama mn;
        return mn;
    }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::mutex mutex_;
    std::map<Key, mpz_class> memo_;
};

}  // namespace detail

/// chi^mu(lambda) by border-strip removal, largest cycle first.
inline mpz_class irreducible_character_value(const SpechtLabel& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) {
        throw UsageError("shape " + bracketed(mu) + " and cycle type " + bracketed(lambda) + " differ in size");
    }
    return detail::MurnaghanNakayama::instance().value(mu.parts(), lambda.parts());
}

/// n! / prod(hook lengths).
inline mpz_class irrep_dimension(const SpechtLabel& mu) {
    const auto cols = mu.conjugate().parts();
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        for (int j = 0; j < mu.parts()[i]; ++j) {
            const int arm = mu.parts()[i] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(mu.size()) / hooks;
}

inline ClassFunction irreducible_character(const SpechtLabel& mu) {
    return ClassFunction::from(mu.size(), [&](const Partition& lambda) {
        return mpq_class(irreducible_character_value(mu, lambda));
    });
}

enum class CharacterKind {
    genuine,       // multiplicities must be nonnegative
    virtual_char,  // integer multiplicities of either sign
};

/// Multiset of Specht modules, listed in canonical label order with zero
/// multiplicities omitted.
struct IrrepDecomposition {
    int n = 0;
    std::vector<std::pair<SpechtLabel, mpz_class>> terms;
    bool genuine = true;  // every multiplicity nonnegative

    mpz_class multiplicity(const SpechtLabel& mu) const {
        for (const auto& [label, mult] : terms) {
            if (label == mu) return mult;
        }
        return 0;
    }

    mpz_class dimension() const {
        mpz_class d = 0;
        for (const auto& [label, mult] : terms) d += mult * irrep_dimension(label);
        return d;
    }

    ClassFunction reconstruct() const {
        ClassFunction f(n);
        for (const auto& [label, mult] : terms) f += irreducible_character(label) * mpq_class(mult);
        return f;
    }

    /// "[4,1] ⊕ [3,2] ⊕ 2[3,1,1]", or "0" for the zero module.
    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [label, mult] : terms) {
            if (!s.empty()) s += (mult < 0) ? " ⊖ " : " ⊕ ";
            else if (mult < 0) s += "-";
            mpz_class a = abs(mult);
            if (a != 1) s += a.get_str();
            s += bracketed(label);
        }
        return s;
    }

    friend bool operator==(const IrrepDecomposition&, const IrrepDecomposition&) = default;
};

/// mult(mu) = <F, chi^mu> for every mu |- n.
inline IrrepDecomposition decompose(const ClassFunction& f, CharacterKind kind = CharacterKind::genuine) {
    if (!f.is_integral()) throw UsageError("decompose: class function must be integer-valued");
    IrrepDecomposition out;
    out.n = f.n();
    for (const auto& mu : enumerate_partitions(f.n())) {
        mpq_class mult = inner_product(f, irreducible_character(mu));
        if (mult.get_den() != 1) {
            throw DomainError("multiplicity of " + bracketed(mu) + " is " + to_string(mult) +
                              "; input is not a virtual character");
        }
        if (mult < 0) {
            out.genuine = false;
            if (kind == CharacterKind::genuine) {
                throw DomainError("negative multiplicity " + to_string(mult) + " of " + bracketed(mu) +
                                  " in a class function flagged as a genuine character");
            }
        }
        if (mult != 0) out.terms.emplace_back(mu, mult.get_num());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Padded labels: for representation stability, S^{(n-|nu|, nu)} is identified
// across n with the tail nu.

/// mu with its first row removed.
inline Partition tail(const SpechtLabel& mu) {
    if (mu.empty()) return {};
    return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

/// (n - |nu|, nu), or nullopt when that is not a partition.
inline std::optional<SpechtLabel> padded_label(const Partition& nu, int n) {
    const int first = n - nu.size();
    if (first < 1 || (!nu.empty() && first < nu.largest())) return std::nullopt;
    std::vector<int> parts{first};
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return SpechtLabel(std::move(parts));
}

/// Decomposition re-keyed by tails.
inline std::map<Partition, mpz_class> stable_form(const IrrepDecomposition& d) {
    std::map<Partition, mpz_class> out;
    for (const auto& [label, mult] : d.terms) out[tail(label)] += mult;
    return out;
}

/// Instantiates a tail pattern at n; nullopt if some padded label is invalid.
inline std::optional<IrrepDecomposition> instantiate(const std::map<Partition, mpz_class>& pattern, int n) {
    IrrepDecomposition d;
    d.n = n;
    for (const auto& [nu, mult] : pattern) {
        auto label = padded_label(nu, n);
        if (!label) return std::nullopt;
        d.terms.emplace_back(*label, mult);
    }
    std::sort(d.terms.begin(), d.terms.end(),
              [](const auto& a, const auto& b) { return CanonicalOrder{}(a.first, b.first); });
    return d;
}

}  // namespace braidsplit
