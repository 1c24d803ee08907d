#pragma once

#include <gmpxx.h>

#include <vector>

#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"
#include "braidsplit/rat_poly.hpp"

namespace braidsplit {

/// Laurent coefficients of the z-splitting measure of the class C_lambda:
/// nu*_{n,z}(C_lambda) = sum_k alpha[k] (1/z)^k, k = 0..n-1.
struct SplittingMeasure {
    int n = 0;
    Partition lambda;
    std::vector<mpq_class> alpha;
};

/// Divides N_lambda(z) by (z - 1) and reads the quotient from the top down.
/// For n >= 2, N_lambda(1) = 0, so a nonzero remainder is an arithmetic bug.
inline SplittingMeasure splitting_coefficients(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 1) throw UsageError("splitting_coefficients: partition must be nonempty");
    SplittingMeasure m{n, lambda, {}};
    if (n == 1) {
        m.alpha = {mpq_class(1)};
        return m;
    }
    auto [quotient, remainder] = cycle_polynomial(lambda).divide_linear(1);
    if (remainder != 0) {
        throw InvariantViolation("N_lambda(1) != 0 for lambda = " + bracketed(lambda));
    }
    m.alpha.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) m.alpha[static_cast<std::size_t>(k)] = quotient.coeff(n - 1 - k);
    return m;
}

/// Evaluates sum_k alpha_k z^{-k}. Class totals by default; per_element divides by c_lambda.
inline mpq_class measure_value(const SplittingMeasure& m, const mpq_class& z, bool per_element = false) {
    if (z == 0) {
        for (std::size_t k = 1; k < m.alpha.size(); ++k) {
            if (m.alpha[k] != 0) throw DomainError("pole at z=0");
        }
    }
    mpq_class value = 0;
    if (z == 0) {
        value = m.alpha.empty() ? mpq_class(0) : m.alpha.front();
    } else {
        const mpq_class inv = 1 / z;
        for (std::size_t k = m.alpha.size(); k-- > 0;) value = value * inv + m.alpha[k];
    }
    if (per_element) value /= class_data(m.lambda).class_size;
    return value;
}

inline mpq_class measure_value(const Partition& lambda, const mpq_class& z, bool per_element = false) {
    return measure_value(splitting_coefficients(lambda), z, per_element);
}

}  // namespace braidsplit
