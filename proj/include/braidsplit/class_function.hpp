#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"

namespace braidsplit {

/// Exact-rational function on the conjugacy classes of S_n.
///
/// Values are stored densely, aligned with enumerate_partitions(n).
class ClassFunction {
public:
    explicit ClassFunction(int n) : n_(n), classes_(enumerate_partitions(n)), values_(classes_.size()) {}

    ClassFunction(int n, std::vector<mpq_class> values) : n_(n), classes_(enumerate_partitions(n)) {
        if (values.size() != classes_.size()) {
            throw UsageError("class function for n=" + std::to_string(n) + " needs " +
                             std::to_string(classes_.size()) + " values");
        }
        values_ = std::move(values);
    }

    template <typename F>
    static ClassFunction from(int n, F&& f) {
        ClassFunction cf(n);
        for (std::size_t i = 0; i < cf.classes_.size(); ++i) cf.values_[i] = f(cf.classes_[i]);
        return cf;
    }

    static ClassFunction constant(int n, const mpq_class& c) {
        return from(n, [&](const Partition&) { return c; });
    }

    static ClassFunction indicator(const Partition& lambda) {
        return from(lambda.size(), [&](const Partition& mu) { return mpq_class(mu == lambda ? 1 : 0); });
    }

    /// n! at the identity class, 0 elsewhere.
    static ClassFunction regular(int n) {
        const Partition id = single_column(n);
        const mpq_class nfact(factorial(n));
        return from(n, [&](const Partition& mu) { return mu == id ? nfact : mpq_class(0); });
    }

    int n() const noexcept { return n_; }
    const std::vector<Partition>& classes() const noexcept { return classes_; }
    const std::vector<mpq_class>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::size_t index_of(const Partition& lambda) const {
        auto it = std::lower_bound(classes_.begin(), classes_.end(), lambda, CanonicalOrder{});
        if (it == classes_.end() || *it != lambda) {
            throw UsageError(bracketed(lambda) + " is not a partition of " + std::to_string(n_));
        }
        return static_cast<std::size_t>(it - classes_.begin());
    }

    const mpq_class& operator()(const Partition& lambda) const { return values_[index_of(lambda)]; }
    mpq_class& operator[](const Partition& lambda) { return values_[index_of(lambda)]; }
    const mpq_class& value_at(std::size_t i) const { return values_[i]; }
    mpq_class& value_at(std::size_t i) { return values_[i]; }

    bool is_integral() const {
        return std::all_of(values_.begin(), values_.end(), [](const mpq_class& v) { return v.get_den() == 1; });
    }

    ClassFunction& operator+=(const ClassFunction& o) {
        check_same_n(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }

    ClassFunction& operator-=(const ClassFunction& o) {
        check_same_n(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }

    ClassFunction& operator*=(const mpq_class& c) {
        for (auto& v : values_) v *= c;
        return *this;
    }

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const mpq_class& c) { return a *= c; }

    /// Pointwise product (character of the tensor product).
    friend ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b) {
        a.check_same_n(b);
        ClassFunction out(a.n_);
        for (std::size_t i = 0; i < a.values_.size(); ++i) out.values_[i] = a.values_[i] * b.values_[i];
        return out;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    void check_same_n(const ClassFunction& o) const {
        if (o.n_ != n_) {
            throw UsageError("class functions on S_" + std::to_string(n_) + " and S_" +
                             std::to_string(o.n_) + " cannot be combined");
        }
    }

    int n_;
    std::vector<Partition> classes_;
    std::vector<mpq_class> values_;
};

/// <F, G> = (1/n!) sum_g F(g) G(g) = (1/n!) sum_lambda c_lambda F(lambda) G(lambda).
///
/// Characters here are rational-valued, so no complex conjugation is needed.
inline mpq_class inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n()) {
        throw UsageError("inner_product: class functions live on different symmetric groups");
    }
    mpq_class sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.value_at(i) == 0 || g.value_at(i) == 0) continue;
        sum += mpq_class(class_data(f.classes()[i]).class_size) * f.value_at(i) * g.value_at(i);
    }
    return sum / mpq_class(factorial(f.n()));
}

}  // namespace braidsplit
