#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fpq/poly.hpp"

namespace fpq {

/// Exact value distribution of f over a domain: counts[j] = #{x : f(x) = j}.
struct LevelCounts {
    std::uint32_t p = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t domain_size = 0;
};

/// Element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^(p-2), using
/// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)). An element is rational iff
/// all basis coordinates beyond the first vanish.
struct CyclotomicInteger {
    std::uint32_t p = 0;
    std::vector<long long> coords;  // length p-1

    explicit CyclotomicInteger(std::uint32_t prime) : p(prime), coords(prime - 1, 0) {}

    // zeta^k * c, exponent taken mod p.
    void add_power(std::uint64_t k, long long c);

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    bool operator==(const CyclotomicInteger& o) const {
        return p == o.p && coords == o.coords;
    }

    bool is_rational() const;
    long long rational_value() const;  // requires is_rational()
    std::complex<long double> embed() const;  // zeta -> e^{2 pi i / p}
};

// Exact counts over the full space (table mode), a subspace, or an explicit
// point-index list.
LevelCounts level_counts(const Polynomial& f, std::uint64_t budget = kDefaultBudget);
LevelCounts level_counts(const Polynomial& f, const Subspace& d,
                         std::uint64_t budget = kDefaultBudget);
LevelCounts level_counts(const Polynomial& f, const AffineSubspace& d,
                         std::uint64_t budget = kDefaultBudget);
LevelCounts level_counts(const Polynomial& f, const std::vector<std::uint64_t>& point_indices,
                         std::uint64_t budget = kDefaultBudget);

// |sum_j counts_j e_p(j)| / |D|, from exact counts in extended precision.
double bias_from_counts(const LevelCounts& c);
double bias(const Polynomial& f, std::uint64_t budget = kDefaultBudget);

// |S|^2 = sum_d R_d zeta^d with R_d = sum_j c_j c_{j+d}, as an exact
// cyclotomic integer.
CyclotomicInteger char_sum_norm_squared(const LevelCounts& c);

// Decides exactly whether bias = p^{-m/2}, i.e. |S|^2 * p^m = |D|^2 with
// |S|^2 rational. No floating point is involved.
bool bias_equals_power_check(const LevelCounts& c, std::uint32_t m);
// Convenience wrapper; requires deg(f) <= 2.
bool bias_equals_power_check(const Polynomial& f, std::uint32_t m,
                             std::uint64_t budget = kDefaultBudget);

// bias == 0, decided exactly (|S|^2 is the zero cyclotomic integer).
bool bias_is_zero(const LevelCounts& c);

}  // namespace fpq
