#include "fpq/charsum.hpp"

#include <cmath>

namespace fpq {

void CyclotomicInteger::add_power(std::uint64_t k, long long c) {
    k %= p;
    if (k < p - 1) {
        coords[k] += c;
    } else {
        for (std::uint32_t i = 0; i < p - 1; ++i) coords[i] -= c;
    }
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    CyclotomicInteger r = *this;
    for (std::uint32_t i = 0; i < p - 1; ++i) r.coords[i] += o.coords[i];
    return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
    CyclotomicInteger r = *this;
    for (std::uint32_t i = 0; i < p - 1; ++i) r.coords[i] -= o.coords[i];
    return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    CyclotomicInteger r(p);
    for (std::uint32_t i = 0; i < p - 1; ++i) {
        if (coords[i] == 0) continue;
        for (std::uint32_t j = 0; j < p - 1; ++j) {
            if (o.coords[j] == 0) continue;
            r.add_power(i + j, coords[i] * o.coords[j]);
        }
    }
    return r;
}

bool CyclotomicInteger::is_rational() const {
    for (std::uint32_t i = 1; i < p - 1; ++i)
        if (coords[i] != 0) return false;
    return true;
}

long long CyclotomicInteger::rational_value() const {
    if (!is_rational()) throw UsageError("cyclotomic integer is not rational");
    return coords[0];
}

std::complex<long double> CyclotomicInteger::embed() const {
    const long double tau = 2.0L * std::acos(-1.0L);
    std::complex<long double> acc = 0;
    for (std::uint32_t k = 0; k < p - 1; ++k) {
        if (coords[k] == 0) continue;
        long double ang = tau * k / p;
        acc += static_cast<long double>(coords[k]) *
               std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

namespace {

LevelCounts counts_from_table(const ValueTable& t) {
    LevelCounts c;
    c.p = t.p;
    c.counts.assign(t.p, 0);
    c.domain_size = t.values.size();
    for (Scalar v : t.values) ++c.counts[v];
    return c;
}

}  // namespace

LevelCounts level_counts(const Polynomial& f, std::uint64_t budget) {
    return counts_from_table(to_table(f, budget));
}

LevelCounts level_counts(const Polynomial& f, const Subspace& d, std::uint64_t budget) {
    return counts_from_table(to_table(restrict_to(f, d), budget));
}

LevelCounts level_counts(const Polynomial& f, const AffineSubspace& d, std::uint64_t budget) {
    return counts_from_table(to_table(restrict_to(f, d), budget));
}

LevelCounts level_counts(const Polynomial& f, const std::vector<std::uint64_t>& point_indices,
                         std::uint64_t budget) {
    if (point_indices.size() > budget) throw BudgetError("point list exceeds budget");
    LevelCounts c;
    c.p = f.p();
    c.counts.assign(f.p(), 0);
    c.domain_size = point_indices.size();
    const PrimeField& fld = f.field();
    for (std::uint64_t idx : point_indices)
        ++c.counts[f.evaluate(point_unrank(fld, f.nvars(), idx))];
    return c;
}

double bias_from_counts(const LevelCounts& c) {
    if (c.domain_size == 0) throw UsageError("bias over empty domain");
    const long double tau = 2.0L * std::acos(-1.0L);
    long double re = 0, im = 0;
    for (std::uint32_t j = 0; j < c.p; ++j) {
        if (c.counts[j] == 0) continue;
        long double ang = tau * j / c.p;
        re += static_cast<long double>(c.counts[j]) * std::cos(ang);
        im += static_cast<long double>(c.counts[j]) * std::sin(ang);
    }
    return static_cast<double>(std::sqrt(re * re + im * im) /
                               static_cast<long double>(c.domain_size));
}

double bias(const Polynomial& f, std::uint64_t budget) {
    return bias_from_counts(level_counts(f, budget));
}

CyclotomicInteger char_sum_norm_squared(const LevelCounts& c) {
    CyclotomicInteger out(c.p);
    for (std::uint32_t d = 0; d < c.p; ++d) {
        long long rd = 0;
        for (std::uint32_t j = 0; j < c.p; ++j)
            rd += static_cast<long long>(c.counts[j]) *
                  static_cast<long long>(c.counts[(j + d) % c.p]);
        out.add_power(d, rd);
    }
    return out;
}

bool bias_equals_power_check(const LevelCounts& c, std::uint32_t m) {
    CyclotomicInteger s2 = char_sum_norm_squared(c);
    if (!s2.is_rational()) return false;
    __int128 lhs = s2.rational_value();
    for (std::uint32_t i = 0; i < m; ++i) lhs *= c.p;
    __int128 rhs = static_cast<__int128>(c.domain_size) * c.domain_size;
    return lhs == rhs;
}

bool bias_equals_power_check(const Polynomial& f, std::uint32_t m, std::uint64_t budget) {
    if (f.degree() > 2)
        throw UsageError("bias power check expects a polynomial of degree <= 2");
    return bias_equals_power_check(level_counts(f, budget), m);
}

bool bias_is_zero(const LevelCounts& c) {
    CyclotomicInteger s2 = char_sum_norm_squared(c);
    return s2.is_rational() && s2.rational_value() == 0;
}

}  // namespace fpq
