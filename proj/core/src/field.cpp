#include "fpq/field.hpp"

namespace fpq {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p > 31 || !is_prime(p))
        throw UsageError("modulus must be a prime in [3, 31], got " + std::to_string(p));
    inv_.assign(p_, 0);
    sqrt_.assign(p_, kNoRoot);
    for (Scalar a = 1; a < p_; ++a) inv_[a] = pow(a, p_ - 2);
    for (Scalar a = 0; a < p_; ++a) {
        Scalar sq = mul(a, a);
        if (sqrt_[sq] == kNoRoot || a < sqrt_[sq]) sqrt_[sq] = a;
    }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
    Scalar r = 1, base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t checked_pow(std::uint32_t p, std::uint32_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > cap / p)
            throw BudgetError("enumeration of p^" + std::to_string(e) +
                              " points exceeds budget " + std::to_string(cap));
        r *= p;
    }
    if (r > cap)
        throw BudgetError("enumeration of p^" + std::to_string(e) +
                          " points exceeds budget " + std::to_string(cap));
    return r;
}

}  // namespace fpq
