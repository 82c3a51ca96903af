#pragma once

#include <cstdint>
#include <vector>

#include "fpq/errors.hpp"

namespace fpq {

using Scalar = std::uint32_t;  // always reduced to [0, p)
using Vec = std::vector<Scalar>;

/// The prime field F_p for a small odd-ish prime, 3 <= p <= 31.
/// All element values are plain integers in [0, p); the field object carries
/// the modulus and small lookup tables (inverse, square roots, squares).
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
    Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }

    // Reduces an arbitrary signed value.
    Scalar reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }

    Scalar pow(Scalar a, std::uint64_t e) const;

    // Inverse by a^(p-2); p is tiny so this is branch-free and cheap.
    Scalar inv(Scalar a) const {
        if (a == 0) throw UsageError("division by zero in F_p");
        return inv_[a];
    }

    bool is_square(Scalar a) const { return a == 0 || sqrt_[a] != kNoRoot; }

    // Some square root of a, or throws if a is a non-residue.
    Scalar sqrt(Scalar a) const {
        if (!is_square(a)) throw UsageError("not a square mod p");
        return a == 0 ? 0 : sqrt_[a];
    }

    // Legendre-style character: 0 for 0, +1 for squares, -1 for non-squares.
    int chi(Scalar a) const {
        if (a == 0) return 0;
        return is_square(a) ? 1 : -1;
    }

    Scalar half() const { return inv_[2 % p_]; }  // 1/2, p odd

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    static constexpr Scalar kNoRoot = 0xffffffff;
    std::uint32_t p_;
    std::vector<Scalar> inv_;
    std::vector<Scalar> sqrt_;
};

// p^e as uint64, throwing BudgetError when it would not fit or exceeds cap.
std::uint64_t checked_pow(std::uint32_t p, std::uint32_t e, std::uint64_t cap);

}  // namespace fpq
