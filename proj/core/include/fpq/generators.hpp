#pragma once

#include <cstdint>
#include <vector>

#include "fpq/family.hpp"
#include "fpq/subset.hpp"

namespace fpq {

/// SplitMix64 sequence; identical seeds yield bit-identical artifacts.
/// Bounded draws use plain modulo reduction of the 64-bit output.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    Scalar scalar(const PrimeField& f) { return static_cast<Scalar>(below(f.p())); }
};

Vec random_point(const PrimeField& f, std::uint32_t n, SplitMix64& rng);
Vec random_nonzero_point(const PrimeField& f, std::uint32_t n, SplitMix64& rng);

// Uniform coefficients over all monomials of degree <= d (or exactly d when
// homogeneous). exact_degree redraws until the top-degree part is nonzero.
Polynomial random_polynomial(const PrimeField& f, std::uint32_t n, std::uint32_t d,
                             SplitMix64& rng, bool exact_degree = false);
Polynomial random_homogeneous(const PrimeField& f, std::uint32_t n, std::uint32_t d,
                              SplitMix64& rng, bool nonzero = true);
QuadraticPoly random_quadratic(const PrimeField& f, std::uint32_t n, SplitMix64& rng);

struct StructuredQuartic {
    Polynomial f;
    std::vector<QuadraticPoly> ground_truth;  // the 2k product factors
};

// f = sum_{i<=k} Q_i Q'_i with homogeneous quadratic factors; the attached
// family passes the zero-set implication by construction.
StructuredQuartic structured_quartic(const PrimeField& f, std::uint32_t n, std::uint32_t k,
                                     SplitMix64& rng);

// Exactly floor(mu * p^n) members, sampled without replacement.
GroupSubset random_subset(const PrimeField& f, std::uint32_t n, double mu, SplitMix64& rng,
                          std::uint64_t budget = kDefaultBudget);

Subspace random_subspace(const PrimeField& f, std::uint32_t n, std::uint32_t codim,
                         SplitMix64& rng);

}  // namespace fpq
