#include "fpq/generators.hpp"

#include <numeric>

#include "fpq/probe.hpp"

namespace fpq {

Vec random_point(const PrimeField& f, std::uint32_t n, SplitMix64& rng) {
    Vec x(n);
    for (auto& v : x) v = rng.scalar(f);
    return x;
}

Vec random_nonzero_point(const PrimeField& f, std::uint32_t n, SplitMix64& rng) {
    while (true) {
        Vec x = random_point(f, n, rng);
        if (!vec_is_zero(x)) return x;
    }
}

Polynomial random_polynomial(const PrimeField& f, std::uint32_t n, std::uint32_t d,
                             SplitMix64& rng, bool exact_degree) {
    while (true) {
        Polynomial out(f, n);
        for (const auto& m : monomials_up_to(n, d)) out.add_term(m, rng.scalar(f));
        if (!exact_degree || out.degree() == static_cast<int>(d)) return out;
    }
}

Polynomial random_homogeneous(const PrimeField& f, std::uint32_t n, std::uint32_t d,
                              SplitMix64& rng, bool nonzero) {
    while (true) {
        Polynomial out(f, n);
        for (const auto& m : monomials_up_to(n, d))
            if (m.degree() == d) out.add_term(m, rng.scalar(f));
        if (!nonzero || !out.is_zero()) return out;
    }
}

QuadraticPoly random_quadratic(const PrimeField& f, std::uint32_t n, SplitMix64& rng) {
    return QuadraticPoly::from_poly(random_polynomial(f, n, 2, rng));
}

namespace {

// homogeneous quadratic that is not a product of two linear forms
Polynomial identifiable_factor(const PrimeField& f, std::uint32_t n, SplitMix64& rng) {
    while (true) {
        Polynomial q = random_homogeneous(f, n, 2, rng);
        if (schmidt_rank(QuadraticPoly::from_poly(q)).schmidt_rank >= 2) return q;
    }
}

}  // namespace

StructuredQuartic structured_quartic(const PrimeField& f, std::uint32_t n, std::uint32_t k,
                                     SplitMix64& rng) {
    if (f.p() < 5) throw UsageError("structured quartics need p >= 5");
    StructuredQuartic out{Polynomial::zero(f, n), {}};
    std::vector<Polynomial> factors;
    for (std::uint32_t i = 0; i < k; ++i) {
        Polynomial q = identifiable_factor(f, n, rng);
        factors.push_back(q);
        Polynomial qp = Polynomial::zero(f, n);
        if (i == 0) {
            qp = identifiable_factor(f, n, rng);
        } else {
            // later co-factors are combinations of the factors drawn so far,
            // keeping the family span smaller than the variable count; the
            // derivative structure stays recoverable at desk scale
            while (schmidt_rank(QuadraticPoly::from_poly(qp)).schmidt_rank < 2) {
                qp = Polynomial::zero(f, n);
                for (const auto& g : factors) qp = qp + g.scaled(rng.scalar(f));
                qp = qp + factors.back().scaled(1);  // keep the newest involved
            }
        }
        factors.push_back(qp);
        out.f = out.f + multiply(q, qp);
        out.ground_truth.push_back(QuadraticPoly::from_poly(q));
        out.ground_truth.push_back(QuadraticPoly::from_poly(qp));
    }
    return out;
}

GroupSubset random_subset(const PrimeField& f, std::uint32_t n, double mu, SplitMix64& rng,
                          std::uint64_t budget) {
    if (mu < 0 || mu > 1) throw UsageError("random_subset: mu must be in [0, 1]");
    const std::uint64_t total = checked_pow(f.p(), n, budget);
    const std::uint64_t m =
        static_cast<std::uint64_t>(mu * static_cast<double>(total));
    std::vector<std::uint64_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t j = i + rng.below(total - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(m);
    return GroupSubset::from_indices(f, n, idx, budget);
}

Subspace random_subspace(const PrimeField& f, std::uint32_t n, std::uint32_t codim,
                         SplitMix64& rng) {
    if (codim > n) throw UsageError("random_subspace: codim > n");
    const std::uint32_t dim = n - codim;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Mat rows;
        for (std::uint32_t i = 0; i < dim; ++i) rows.push_back(random_point(f, n, rng));
        Subspace s = Subspace::from_vectors(f, n, std::move(rows));
        if (s.dim() == dim) return s;
    }
    throw std::logic_error("random_subspace: rejection sampling failed");
}

}  // namespace fpq
