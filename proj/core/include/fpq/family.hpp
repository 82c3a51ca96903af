#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpq/quadform.hpp"
#include "fpq/rational.hpp"
#include "fpq/subset.hpp"

namespace fpq {

/// Ordered collection Q_1..Q_N of quadratics on a common ambient subspace.
struct QuadFamily {
    std::vector<QuadraticPoly> quads;
    Subspace ambient;

    QuadFamily(std::vector<QuadraticPoly> qs, Subspace amb);
    static QuadFamily on_full_space(const PrimeField& f, std::uint32_t n,
                                    std::vector<QuadraticPoly> qs);

    std::uint32_t size() const { return static_cast<std::uint32_t>(quads.size()); }
    std::uint32_t nvars() const { return ambient.ambient_dim(); }
    PrimeField field() const { return ambient.field(); }

    // sum a_i Q_i
    QuadraticPoly combination(const Vec& coeffs) const;
};

/// Max R such that the family is R-regular, with the witness combination
/// achieving the minimum. The empty family gets the sentinel p^n + 1.
struct RegularityResult {
    std::uint64_t regularity = 0;
    bool infinite = false;  // empty family sentinel
    Vec witness_coeffs;
    std::optional<RankCertificate> witness_cert;
};

RegularityResult regularity(const QuadFamily& fam, std::uint64_t budget = kDefaultBudget);

struct RegularizeResult {
    QuadFamily family;
    Subspace subspace;
    std::uint32_t eliminated = 0;
    std::uint32_t codim_added = 0;
};

// Drops low-rank witness combinations and restricts to the kernel of their
// certificate factors until the family is R-regular on the output subspace.
// Re-verifies regularity before returning.
RegularizeResult regularize(const QuadFamily& fam, std::uint32_t r_target,
                            std::uint64_t budget = kDefaultBudget);

/// Common zero set X = { x in base : Q_i(x) = 0 for all i }, held as a sorted
/// point-rank list plus a dense membership table over F_p^n.
struct ZeroSet {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::vector<std::uint64_t> points;       // sorted ranks
    std::vector<std::uint8_t> membership;    // dense over p^n

    std::uint64_t size() const { return points.size(); }
    bool contains_index(std::uint64_t idx) const { return membership[idx] != 0; }
    bool contains(const Vec& x) const;
};

ZeroSet zero_set(const QuadFamily& fam, const Subspace& base,
                 std::uint64_t budget = kDefaultBudget);
// X_t = X intersect (X - t).
ZeroSet shifted(const ZeroSet& z, const Vec& t);

// True iff (h_i, h_j)_Q = 0 for all family members and all i != j.
bool admissible(const QuadFamily& fam, const std::vector<Vec>& tuple);

struct AdmissibleDensityReport {
    Rational density{0, 1};
    Rational bound{0, 1};
    bool holds = false;
    std::uint64_t admissible_count = 0;
    std::uint64_t total_tuples = 0;
};

// Exact probability that (t, h1, h2, h3) in Fset x W^3 drawn from V1^4 is
// admissible, against the bound p^(-6N-3r) * mu with r = codim_V1(W).
AdmissibleDensityReport admissible_density(const GroupSubset& fset, const Subspace& w,
                                           const QuadFamily& fam,
                                           std::uint64_t budget = kDefaultBudget);

struct AffineCountReport {
    Rational deviation{0, 1};
    std::uint64_t count_a = 0;
    std::uint64_t count_ax = 0;
    std::uint64_t regularity_used = 0;
    bool regularity_infinite = false;
    bool holds = false;  // deviation <= p^(-R/2), compared exactly via squares
};

// |P(x in A and X) - p^-N P(x in A)| <= p^(-R/2) over the base space U.
AffineCountReport affine_counting_check(const AffineSubspace& a, const QuadFamily& fam,
                                        const Subspace& u,
                                        std::uint64_t budget = kDefaultBudget);

struct CubicityReport {
    Rational defect{0, 1};
    std::uint64_t admissible_count = 0;
    std::uint64_t violating_count = 0;
    bool no_admissible_tuples = false;
};

// Fraction of admissible (t, h) in Fset x W^3 with D_{h1}D_{h2}D_{h3}D_t f != 0.
// Requires deg(f) <= 4 so the fourth derivative is a constant.
CubicityReport cubicity_defect(const Polynomial& f, const GroupSubset& fset,
                               const Subspace& w, const QuadFamily& fam,
                               std::uint64_t budget = kDefaultBudget);

// Constant value of the fourfold derivative of a degree <= 4 polynomial,
// via the 16-corner alternating sum at base point 0.
Scalar fourfold_derivative_value(const Polynomial& f, const Vec& h1, const Vec& h2,
                                 const Vec& h3, const Vec& h4);

}  // namespace fpq
