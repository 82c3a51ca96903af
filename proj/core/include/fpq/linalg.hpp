#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fpq/field.hpp"

namespace fpq {

using Mat = std::vector<Vec>;  // dense rows over F_p

// ---- vector helpers ------------------------------------------------------

Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_scale(const PrimeField& f, Scalar c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Row-major base-p rank of a point (first coordinate most significant).
std::uint64_t point_rank(const PrimeField& f, const Vec& x);
Vec point_unrank(const PrimeField& f, std::uint32_t n, std::uint64_t idx);

// Digit-wise group arithmetic directly on point ranks.
std::uint64_t rank_add(const PrimeField& f, std::uint32_t n, std::uint64_t a, std::uint64_t b);
std::uint64_t rank_sub(const PrimeField& f, std::uint32_t n, std::uint64_t a, std::uint64_t b);
std::uint64_t rank_neg(const PrimeField& f, std::uint32_t n, std::uint64_t a);

// ---- plain matrix kernels ------------------------------------------------

// In-place reduced row echelon form; returns pivot column per row.
std::vector<std::uint32_t> rref(const PrimeField& f, Mat& m);

// Canonical RREF basis of { x : rows * x = 0 }.
Mat null_space(const PrimeField& f, const Mat& rows, std::uint32_t n);

std::uint32_t rank(const PrimeField& f, Mat m);

// One solution of rows*x = rhs (free variables set to 0), or nullopt.
std::optional<Vec> solve(const PrimeField& f, const Mat& rows, const Vec& rhs,
                         std::uint32_t n);

// ---- affine-linear forms --------------------------------------------------

/// coeffs . x + constant
struct LinearForm {
    Vec coeffs;
    Scalar constant = 0;

    std::uint32_t n() const { return static_cast<std::uint32_t>(coeffs.size()); }
    bool homogeneous() const { return constant == 0; }
    bool is_zero() const { return constant == 0 && vec_is_zero(coeffs); }
    Scalar eval(const PrimeField& f, const Vec& x) const;
};

// ---- subspaces ------------------------------------------------------------

/// Linear subspace of F_p^n held as a reduced-row-echelon basis, so that
/// value equality is set equality.
class Subspace {
  public:
    Subspace(const PrimeField& f, std::uint32_t n) : p_(f.p()), n_(n) {}

    static Subspace from_vectors(const PrimeField& f, std::uint32_t n, Mat rows);
    static Subspace full(const PrimeField& f, std::uint32_t n);
    static Subspace zero(const PrimeField& f, std::uint32_t n);

    std::uint32_t ambient_dim() const { return n_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    std::uint32_t codim() const { return n_ - dim(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    PrimeField field() const { return PrimeField(p_); }

    bool contains(const Vec& x) const;
    // Coordinates of a member w.r.t. the RREF basis (= values at pivot columns).
    Vec coordinates(const Vec& x) const;
    Vec point_from_coordinates(const Vec& c) const;

    // Rows spanning the annihilator { c : c.b = 0 for all basis rows b }.
    Mat constraint_forms() const;

    bool operator==(const Subspace& o) const {
        return p_ == o.p_ && n_ == o.n_ && basis_ == o.basis_;
    }

  private:
    std::uint32_t p_;
    std::uint32_t n_;
    Mat basis_;  // RREF rows, pivots strictly increasing
    std::vector<std::uint32_t> pivots_;
};

/// offset + direction, with the lexicographically least coset member as the
/// canonical offset.
struct AffineSubspace {
    Vec offset;
    Subspace direction;

    AffineSubspace(Vec off, Subspace dir);
    std::uint32_t ambient_dim() const { return direction.ambient_dim(); }
    std::uint32_t dim() const { return direction.dim(); }
    bool contains(const Vec& x) const;
};

// ---- module operations -----------------------------------------------------

// Solves form_i(x) = target_i; returns (particular solution, kernel) or
// nullopt when inconsistent.
std::optional<std::pair<Vec, Subspace>> solve_linear_system(
    const PrimeField& f, const std::vector<LinearForm>& rows, const Vec& targets,
    std::uint32_t n);

// Common kernel of homogeneous forms.
Subspace annihilator_subspace(const PrimeField& f, const std::vector<LinearForm>& forms,
                              std::uint32_t n);

Subspace intersect_subspaces(const Subspace& a, const Subspace& b);

// Deterministic streaming enumeration: base-p counter over basis coefficients,
// first basis row most significant. Emits exactly p^dim points.
void for_each_point(const Subspace& s, const std::function<void(const Vec&)>& fn,
                    std::uint64_t budget = kDefaultBudget);
void for_each_point(const AffineSubspace& s, const std::function<void(const Vec&)>& fn,
                    std::uint64_t budget = kDefaultBudget);
// Full-space variant (identity basis), same order as point_rank.
void for_each_point(const PrimeField& f, std::uint32_t n,
                    const std::function<void(const Vec&)>& fn,
                    std::uint64_t budget = kDefaultBudget);

std::vector<Vec> enumerate_points(const Subspace& s, std::uint64_t budget = kDefaultBudget);
std::vector<Vec> enumerate_points(const AffineSubspace& s,
                                  std::uint64_t budget = kDefaultBudget);

// All r-dimensional subspaces of F_p^n (RREF enumeration). Throws BudgetError
// if there are more than `cap` of them.
std::vector<Subspace> all_subspaces_of_dim(const PrimeField& f, std::uint32_t n,
                                           std::uint32_t r, std::uint64_t cap = 1u << 20);

// Nonzero vectors with the first nonzero entry normalized to 1, one per
// projective class, in a fixed deterministic order.
void for_each_projective_vector(const PrimeField& f, std::uint32_t n,
                                const std::function<void(const Vec&)>& fn);

}  // namespace fpq
