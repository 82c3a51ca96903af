#pragma once

#include <cstdint>
#include <vector>

#include "fpq/poly.hpp"

namespace fpq {

/// Polynomial of degree <= 2 split into homogeneous table, linear part and
/// constant. p must be odd so the polar pairing divides by 2.
class QuadraticPoly {
  public:
    QuadraticPoly(const PrimeField& f, std::uint32_t n);
    static QuadraticPoly from_poly(const Polynomial& p);
    Polynomial to_poly() const;

    const PrimeField& field() const { return field_; }
    std::uint32_t nvars() const { return n_; }

    // Coefficient of x_i x_j (i <= j) in the homogeneous part.
    Scalar quad_coeff(std::uint32_t i, std::uint32_t j) const { return quad_[pack(i, j)]; }
    void set_quad_coeff(std::uint32_t i, std::uint32_t j, Scalar c) { quad_[pack(i, j)] = c % field_.p(); }
    const Vec& linear() const { return lin_; }
    Vec& linear() { return lin_; }
    Scalar constant() const { return cst_; }
    void set_constant(Scalar c) { cst_ = c % field_.p(); }

    // Packed upper-triangular homogeneous coefficients, for span arithmetic.
    const Vec& packed_quad() const { return quad_; }

    Scalar evaluate(const Vec& x) const;
    bool is_zero() const;
    bool homogeneous_is_zero() const;

    QuadraticPoly operator+(const QuadraticPoly& o) const;
    QuadraticPoly scaled(Scalar c) const;
    bool operator==(const QuadraticPoly& o) const {
        return quad_ == o.quad_ && lin_ == o.lin_ && cst_ == o.cst_;
    }

    // Symmetric Gram matrix: M[i][j] = coeff(x_i x_j) off-diagonal,
    // M[i][i] = 2 * coeff(x_i^2).
    Mat gram_matrix() const;

    QuadraticPoly restricted(const Subspace& s) const;

  private:
    std::uint32_t pack(std::uint32_t i, std::uint32_t j) const {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i - 1) / 2 + (j - i);
    }
    PrimeField field_;
    std::uint32_t n_;
    Vec quad_;  // upper-triangular packed, length n(n+1)/2
    Vec lin_;
    Scalar cst_ = 0;
};

// (s,t)_Q = Q(s+t) - Q(s) - Q(t); bilinear, symmetric, depends only on the
// homogeneous part.
Scalar gram_pair(const QuadraticPoly& q, const Vec& s, const Vec& t);

// The homogeneous linear form x -> (t, x)_Q.
LinearForm regularity_pairing_form(const QuadraticPoly& q, const Vec& t);

enum class WittType { kOdd, kHyperbolic, kNonhyperbolic };
const char* witt_name(WittType w);

/// Constructive rank certificate: gram rank m, Witt type, Schmidt rank r,
/// and an explicit presentation that re-expands to the input exactly.
struct RankCertificate {
    std::uint32_t gram_rank = 0;
    WittType witt = WittType::kHyperbolic;
    std::uint32_t schmidt_rank = 0;
    std::vector<std::pair<LinearForm, LinearForm>> factors;
    LinearForm remainder;  // affine
};

// Diagonalization Q_hom = sum d_i * lambda_i^2 (exact, verified internally).
std::vector<std::pair<Scalar, LinearForm>> diagonal_decomposition(const QuadraticPoly& q);

RankCertificate schmidt_rank(const QuadraticPoly& q);

// Product of two affine forms as a QuadraticPoly.
QuadraticPoly form_product(const PrimeField& f, const LinearForm& a, const LinearForm& b);

}  // namespace fpq
