#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpq/linalg.hpp"

namespace fpq {

/// Exponent vector with per-variable exponents already reduced by x^p = x.
struct Monomial {
    std::vector<std::uint8_t> exps;

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps < b.exps;
    }
};

/// Canonical sparse multivariate polynomial over F_p. Terms are kept sorted
/// in graded-lex order with nonzero coefficients and exponents reduced by
/// x^p = x, so representation equality is function equality.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

    Polynomial(const PrimeField& f, std::uint32_t n) : field_(f), n_(n) {}
    static Polynomial zero(const PrimeField& f, std::uint32_t n) { return Polynomial(f, n); }
    static Polynomial constant(const PrimeField& f, std::uint32_t n, Scalar c);
    static Polynomial variable(const PrimeField& f, std::uint32_t n, std::uint32_t i);
    static Polynomial from_form(const PrimeField& f, const LinearForm& form);

    const PrimeField& field() const { return field_; }
    std::uint32_t p() const { return field_.p(); }
    std::uint32_t nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Degree of the zero polynomial is -1 so deg(D_h f) <= deg(f) - 1 holds
    // unconditionally.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }

    void add_term(Monomial m, Scalar c);  // accumulates, reduces, drops zeros
    Scalar coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial scaled(Scalar c) const;
    bool operator==(const Polynomial& o) const {
        return p() == o.p() && n_ == o.n_ && terms_ == o.terms_;
    }

    Scalar evaluate(const Vec& x) const;

    std::string to_string() const;

  private:
    PrimeField field_;
    std::uint32_t n_;
    TermMap terms_;
};

// Product with x^p = x reduction. Requires deg f + deg g <= degree_cap and
// deg f + deg g < p (the calculus in use only covers degrees below p).
Polynomial multiply(const Polynomial& f, const Polynomial& g, std::uint32_t degree_cap = 8);

// f(x+h) - f(x).
Polynomial discrete_derivative(const Polynomial& f, const Vec& h);
// Left fold of discrete_derivative over at most 5 directions.
Polynomial iterated_derivative(const Polynomial& f, const std::vector<Vec>& hs);
// f(x+h).
Polynomial shift(const Polynomial& f, const Vec& h);

// Sum of terms of total degree exactly d.
Polynomial homogeneous_part(const Polynomial& f, std::uint32_t d);

// Substitute x_i = subs[i], a form in `m` fresh variables.
Polynomial compose_linear(const Polynomial& f, const std::vector<LinearForm>& subs,
                          std::uint32_t m);

// Polynomial in dim(S) fresh coordinates via x = offset + sum c_j b_j.
Polynomial restrict_to(const Polynomial& f, const AffineSubspace& s);
Polynomial restrict_to(const Polynomial& f, const Subspace& s);

// Throws unless deg(f) < p; derivative-based degree semantics need d < p.
void ensure_degree_semantics(const Polynomial& f);

/// Dense evaluation table in row-major base-p point order.
struct ValueTable {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::vector<Scalar> values;  // length p^n
};

ValueTable to_table(const Polynomial& f, std::uint64_t budget = kDefaultBudget);
// Unique polynomial with per-variable exponents <= p-1 matching the table.
Polynomial interpolate_from_table(const ValueTable& t, std::uint64_t budget = kDefaultBudget);

// Text format: "3*x1^2*x2 + 4*x3" with coefficients in [0, p-1].
Polynomial parse_polynomial(const PrimeField& f, std::uint32_t n, const std::string& text);

}  // namespace fpq
