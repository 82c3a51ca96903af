#include "fpq/quadform.hpp"

#include <algorithm>

namespace fpq {

QuadraticPoly::QuadraticPoly(const PrimeField& f, std::uint32_t n)
    : field_(f), n_(n), quad_(n * (n + 1) / 2, 0), lin_(n, 0) {
    if (f.p() == 2) throw UsageError("quadratic forms need odd p");
}

QuadraticPoly QuadraticPoly::from_poly(const Polynomial& p) {
    if (p.degree() > 2) throw UsageError("from_poly: degree exceeds 2");
    QuadraticPoly q(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) {
        switch (m.degree()) {
            case 0:
                q.cst_ = c;
                break;
            case 1:
                for (std::uint32_t i = 0; i < p.nvars(); ++i)
                    if (m.exps[i]) q.lin_[i] = c;
                break;
            default: {
                std::uint32_t a = UINT32_MAX, b = UINT32_MAX;
                for (std::uint32_t i = 0; i < p.nvars(); ++i) {
                    if (m.exps[i] == 2) a = b = i;
                    else if (m.exps[i] == 1) (a == UINT32_MAX ? a : b) = i;
                }
                q.quad_[q.pack(a, b)] = c;
            }
        }
    }
    return q;
}

Polynomial QuadraticPoly::to_poly() const {
    Polynomial out(field_, n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = i; j < n_; ++j) {
            Scalar c = quad_[pack(i, j)];
            if (c == 0) continue;
            Monomial m{std::vector<std::uint8_t>(n_, 0)};
            m.exps[i] += 1;
            m.exps[j] += 1;
            out.add_term(std::move(m), c);
        }
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (lin_[i] == 0) continue;
        Monomial m{std::vector<std::uint8_t>(n_, 0)};
        m.exps[i] = 1;
        out.add_term(std::move(m), lin_[i]);
    }
    out.add_term(Monomial{std::vector<std::uint8_t>(n_, 0)}, cst_);
    return out;
}

Scalar QuadraticPoly::evaluate(const Vec& x) const {
    if (x.size() != n_) throw UsageError("QuadraticPoly::evaluate: dimension mismatch");
    std::uint64_t acc = cst_;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        acc += static_cast<std::uint64_t>(lin_[i]) * x[i];
        for (std::uint32_t j = i; j < n_; ++j)
            acc += static_cast<std::uint64_t>(quad_[pack(i, j)]) * x[i] % field_.p() * x[j];
    }
    return static_cast<Scalar>(acc % field_.p());
}

bool QuadraticPoly::is_zero() const {
    return cst_ == 0 && vec_is_zero(lin_) && vec_is_zero(quad_);
}

bool QuadraticPoly::homogeneous_is_zero() const { return vec_is_zero(quad_); }

QuadraticPoly QuadraticPoly::operator+(const QuadraticPoly& o) const {
    QuadraticPoly r = *this;
    for (size_t i = 0; i < quad_.size(); ++i) r.quad_[i] = field_.add(r.quad_[i], o.quad_[i]);
    for (std::uint32_t i = 0; i < n_; ++i) r.lin_[i] = field_.add(r.lin_[i], o.lin_[i]);
    r.cst_ = field_.add(r.cst_, o.cst_);
    return r;
}

QuadraticPoly QuadraticPoly::scaled(Scalar c) const {
    QuadraticPoly r = *this;
    for (auto& v : r.quad_) v = field_.mul(v, c);
    for (auto& v : r.lin_) v = field_.mul(v, c);
    r.cst_ = field_.mul(r.cst_, c);
    return r;
}

Mat QuadraticPoly::gram_matrix() const {
    Mat m(n_, Vec(n_, 0));
    for (std::uint32_t i = 0; i < n_; ++i) {
        m[i][i] = field_.mul(2, quad_[pack(i, i)]);
        for (std::uint32_t j = i + 1; j < n_; ++j) m[i][j] = m[j][i] = quad_[pack(i, j)];
    }
    return m;
}

QuadraticPoly QuadraticPoly::restricted(const Subspace& s) const {
    return from_poly(restrict_to(to_poly(), s));
}

Scalar gram_pair(const QuadraticPoly& q, const Vec& s, const Vec& t) {
    const PrimeField& f = q.field();
    if (s.size() != q.nvars() || t.size() != q.nvars())
        throw UsageError("gram_pair: dimension mismatch");
    Mat m = q.gram_matrix();
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < q.nvars(); ++i) {
        if (s[i] == 0) continue;
        std::uint64_t row = 0;
        for (std::uint32_t j = 0; j < q.nvars(); ++j)
            row += static_cast<std::uint64_t>(m[i][j]) * t[j];
        acc += s[i] * (row % f.p());
    }
    return static_cast<Scalar>(acc % f.p());
}

LinearForm regularity_pairing_form(const QuadraticPoly& q, const Vec& t) {
    if (t.size() != q.nvars()) throw UsageError("pairing form: dimension mismatch");
    const PrimeField& f = q.field();
    Mat m = q.gram_matrix();
    LinearForm out;
    out.coeffs.assign(q.nvars(), 0);
    for (std::uint32_t j = 0; j < q.nvars(); ++j) {
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < q.nvars(); ++i)
            acc += static_cast<std::uint64_t>(m[i][j]) * t[i];
        out.coeffs[j] = static_cast<Scalar>(acc % f.p());
    }
    return out;
}

const char* witt_name(WittType w) {
    switch (w) {
        case WittType::kOdd: return "odd";
        case WittType::kHyperbolic: return "hyperbolic";
        default: return "nonhyperbolic";
    }
}

QuadraticPoly form_product(const PrimeField& f, const LinearForm& a, const LinearForm& b) {
    if (a.n() != b.n()) throw UsageError("form_product: arity mismatch");
    QuadraticPoly q(f, a.n());
    for (std::uint32_t i = 0; i < a.n(); ++i) {
        for (std::uint32_t j = i; j < a.n(); ++j) {
            Scalar c = i == j ? f.mul(a.coeffs[i], b.coeffs[i])
                              : f.add(f.mul(a.coeffs[i], b.coeffs[j]),
                                      f.mul(a.coeffs[j], b.coeffs[i]));
            q.set_quad_coeff(i, j, c);
        }
        q.linear()[i] =
            f.add(f.mul(a.coeffs[i], b.constant), f.mul(b.coeffs[i], a.constant));
    }
    q.set_constant(f.mul(a.constant, b.constant));
    return q;
}

namespace {

// Homogeneous quadratic coefficient table with form bookkeeping.
struct HomTable {
    const PrimeField* f;
    std::uint32_t n;
    Vec a;  // packed upper-tri

    std::uint32_t pack(std::uint32_t i, std::uint32_t j) const {
        if (i > j) std::swap(i, j);
        return i * n - i * (i - 1) / 2 + (j - i);
    }
    Scalar get(std::uint32_t i, std::uint32_t j) const { return a[pack(i, j)]; }
    bool zero() const { return vec_is_zero(a); }

    void subtract_product(const LinearForm& u, const LinearForm& v, Scalar scale) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i; j < n; ++j) {
                Scalar c = i == j ? f->mul(u.coeffs[i], v.coeffs[i])
                                  : f->add(f->mul(u.coeffs[i], v.coeffs[j]),
                                           f->mul(u.coeffs[j], v.coeffs[i]));
                a[pack(i, j)] = f->sub(a[pack(i, j)], f->mul(scale, c));
            }
    }
};

LinearForm scale_form(const PrimeField& f, const LinearForm& a, Scalar c) {
    LinearForm r;
    r.coeffs = vec_scale(f, c, a.coeffs);
    r.constant = f.mul(c, a.constant);
    return r;
}

LinearForm add_forms(const PrimeField& f, const LinearForm& a, const LinearForm& b) {
    LinearForm r;
    r.coeffs = vec_add(f, a.coeffs, b.coeffs);
    r.constant = f.add(a.constant, b.constant);
    return r;
}

LinearForm sub_forms(const PrimeField& f, const LinearForm& a, const LinearForm& b) {
    LinearForm r;
    r.coeffs = vec_sub(f, a.coeffs, b.coeffs);
    r.constant = f.sub(a.constant, b.constant);
    return r;
}

std::vector<std::pair<Scalar, LinearForm>> deflate(HomTable t) {
    const PrimeField& f = *t.f;
    std::vector<std::pair<Scalar, LinearForm>> out;
    while (!t.zero()) {
        std::uint32_t sq = UINT32_MAX;
        for (std::uint32_t i = 0; i < t.n; ++i)
            if (t.get(i, i) != 0) {
                sq = i;
                break;
            }
        if (sq != UINT32_MAX) {
            Scalar d = t.get(sq, sq);
            LinearForm lam;
            lam.coeffs.assign(t.n, 0);
            lam.coeffs[sq] = 1;
            Scalar inv2d = f.inv(f.mul(2, d));
            for (std::uint32_t j = 0; j < t.n; ++j)
                if (j != sq) lam.coeffs[j] = f.mul(t.get(sq, j), inv2d);
            t.subtract_product(lam, lam, d);
            out.emplace_back(d, std::move(lam));
            continue;
        }
        // all squares vanish: pick a cross term and split it into two squares
        std::uint32_t pi = UINT32_MAX, pj = UINT32_MAX;
        for (std::uint32_t i = 0; i < t.n && pi == UINT32_MAX; ++i)
            for (std::uint32_t j = i + 1; j < t.n; ++j)
                if (t.get(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        Scalar c = t.get(pi, pj);
        Scalar cinv = f.inv(c);
        LinearForm ell1, ell2;  // x_i + beta/c, x_j + alpha/c
        ell1.coeffs.assign(t.n, 0);
        ell2.coeffs.assign(t.n, 0);
        ell1.coeffs[pi] = 1;
        ell2.coeffs[pj] = 1;
        for (std::uint32_t k = 0; k < t.n; ++k) {
            if (k == pi || k == pj) continue;
            ell1.coeffs[k] = f.mul(t.get(pj, k), cinv);  // beta coeffs
            ell2.coeffs[k] = f.mul(t.get(pi, k), cinv);  // alpha coeffs
        }
        Scalar h = f.half();
        LinearForm plus = scale_form(f, add_forms(f, ell1, ell2), h);
        LinearForm minus = scale_form(f, sub_forms(f, ell1, ell2), h);
        // c*ell1*ell2 = c*plus^2 - c*minus^2
        t.subtract_product(plus, plus, c);
        t.subtract_product(minus, minus, f.neg(c));
        out.emplace_back(c, std::move(plus));
        out.emplace_back(f.neg(c), std::move(minus));
    }
    return out;
}

}  // namespace

std::vector<std::pair<Scalar, LinearForm>> diagonal_decomposition(const QuadraticPoly& q) {
    HomTable t{&q.field(), q.nvars(), q.packed_quad()};
    auto entries = deflate(t);
    // verify sum d_i lambda_i^2 reproduces the homogeneous part exactly
    QuadraticPoly check(q.field(), q.nvars());
    for (const auto& [d, lam] : entries)
        check = check + form_product(q.field(), scale_form(q.field(), lam, d), lam);
    if (check.packed_quad() != q.packed_quad())
        throw std::logic_error("diagonal decomposition failed verification");
    return entries;
}

RankCertificate schmidt_rank(const QuadraticPoly& q) {
    const PrimeField& f = q.field();
    auto entries = diagonal_decomposition(q);
    RankCertificate cert;
    cert.gram_rank = static_cast<std::uint32_t>(entries.size());
    const std::uint32_t m = cert.gram_rank;

    if (m % 2 == 1) {
        cert.witt = WittType::kOdd;
    } else {
        Scalar prod = 1;
        for (const auto& [d, lam] : entries) prod = f.mul(prod, d);
        if ((m / 2) % 2 == 1) prod = f.neg(prod);  // (-1)^(m/2) * prod(d_i)
        cert.witt = (m == 0 || f.is_square(prod)) ? WittType::kHyperbolic
                                                  : WittType::kNonhyperbolic;
    }

    // Pair diagonal entries into products, preferring hyperbolic pairs and
    // falling back to an isotropic three-way split.
    while (entries.size() >= 2) {
        bool paired = false;
        for (size_t i = 0; i < entries.size() && !paired; ++i) {
            for (size_t j = i + 1; j < entries.size() && !paired; ++j) {
                Scalar prod = f.mul(entries[i].first, entries[j].first);
                if (!f.is_square(f.neg(prod))) continue;
                Scalar tt = f.sqrt(f.mul(f.neg(entries[j].first), f.inv(entries[i].first)));
                LinearForm l1 = scale_form(
                    f, sub_forms(f, entries[i].second, scale_form(f, entries[j].second, tt)),
                    entries[i].first);
                LinearForm l2 =
                    add_forms(f, entries[i].second, scale_form(f, entries[j].second, tt));
                cert.factors.emplace_back(std::move(l1), std::move(l2));
                entries.erase(entries.begin() + j);
                entries.erase(entries.begin() + i);
                paired = true;
            }
        }
        if (paired) continue;
        if (entries.size() >= 3) {
            // d1 u1^2 + d2 u2^2 + d3 u3^2 is isotropic; split a product off it.
            Scalar d1 = entries[0].first, d2 = entries[1].first, d3 = entries[2].first;
            Scalar e1 = 0, e2 = 0, e3 = 0;
            bool found = false;
            for (Scalar u1 = 0; u1 < f.p() && !found; ++u1) {
                for (Scalar u2 = 0; u2 < f.p() && !found; ++u2) {
                    Scalar rhs = f.mul(f.neg(f.add(f.mul(d1, f.mul(u1, u1)),
                                                   f.mul(d2, f.mul(u2, u2)))),
                                       f.inv(d3));
                    if (!f.is_square(rhs)) continue;
                    Scalar u3 = f.sqrt(rhs);
                    if (u1 == 0 && u2 == 0 && u3 == 0) continue;
                    e1 = u1;
                    e2 = u2;
                    e3 = u3;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("rank-3 diagonal form without isotropic vector");
            Scalar ds[3] = {d1, d2, d3};
            Scalar es[3] = {e1, e2, e3};
            std::uint32_t j = e1 != 0 ? 0u : (e2 != 0 ? 1u : 2u);
            Scalar beta = f.mul(2, f.mul(ds[j], es[j]));
            Scalar binv = f.inv(beta);
            // v = B(e, .) / beta in x-forms
            LinearForm v;
            v.coeffs.assign(q.nvars(), 0);
            for (int k = 0; k < 3; ++k)
                v = add_forms(f, v,
                              scale_form(f, entries[k].second,
                                         f.mul(f.mul(2, f.mul(ds[k], es[k])), binv)));
            LinearForm la = v;
            LinearForm lb = scale_form(
                f, sub_forms(f, scale_form(f, entries[j].second, 2), v), ds[j]);
            // residual = (d1 l1^2 + d2 l2^2 + d3 l3^2) - la*lb, rank 1
            HomTable res{&f, q.nvars(), Vec(q.nvars() * (q.nvars() + 1) / 2, 0)};
            for (int k = 0; k < 3; ++k)
                res.subtract_product(entries[k].second, entries[k].second, f.neg(ds[k]));
            res.subtract_product(la, lb, 1);
            auto rest = deflate(res);
            if (rest.size() != 1)
                throw std::logic_error("three-way split residual is not rank 1");
            cert.factors.emplace_back(std::move(la), std::move(lb));
            entries.erase(entries.begin(), entries.begin() + 3);
            entries.push_back(std::move(rest[0]));
            continue;
        }
        // two anisotropic entries left: emit both as square products
        for (auto& [d, lam] : entries)
            cert.factors.emplace_back(scale_form(f, lam, d), lam);
        entries.clear();
    }
    if (entries.size() == 1)
        cert.factors.emplace_back(scale_form(f, entries[0].second, entries[0].first),
                                  entries[0].second);

    cert.schmidt_rank = static_cast<std::uint32_t>(cert.factors.size());
    std::uint32_t expected = m % 2 == 1 ? (m + 1) / 2
                             : cert.witt == WittType::kNonhyperbolic ? m / 2 + 1
                                                                     : m / 2;
    if (cert.schmidt_rank != expected)
        throw std::logic_error("schmidt rank certificate does not match classification");

    // remainder = Q - sum of products; must be affine and re-expand exactly
    QuadraticPoly acc(f, q.nvars());
    for (const auto& [a, b] : cert.factors) acc = acc + form_product(f, a, b);
    QuadraticPoly diff = q + acc.scaled(f.p() - 1);
    if (!diff.homogeneous_is_zero())
        throw std::logic_error("certificate re-expansion mismatch");
    cert.remainder.coeffs = diff.linear();
    cert.remainder.constant = diff.constant();
    return cert;
}

}  // namespace fpq
