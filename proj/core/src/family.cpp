#include "fpq/family.hpp"

#include <algorithm>

namespace fpq {

QuadFamily::QuadFamily(std::vector<QuadraticPoly> qs, Subspace amb)
    : quads(std::move(qs)), ambient(std::move(amb)) {
    for (const auto& q : quads)
        if (q.nvars() != ambient.ambient_dim() || q.field().p() != ambient.field().p())
            throw UsageError("QuadFamily: member dimension mismatch");
}

QuadFamily QuadFamily::on_full_space(const PrimeField& f, std::uint32_t n,
                                     std::vector<QuadraticPoly> qs) {
    return QuadFamily(std::move(qs), Subspace::full(f, n));
}

QuadraticPoly QuadFamily::combination(const Vec& coeffs) const {
    if (coeffs.size() != quads.size()) throw UsageError("combination: coefficient count");
    QuadraticPoly acc(field(), nvars());
    for (size_t i = 0; i < quads.size(); ++i)
        if (coeffs[i]) acc = acc + quads[i].scaled(coeffs[i]);
    return acc;
}

namespace {

bool is_full_space(const Subspace& s) { return s.dim() == s.ambient_dim(); }

}  // namespace

RegularityResult regularity(const QuadFamily& fam, std::uint64_t budget) {
    RegularityResult res;
    if (fam.quads.empty()) {
        res.infinite = true;
        res.regularity = checked_pow(fam.field().p(), fam.nvars(), budget) + 1;
        return res;
    }
    const std::uint32_t n_members = fam.size();
    checked_pow(fam.field().p(), n_members, budget);
    PrimeField f = fam.field();
    bool restrict = !is_full_space(fam.ambient);
    std::uint64_t best = UINT64_MAX;
    for_each_projective_vector(f, n_members, [&](const Vec& coeffs) {
        QuadraticPoly combo = fam.combination(coeffs);
        if (restrict) combo = combo.restricted(fam.ambient);
        RankCertificate cert = schmidt_rank(combo);
        if (cert.schmidt_rank < best) {
            best = cert.schmidt_rank;
            res.witness_coeffs = coeffs;
            res.witness_cert = std::move(cert);
        }
    });
    res.regularity = best;
    return res;
}

RegularizeResult regularize(const QuadFamily& fam, std::uint32_t r_target,
                            std::uint64_t budget) {
    if (r_target < 1) throw UsageError("regularize: R must be >= 1");
    PrimeField f = fam.field();
    const std::uint32_t n = fam.nvars();
    std::vector<QuadraticPoly> quads = fam.quads;
    Subspace v = fam.ambient;
    std::uint32_t eliminated = 0;
    const std::uint32_t codim_in = v.codim();

    while (true) {
        QuadFamily cur(quads, v);
        RegularityResult reg = regularity(cur, budget);
        if (reg.infinite || reg.regularity >= r_target) break;

        // Eliminate the largest-index member of the witness combination and
        // restrict to the kernel of the certificate's first factors.
        std::uint32_t drop = 0;
        for (std::uint32_t i = 0; i < quads.size(); ++i)
            if (reg.witness_coeffs[i] != 0) drop = i;

        std::vector<LinearForm> alphas;
        bool restricted = !is_full_space(v);
        for (const auto& [a, b] : reg.witness_cert->factors) {
            LinearForm amb;
            amb.coeffs.assign(n, 0);
            if (restricted) {
                // map subspace-coordinate form back through the RREF pivots
                for (std::uint32_t j = 0; j < v.dim(); ++j)
                    amb.coeffs[v.pivots()[j]] = a.coeffs[j];
            } else {
                amb.coeffs = a.coeffs;
            }
            if (!vec_is_zero(amb.coeffs)) alphas.push_back(std::move(amb));
        }
        if (!alphas.empty())
            v = intersect_subspaces(v, annihilator_subspace(f, alphas, n));
        quads.erase(quads.begin() + drop);
        ++eliminated;
    }

    RegularizeResult out{QuadFamily(quads, v), v, eliminated, v.codim() - codim_in};
    // re-verify before returning
    RegularityResult check = regularity(out.family, budget);
    if (!check.infinite && check.regularity < r_target)
        throw std::logic_error("regularize postcondition failed");
    return out;
}

bool ZeroSet::contains(const Vec& x) const {
    return contains_index(point_rank(PrimeField(p), x));
}

ZeroSet zero_set(const QuadFamily& fam, const Subspace& base, std::uint64_t budget) {
    if (base.ambient_dim() != fam.nvars()) throw UsageError("zero_set: ambient mismatch");
    PrimeField f = fam.field();
    ZeroSet z;
    z.p = f.p();
    z.n = fam.nvars();
    z.membership.assign(checked_pow(f.p(), fam.nvars(), budget), 0);
    for_each_point(base, [&](const Vec& x) {
        for (const auto& q : fam.quads)
            if (q.evaluate(x) != 0) return;
        std::uint64_t idx = point_rank(f, x);
        if (!z.membership[idx]) {
            z.membership[idx] = 1;
            z.points.push_back(idx);
        }
    }, budget);
    std::sort(z.points.begin(), z.points.end());
    return z;
}

ZeroSet shifted(const ZeroSet& z, const Vec& t) {
    PrimeField f(z.p);
    if (t.size() != z.n) throw UsageError("shifted: dimension mismatch");
    std::uint64_t t_rank = point_rank(f, t);
    ZeroSet out;
    out.p = z.p;
    out.n = z.n;
    out.membership.assign(z.membership.size(), 0);
    for (std::uint64_t idx : z.points) {
        if (!z.membership[rank_add(f, z.n, idx, t_rank)]) continue;
        out.membership[idx] = 1;
        out.points.push_back(idx);
    }
    return out;
}

bool admissible(const QuadFamily& fam, const std::vector<Vec>& tuple) {
    if (tuple.size() > 4) throw UsageError("admissible: tuple length exceeds 4");
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            for (const auto& q : fam.quads)
                if (gram_pair(q, tuple[i], tuple[j]) != 0) return false;
    return true;
}

namespace {

// Basis restriction: subspace spanned by `basis` cut by the pairing forms of
// point x; returns the new basis.
Mat cut_by_pairing_forms(const PrimeField& f, const QuadFamily& fam, const Mat& basis,
                         const Vec& x) {
    if (basis.empty()) return basis;
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    Mat constraint(fam.size(), Vec(k, 0));
    for (std::uint32_t qi = 0; qi < fam.size(); ++qi) {
        LinearForm form = regularity_pairing_form(fam.quads[qi], x);
        for (std::uint32_t j = 0; j < k; ++j)
            constraint[qi][j] = form.eval(f, basis[j]);
    }
    Mat kernel = null_space(f, constraint, k);
    Mat out;
    for (const auto& comb : kernel) {
        Vec v(basis[0].size(), 0);
        for (std::uint32_t j = 0; j < k; ++j)
            if (comb[j])
                for (size_t c = 0; c < v.size(); ++c)
                    v[c] = f.add(v[c], f.mul(comb[j], basis[j][c]));
        out.push_back(std::move(v));
    }
    return out;
}

std::uint32_t dim_after_cut(const PrimeField& f, const QuadFamily& fam, const Mat& basis,
                            const Vec& x) {
    if (basis.empty()) return 0;
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    Mat constraint(fam.size(), Vec(k, 0));
    for (std::uint32_t qi = 0; qi < fam.size(); ++qi) {
        LinearForm form = regularity_pairing_form(fam.quads[qi], x);
        for (std::uint32_t j = 0; j < k; ++j)
            constraint[qi][j] = form.eval(f, basis[j]);
    }
    return k - rank(f, constraint);
}

void enumerate_span(const PrimeField& f, const Mat& basis, std::uint32_t n,
                    const std::function<void(const Vec&)>& fn) {
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    Vec digits(k, 0);
    Vec x(n, 0);
    while (true) {
        fn(x);
        std::uint32_t i = k;
        while (i-- > 0) {
            if (digits[i] + 1 < f.p()) {
                ++digits[i];
                for (std::uint32_t j = 0; j < n; ++j) x[j] = f.add(x[j], basis[i][j]);
                break;
            }
            digits[i] = 0;
            for (std::uint32_t j = 0; j < n; ++j) x[j] = f.add(x[j], basis[i][j]);
        }
        if (i == static_cast<std::uint32_t>(-1)) break;
    }
}

struct IterationGuard {
    std::uint64_t remaining;
    void tick(std::uint64_t cost = 1) {
        if (cost > remaining)
            throw BudgetError("admissible-tuple enumeration exceeds budget");
        remaining -= cost;
    }
};

}  // namespace

AdmissibleDensityReport admissible_density(const GroupSubset& fset, const Subspace& w,
                                           const QuadFamily& fam, std::uint64_t budget) {
    PrimeField f = fam.field();
    const std::uint32_t n = fam.nvars();
    if (fset.n() != n || w.ambient_dim() != n)
        throw UsageError("admissible_density: dimension mismatch");
    const std::uint64_t v1 = checked_pow(f.p(), fam.ambient.dim(), UINT64_MAX);
    if (v1 > 21000) throw BudgetError("admissible_density: |V1|^4 exceeds exact range");

    const std::uint32_t r = fam.ambient.dim() - w.dim();
    const std::uint32_t big_n = fam.size();

    std::uint64_t count = 0;
    if (big_n == 0) {
        std::uint64_t w3 = 1;
        for (int i = 0; i < 3; ++i) w3 *= checked_pow(f.p(), w.dim(), UINT64_MAX);
        count = fset.size() * w3;
    } else {
        IterationGuard guard{budget * 64};
        for (std::uint64_t t_idx : fset.indices()) {
            Vec t = point_unrank(f, n, t_idx);
            Mat vt = cut_by_pairing_forms(f, fam, w.basis(), t);
            guard.tick(1 + (vt.empty() ? 0 : checked_pow(f.p(), vt.size(), UINT64_MAX)));
            enumerate_span(f, vt, n, [&](const Vec& h1) {
                Mat u1 = cut_by_pairing_forms(f, fam, vt, h1);
                std::uint64_t u1_points =
                    u1.empty() ? 1 : checked_pow(f.p(), u1.size(), UINT64_MAX);
                guard.tick(u1_points);
                enumerate_span(f, u1, n, [&](const Vec& h2) {
                    count += checked_pow(f.p(), dim_after_cut(f, fam, u1, h2), UINT64_MAX);
                });
            });
        }
    }

    AdmissibleDensityReport rep;
    rep.admissible_count = count;
    std::uint64_t v1_4 = v1 * v1 * v1 * v1;
    rep.total_tuples = v1_4;
    rep.density = Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(v1_4));
    const std::uint32_t exponent = 6 * big_n + 3 * r;
    if (exponent >= 40) {
        // bound below anything a nonzero count can miss
        rep.bound = Rational(0, 1);
        rep.holds = count > 0 || fset.size() == 0;
        return rep;
    }
    __int128 p_pow = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) p_pow *= f.p();
    // density >= bound = p^(-6N-3r) * mu  <=>  count * p^(6N+3r) >= |Fset| * |V1|^3
    __int128 lhs = static_cast<__int128>(count) * p_pow;
    __int128 rhs = static_cast<__int128>(fset.size()) * v1 * v1 * v1;
    rep.holds = lhs >= rhs;
    __int128 bound_den = static_cast<__int128>(v1) * p_pow;
    if (bound_den <= INT64_MAX)
        rep.bound = Rational(static_cast<std::int64_t>(fset.size()),
                             static_cast<std::int64_t>(bound_den));
    else
        rep.bound = Rational(0, 1);  // too small to represent; holds already decided
    return rep;
}

AffineCountReport affine_counting_check(const AffineSubspace& a, const QuadFamily& fam,
                                        const Subspace& u, std::uint64_t budget) {
    PrimeField f = fam.field();
    if (a.ambient_dim() != fam.nvars() || u.ambient_dim() != fam.nvars())
        throw UsageError("affine_counting_check: dimension mismatch");
    ZeroSet zs = zero_set(fam, u, budget);
    std::uint64_t count_a = 0, count_ax = 0;
    for_each_point(u, [&](const Vec& x) {
        if (!a.contains(x)) return;
        ++count_a;
        if (zs.contains(x)) ++count_ax;
    }, budget);

    AffineCountReport rep;
    rep.count_a = count_a;
    rep.count_ax = count_ax;
    QuadFamily on_u(fam.quads, u);
    RegularityResult reg = regularity(on_u, budget);
    rep.regularity_infinite = reg.infinite;
    rep.regularity_used = reg.infinite ? 0 : reg.regularity;

    const std::uint64_t u_size = checked_pow(f.p(), u.dim(), budget);
    std::uint64_t p_n = 1;
    for (std::uint32_t i = 0; i < fam.size(); ++i) p_n *= f.p();
    std::int64_t diff = static_cast<std::int64_t>(p_n * count_ax) -
                        static_cast<std::int64_t>(count_a);
    rep.deviation = Rational(diff < 0 ? -diff : diff,
                             static_cast<std::int64_t>(p_n * u_size));

    if (reg.infinite) {
        rep.holds = rep.deviation.num == 0;
        if (fam.size() == 0) rep.holds = true;  // deviation 0 <= 1
        return rep;
    }
    const std::uint64_t big_r = reg.regularity;
    if (big_r >= 64) {
        rep.holds = rep.deviation.num == 0;
        return rep;
    }
    // deviation^2 <= p^-R  <=>  diff^2 * p^R <= (p^N |U|)^2
    __int128 lhs = static_cast<__int128>(diff) * diff;
    for (std::uint64_t i = 0; i < big_r; ++i) lhs *= f.p();
    __int128 rhs = static_cast<__int128>(p_n * u_size) * (p_n * u_size);
    rep.holds = lhs <= rhs;
    return rep;
}

Scalar fourfold_derivative_value(const Polynomial& f, const Vec& h1, const Vec& h2,
                                 const Vec& h3, const Vec& h4) {
    const PrimeField& fld = f.field();
    const std::uint32_t n = f.nvars();
    Scalar acc = 0;
    const Vec* hs[4] = {&h1, &h2, &h3, &h4};
    Vec x(n);
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::fill(x.begin(), x.end(), 0);
        int bits = 0;
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) {
                ++bits;
                for (std::uint32_t j = 0; j < n; ++j) x[j] = fld.add(x[j], (*hs[i])[j]);
            }
        Scalar v = f.evaluate(x);
        acc = (bits % 2 == 0) ? fld.add(acc, v) : fld.sub(acc, v);
    }
    return acc;  // (-1)^(4-|w|) == (-1)^|w| since 4 is even
}

CubicityReport cubicity_defect(const Polynomial& f, const GroupSubset& fset,
                               const Subspace& w, const QuadFamily& fam,
                               std::uint64_t budget) {
    if (f.degree() > 4) throw UsageError("cubicity_defect: degree exceeds 4");
    ensure_degree_semantics(f);
    PrimeField fld = fam.field();
    const std::uint32_t n = fam.nvars();
    if (f.nvars() != n || fset.n() != n || w.ambient_dim() != n)
        throw UsageError("cubicity_defect: dimension mismatch");

    const bool low_degree = f.degree() <= 3;
    CubicityReport rep;
    IterationGuard guard{budget * 64};

    for (std::uint64_t t_idx : fset.indices()) {
        Vec t = point_unrank(fld, n, t_idx);
        Mat vt =
            fam.size() ? cut_by_pairing_forms(fld, fam, w.basis(), t) : w.basis();
        guard.tick(1 + (vt.empty() ? 1 : checked_pow(fld.p(), vt.size(), UINT64_MAX)));
        enumerate_span(fld, vt, n, [&](const Vec& h1) {
            Mat u1 = fam.size() ? cut_by_pairing_forms(fld, fam, vt, h1) : vt;
            if (low_degree) {
                // violations are impossible; count admissible tuples by dimension
                std::uint64_t inner = 0;
                enumerate_span(fld, u1, n, [&](const Vec& h2) {
                    inner += checked_pow(fld.p(),
                                         fam.size() ? dim_after_cut(fld, fam, u1, h2)
                                                    : static_cast<std::uint32_t>(u1.size()),
                                         UINT64_MAX);
                });
                guard.tick(u1.empty() ? 1 : checked_pow(fld.p(), u1.size(), UINT64_MAX));
                rep.admissible_count += inner;
                return;
            }
            enumerate_span(fld, u1, n, [&](const Vec& h2) {
                Mat u2 = fam.size() ? cut_by_pairing_forms(fld, fam, u1, h2) : u1;
                guard.tick(u2.empty() ? 1 : checked_pow(fld.p(), u2.size(), UINT64_MAX));
                enumerate_span(fld, u2, n, [&](const Vec& h3) {
                    ++rep.admissible_count;
                    if (fourfold_derivative_value(f, h1, h2, h3, t) != 0)
                        ++rep.violating_count;
                });
            });
        });
    }

    if (rep.admissible_count == 0) {
        rep.no_admissible_tuples = true;
        rep.defect = Rational(0, 1);
    } else {
        rep.defect = Rational(static_cast<std::int64_t>(rep.violating_count),
                              static_cast<std::int64_t>(rep.admissible_count));
    }
    return rep;
}

}  // namespace fpq
