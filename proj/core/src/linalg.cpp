#include "fpq/linalg.hpp"

#include <algorithm>

namespace fpq {

Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const PrimeField& f, Scalar c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Scalar v) { return v == 0; });
}

std::uint64_t point_rank(const PrimeField& f, const Vec& x) {
    std::uint64_t r = 0;
    for (Scalar v : x) r = r * f.p() + v;
    return r;
}

Vec point_unrank(const PrimeField& f, std::uint32_t n, std::uint64_t idx) {
    Vec x(n, 0);
    for (std::uint32_t i = n; i-- > 0;) {
        x[i] = static_cast<Scalar>(idx % f.p());
        idx /= f.p();
    }
    return x;
}

std::uint64_t rank_add(const PrimeField& f, std::uint32_t n, std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        r += static_cast<std::uint64_t>(f.add(a % f.p(), b % f.p())) * mult;
        mult *= f.p();
        a /= f.p();
        b /= f.p();
    }
    return r;
}

std::uint64_t rank_sub(const PrimeField& f, std::uint32_t n, std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        r += static_cast<std::uint64_t>(f.sub(a % f.p(), b % f.p())) * mult;
        mult *= f.p();
        a /= f.p();
        b /= f.p();
    }
    return r;
}

std::uint64_t rank_neg(const PrimeField& f, std::uint32_t n, std::uint64_t a) {
    return rank_sub(f, n, 0, a);
}

std::vector<std::uint32_t> rref(const PrimeField& f, Mat& m) {
    std::vector<std::uint32_t> pivots;
    if (m.empty()) return pivots;
    const std::uint32_t ncols = static_cast<std::uint32_t>(m[0].size());
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < ncols && row < m.size(); ++col) {
        std::uint32_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = f.inv(m[row][col]);
        for (auto& v : m[row]) v = f.mul(v, inv);
        for (std::uint32_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            Scalar c = m[r2][col];
            for (std::uint32_t j = 0; j < ncols; ++j)
                m[r2][j] = f.sub(m[r2][j], f.mul(c, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

Mat null_space(const PrimeField& f, const Mat& rows, std::uint32_t n) {
    Mat m = rows;
    for (const auto& r : m)
        if (r.size() != n) throw UsageError("null_space: row dimension mismatch");
    auto pivots = rref(f, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat basis;
    for (std::uint32_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (std::uint32_t r = 0; r < m.size(); ++r)
            v[pivots[r]] = f.neg(m[r][free_col]);
        basis.push_back(std::move(v));
    }
    rref(f, basis);  // canonicalize
    return basis;
}

std::uint32_t rank(const PrimeField& f, Mat m) {
    return static_cast<std::uint32_t>(rref(f, m).size());
}

std::optional<Vec> solve(const PrimeField& f, const Mat& rows, const Vec& rhs,
                         std::uint32_t n) {
    Mat aug = rows;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto pivots = rref(f, aug);
    Vec x(n, 0);
    for (std::uint32_t r = 0; r < aug.size(); ++r) {
        if (pivots[r] == n) return std::nullopt;  // 0 = nonzero
        x[pivots[r]] = aug[r][n];
    }
    return x;
}

Scalar LinearForm::eval(const PrimeField& f, const Vec& x) const {
    if (x.size() != coeffs.size()) throw UsageError("LinearForm: dimension mismatch");
    std::uint64_t acc = constant;
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc += static_cast<std::uint64_t>(coeffs[i]) * x[i];
    return static_cast<Scalar>(acc % f.p());
}

Subspace Subspace::from_vectors(const PrimeField& f, std::uint32_t n, Mat rows) {
    for (const auto& r : rows)
        if (r.size() != n) throw UsageError("Subspace: basis row dimension mismatch");
    Subspace s(f, n);
    s.pivots_ = rref(f, rows);
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::full(const PrimeField& f, std::uint32_t n) {
    Mat rows(n, Vec(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) rows[i][i] = 1;
    return from_vectors(f, n, std::move(rows));
}

Subspace Subspace::zero(const PrimeField& f, std::uint32_t n) {
    return from_vectors(f, n, {});
}

bool Subspace::contains(const Vec& x) const {
    if (x.size() != n_) throw UsageError("Subspace::contains: dimension mismatch");
    PrimeField f(p_);
    Vec v = x;
    for (std::uint32_t r = 0; r < basis_.size(); ++r) {
        Scalar c = v[pivots_[r]];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < n_; ++j) v[j] = f.sub(v[j], f.mul(c, basis_[r][j]));
    }
    return vec_is_zero(v);
}

Vec Subspace::coordinates(const Vec& x) const {
    Vec c(dim());
    for (std::uint32_t r = 0; r < basis_.size(); ++r) c[r] = x[pivots_[r]];
    return c;
}

Vec Subspace::point_from_coordinates(const Vec& c) const {
    PrimeField f(p_);
    Vec x(n_, 0);
    for (std::uint32_t r = 0; r < basis_.size(); ++r)
        if (c[r] != 0)
            for (std::uint32_t j = 0; j < n_; ++j)
                x[j] = f.add(x[j], f.mul(c[r], basis_[r][j]));
    return x;
}

Mat Subspace::constraint_forms() const {
    return null_space(PrimeField(p_), basis_, n_);
}

AffineSubspace::AffineSubspace(Vec off, Subspace dir)
    : offset(std::move(off)), direction(std::move(dir)) {
    if (offset.size() != direction.ambient_dim())
        throw UsageError("AffineSubspace: offset dimension mismatch");
    // Zero the pivot coordinates of the offset; this is the lexicographically
    // least coset member.
    PrimeField f = direction.field();
    const auto& basis = direction.basis();
    const auto& piv = direction.pivots();
    for (std::uint32_t r = 0; r < basis.size(); ++r) {
        Scalar c = offset[piv[r]];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < offset.size(); ++j)
            offset[j] = f.sub(offset[j], f.mul(c, basis[r][j]));
    }
}

bool AffineSubspace::contains(const Vec& x) const {
    return direction.contains(vec_sub(direction.field(), x, offset));
}

std::optional<std::pair<Vec, Subspace>> solve_linear_system(
    const PrimeField& f, const std::vector<LinearForm>& rows, const Vec& targets,
    std::uint32_t n) {
    if (rows.size() != targets.size())
        throw UsageError("solve_linear_system: rows/targets size mismatch");
    Mat m;
    Vec rhs;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n() != n) throw UsageError("solve_linear_system: dimension mismatch");
        m.push_back(rows[i].coeffs);
        rhs.push_back(f.sub(targets[i], rows[i].constant));
    }
    auto x = solve(f, m, rhs, n);
    if (!x) return std::nullopt;
    return std::make_pair(*x, Subspace::from_vectors(f, n, null_space(f, m, n)));
}

Subspace annihilator_subspace(const PrimeField& f, const std::vector<LinearForm>& forms,
                              std::uint32_t n) {
    Mat m;
    for (const auto& form : forms) {
        if (!form.homogeneous())
            throw UsageError("annihilator_subspace: form is not homogeneous");
        if (form.n() != n) throw UsageError("annihilator_subspace: dimension mismatch");
        m.push_back(form.coeffs);
    }
    return Subspace::from_vectors(f, n, null_space(f, m, n));
}

Subspace intersect_subspaces(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field().p() != b.field().p())
        throw UsageError("intersect_subspaces: ambient mismatch");
    PrimeField f = a.field();
    Mat constraints = a.constraint_forms();
    for (auto& row : b.constraint_forms()) constraints.push_back(std::move(row));
    return Subspace::from_vectors(f, a.ambient_dim(),
                                  null_space(f, constraints, a.ambient_dim()));
}

namespace {

void enumerate_impl(const PrimeField& f, const Vec* offset, const Mat& basis,
                    std::uint32_t n, const std::function<void(const Vec&)>& fn,
                    std::uint64_t budget) {
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    checked_pow(f.p(), k, budget);
    Vec digits(k, 0);
    Vec x = offset ? *offset : Vec(n, 0);
    while (true) {
        fn(x);
        // base-p odometer, last digit fastest
        std::uint32_t i = k;
        while (i-- > 0) {
            if (digits[i] + 1 < f.p()) {
                ++digits[i];
                for (std::uint32_t j = 0; j < n; ++j) x[j] = f.add(x[j], basis[i][j]);
                break;
            }
            // roll over: subtract (p-1) * basis[i]
            digits[i] = 0;
            for (std::uint32_t j = 0; j < n; ++j) x[j] = f.add(x[j], basis[i][j]);
            // adding once more completes p additions == 0 mod p
        }
        if (i == static_cast<std::uint32_t>(-1)) break;
    }
}

}  // namespace

void for_each_point(const Subspace& s, const std::function<void(const Vec&)>& fn,
                    std::uint64_t budget) {
    enumerate_impl(s.field(), nullptr, s.basis(), s.ambient_dim(), fn, budget);
}

void for_each_point(const AffineSubspace& s, const std::function<void(const Vec&)>& fn,
                    std::uint64_t budget) {
    enumerate_impl(s.direction.field(), &s.offset, s.direction.basis(),
                   s.direction.ambient_dim(), fn, budget);
}

void for_each_point(const PrimeField& f, std::uint32_t n,
                    const std::function<void(const Vec&)>& fn, std::uint64_t budget) {
    checked_pow(f.p(), n, budget);
    Vec x(n, 0);
    while (true) {
        fn(x);
        std::uint32_t i = n;
        while (i-- > 0) {
            if (++x[i] < f.p()) break;
            x[i] = 0;
        }
        if (i == static_cast<std::uint32_t>(-1)) break;
    }
}

std::vector<Vec> enumerate_points(const Subspace& s, std::uint64_t budget) {
    std::vector<Vec> out;
    for_each_point(s, [&](const Vec& x) { out.push_back(x); }, budget);
    return out;
}

std::vector<Vec> enumerate_points(const AffineSubspace& s, std::uint64_t budget) {
    std::vector<Vec> out;
    for_each_point(s, [&](const Vec& x) { out.push_back(x); }, budget);
    return out;
}

namespace {

void fill_free_entries(const PrimeField& f, Mat& m,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& free_pos,
                       size_t idx, std::vector<Subspace>& out, std::uint64_t cap,
                       std::uint32_t n) {
    if (idx == free_pos.size()) {
        if (out.size() >= cap) throw BudgetError("too many subspaces to enumerate");
        out.push_back(Subspace::from_vectors(f, n, m));
        return;
    }
    auto [r, c] = free_pos[idx];
    for (Scalar v = 0; v < f.p(); ++v) {
        m[r][c] = v;
        fill_free_entries(f, m, free_pos, idx + 1, out, cap, n);
    }
    m[r][c] = 0;
}

void choose_pivots(const PrimeField& f, std::uint32_t n, std::uint32_t r,
                   std::uint32_t start, std::vector<std::uint32_t>& piv,
                   std::vector<Subspace>& out, std::uint64_t cap) {
    if (piv.size() == r) {
        Mat m(r, Vec(n, 0));
        std::vector<bool> is_piv(n, false);
        for (std::uint32_t i = 0; i < r; ++i) {
            m[i][piv[i]] = 1;
            is_piv[piv[i]] = true;
        }
        // free entries: to the right of each pivot, in non-pivot columns
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t c = piv[i] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(i, c);
        fill_free_entries(f, m, free_pos, 0, out, cap, n);
        return;
    }
    for (std::uint32_t c = start; c < n; ++c) {
        piv.push_back(c);
        choose_pivots(f, n, r, c + 1, piv, out, cap);
        piv.pop_back();
    }
}

}  // namespace

std::vector<Subspace> all_subspaces_of_dim(const PrimeField& f, std::uint32_t n,
                                           std::uint32_t r, std::uint64_t cap) {
    if (r > n) throw UsageError("all_subspaces_of_dim: r > n");
    std::vector<Subspace> out;
    std::vector<std::uint32_t> piv;
    choose_pivots(f, n, r, 0, piv, out, cap);
    return out;
}

void for_each_projective_vector(const PrimeField& f, std::uint32_t n,
                                const std::function<void(const Vec&)>& fn) {
    Vec a(n, 0);
    for (std::uint32_t lead = 0; lead < n; ++lead) {
        std::fill(a.begin(), a.end(), 0);
        a[lead] = 1;
        std::uint32_t free_vars = n - lead - 1;
        Vec digits(free_vars, 0);
        while (true) {
            for (std::uint32_t i = 0; i < free_vars; ++i) a[lead + 1 + i] = digits[i];
            fn(a);
            std::uint32_t i = free_vars;
            while (i-- > 0) {
                if (++digits[i] < f.p()) break;
                digits[i] = 0;
            }
            if (i == static_cast<std::uint32_t>(-1)) break;
        }
    }
}

}  // namespace fpq
