#include "fpq/extract.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fpq/generators.hpp"
#include "fpq/probe.hpp"

namespace fpq {

namespace {

constexpr std::uint64_t kMaxSubspacesPerLevel = 200'000;
constexpr std::uint32_t kMaxPresentationsPerDirection = 40;

std::uint64_t gaussian_binomial(std::uint32_t p, std::uint32_t n, std::uint32_t r,
                                std::uint64_t cap) {
    // prod_{i<r} (p^(n-i) - 1) / (p^(i+1) - 1), computed term by term
    long double approx = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        long double num = std::pow(static_cast<long double>(p), static_cast<int>(n - i)) - 1;
        long double den = std::pow(static_cast<long double>(p), static_cast<int>(i + 1)) - 1;
        approx *= num / den;
        if (approx > static_cast<long double>(cap) * 4) return cap + 1;
    }
    return static_cast<std::uint64_t>(approx);
}

// C lies in the ideal of the forms spanned by lambda iff C vanishes on their
// common kernel.
bool in_linear_ideal(const Polynomial& cubic, const Subspace& lambda) {
    PrimeField f = cubic.field();
    std::vector<LinearForm> forms;
    for (const auto& row : lambda.basis()) forms.push_back(LinearForm{row, 0});
    Subspace kernel = annihilator_subspace(f, forms, cubic.nvars());
    return restrict_to(cubic, kernel).is_zero();
}

// Exact canonical division: C = sum_i lambda_i * q_i with lambda_i the RREF
// basis of the form space. Requires C in the ideal.
std::vector<Polynomial> divide_by_forms(const Polynomial& cubic, const Subspace& lambda) {
    PrimeField f = cubic.field();
    const std::uint32_t n = cubic.nvars();
    const std::uint32_t r = lambda.dim();

    // change of coordinates u = S x with the forms as the first r rows
    Mat s_rows = lambda.basis();
    std::vector<bool> is_pivot(n, false);
    for (auto c : lambda.pivots()) is_pivot[c] = true;
    for (std::uint32_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec unit(n, 0);
        unit[c] = 1;
        s_rows.push_back(std::move(unit));
    }
    // invert S
    Mat aug(n, Vec(2 * n, 0));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) aug[i][j] = s_rows[i][j];
        aug[i][n + i] = 1;
    }
    rref(f, aug);
    Mat t_rows(n, Vec(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t_rows[i][j] = aug[i][n + j];

    std::vector<LinearForm> subs_t(n), subs_s(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        subs_t[i] = LinearForm{t_rows[i], 0};
        subs_s[i] = LinearForm{s_rows[i], 0};
    }
    Polynomial in_u = compose_linear(cubic, subs_t, n);

    std::vector<Polynomial> multipliers(r, Polynomial::zero(f, n));
    for (const auto& [m, c] : in_u.terms()) {
        std::uint32_t div = r;
        for (std::uint32_t i = 0; i < r; ++i)
            if (m.exps[i] > 0) {
                div = i;
                break;
            }
        if (div == r) throw std::logic_error("division: cubic not in the form ideal");
        Monomial q = m;
        q.exps[div] -= 1;
        multipliers[div].add_term(std::move(q), c);
    }

    // map back to x coordinates and verify the presentation exactly
    std::vector<Polynomial> out;
    Polynomial check = Polynomial::zero(f, n);
    for (std::uint32_t i = 0; i < r; ++i) {
        Polynomial qi = compose_linear(multipliers[i], subs_s, n);
        check = check + multiply(Polynomial::from_form(f, LinearForm{lambda.basis()[i], 0}),
                                 qi, 3);
        if (!qi.is_zero()) out.push_back(std::move(qi));
    }
    if (!(check == cubic)) throw std::logic_error("division: presentation check failed");
    return out;
}

Vec packed_quad_vector(const Polynomial& q) {
    return QuadraticPoly::from_poly(q).packed_quad();
}

// Every quadratic multiplier consistent with some presentation C = sum l_i q_i
// over the given form space: the canonical division solution plus all kernel
// components of the multiplication map.
void append_solution_hull(const Polynomial& cubic, const Subspace& lambda,
                          std::vector<Polynomial>& out) {
    PrimeField f = cubic.field();
    const std::uint32_t n = cubic.nvars();
    const std::uint32_t r = lambda.dim();
    for (auto& q : divide_by_forms(cubic, lambda)) out.push_back(std::move(q));

    std::vector<Monomial> quad_monos, cubic_monos;
    for (const auto& m : monomials_up_to(n, 3)) {
        if (m.degree() == 2) quad_monos.push_back(m);
        else if (m.degree() == 3) cubic_monos.push_back(m);
    }
    std::map<std::vector<std::uint8_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < cubic_monos.size(); ++i)
        index[cubic_monos[i].exps] = i;

    const std::uint32_t n_unk = r * static_cast<std::uint32_t>(quad_monos.size());
    Mat rows(cubic_monos.size(), Vec(n_unk, 0));
    for (std::uint32_t fi = 0; fi < r; ++fi) {
        const Vec& form = lambda.basis()[fi];
        for (std::uint32_t qm = 0; qm < quad_monos.size(); ++qm) {
            std::uint32_t col = fi * quad_monos.size() + qm;
            for (std::uint32_t var = 0; var < n; ++var) {
                if (form[var] == 0) continue;
                Monomial prod = quad_monos[qm];
                prod.exps[var] += 1;
                Vec& row = rows[index.at(prod.exps)];
                row[col] = f.add(row[col], form[var]);
            }
        }
    }
    for (const auto& kv : null_space(f, rows, n_unk)) {
        for (std::uint32_t fi = 0; fi < r; ++fi) {
            Polynomial chunk(f, n);
            for (std::uint32_t qm = 0; qm < quad_monos.size(); ++qm) {
                Scalar c = kv[fi * quad_monos.size() + qm];
                if (c) chunk.add_term(quad_monos[qm], c);
            }
            if (!chunk.is_zero()) out.push_back(std::move(chunk));
        }
    }
}

Polynomial quad_from_packed(const PrimeField& f, std::uint32_t n, const Vec& packed) {
    QuadraticPoly q(f, n);
    std::uint32_t idx = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) q.set_quad_coeff(i, j, packed[idx++]);
    return q.to_poly();
}

std::vector<Polynomial> span_basis(const PrimeField& f, std::uint32_t n,
                                   const std::vector<Polynomial>& quads) {
    Mat rows;
    for (const auto& q : quads) rows.push_back(packed_quad_vector(q));
    rref(f, rows);
    std::vector<Polynomial> out;
    for (const auto& row : rows)
        if (!vec_is_zero(row)) out.push_back(quad_from_packed(f, n, row));
    return out;
}

}  // namespace

Polynomial derivative_cubic_slice(const Polynomial& f, const Vec& y) {
    return homogeneous_part(discrete_derivative(f, y), 3);
}

bool cubic_in_quadratic_ideal(const Polynomial& cubic,
                              const std::vector<Polynomial>& quads) {
    if (cubic.is_zero()) return true;
    if (quads.empty()) return false;
    PrimeField f = cubic.field();
    const std::uint32_t n = cubic.nvars();
    auto monos = monomials_up_to(n, 3);
    std::map<std::vector<std::uint8_t>, std::uint32_t> index;
    std::uint32_t n_eq = 0;
    for (const auto& m : monos)
        if (m.degree() == 3) index[m.exps] = n_eq++;

    const std::uint32_t n_unk = static_cast<std::uint32_t>(quads.size()) * n;
    Mat rows(n_eq, Vec(n_unk, 0));
    for (std::uint32_t qi = 0; qi < quads.size(); ++qi) {
        for (std::uint32_t var = 0; var < n; ++var) {
            const std::uint32_t col = qi * n + var;
            for (const auto& [m, c] : quads[qi].terms()) {
                Monomial prod = m;
                prod.exps[var] += 1;
                rows[index.at(prod.exps)][col] = f.add(rows[index.at(prod.exps)][col], c);
            }
        }
    }
    Vec target(n_eq, 0);
    for (const auto& [m, c] : cubic.terms()) target[index.at(m.exps)] = c;
    return solve(f, rows, target, n_unk).has_value();
}

ExtractResult extract_quadratic_pool(const Polynomial& f, std::uint32_t cap,
                                     std::uint64_t seed, std::uint64_t budget) {
    ensure_degree_semantics(f);
    if (f.degree() > 4) throw UsageError("extract: degree must be at most 4");
    PrimeField fld = f.field();
    const std::uint32_t n = f.nvars();

    // directions: standard basis plus 2n seeded samples
    std::vector<Vec> dirs;
    for (std::uint32_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        dirs.push_back(std::move(e));
    }
    SplitMix64 rng(seed);
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        Vec y = random_nonzero_point(fld, n, rng);
        if (std::find(dirs.begin(), dirs.end(), y) == dirs.end()) dirs.push_back(std::move(y));
    }

    ExtractResult res;
    std::vector<Polynomial> collected;
    std::vector<Polynomial> covered_cubics;
    // per found direction: the spans of the multiplier hulls, one per
    // solvable form space
    std::vector<std::vector<Subspace>> direction_hulls;
    const std::uint32_t packed_dim = n * (n + 1) / 2;

    for (const auto& y : dirs) {
        DirectionReport rep;
        rep.direction = y;
        Polynomial cubic = derivative_cubic_slice(f, y);
        if (cubic.is_zero()) {
            rep.found = true;
            rep.width = 0;
            res.directions.push_back(std::move(rep));
            continue;
        }
        // Scan all widths up to the cap. The first solvable width is the
        // minimal presentation size; every solvable form space contributes
        // the span of its whole multiplier solution set.
        std::vector<Subspace> hulls;
        for (std::uint32_t r = 1; r <= std::min(cap, n); ++r) {
            if (gaussian_binomial(fld.p(), n, r, kMaxSubspacesPerLevel) >
                kMaxSubspacesPerLevel)
                continue;  // level too large to enumerate; stay best-effort
            std::uint32_t taken_at_level = 0;
            for (const auto& lambda : all_subspaces_of_dim(fld, n, r,
                                                           kMaxSubspacesPerLevel + 1)) {
                if (taken_at_level >= kMaxPresentationsPerLevel) break;
                if (!in_linear_ideal(cubic, lambda)) continue;
                ++taken_at_level;
                if (!rep.found) {
                    rep.found = true;
                    rep.width = r;
                }
                std::vector<Polynomial> hull;
                append_solution_hull(cubic, lambda, hull);
                Mat rows;
                for (const auto& q : hull) rows.push_back(packed_quad_vector(q));
                Subspace span = Subspace::from_vectors(fld, packed_dim, rows);
                if (std::find(hulls.begin(), hulls.end(), span) == hulls.end())
                    hulls.push_back(std::move(span));
                for (auto& q : hull) collected.push_back(std::move(q));
            }
        }
        if (rep.found) {
            covered_cubics.push_back(std::move(cubic));
            direction_hulls.push_back(std::move(hulls));
        }
        res.directions.push_back(std::move(rep));
    }

    res.complete = std::all_of(res.directions.begin(), res.directions.end(),
                               [](const DirectionReport& d) { return d.found; });

    auto as_quads = [&](const Subspace& span) {
        std::vector<Polynomial> out;
        for (const auto& row : span.basis()) out.push_back(quad_from_packed(fld, n, row));
        return out;
    };
    auto covers_one = [&](const Subspace& span, const Polynomial& cubic) {
        return cubic_in_quadratic_ideal(cubic, as_quads(span));
    };
    auto covers_all = [&](const Subspace& span) {
        for (const auto& c : covered_cubics)
            if (!covers_one(span, c)) return false;
        return true;
    };

    // Beam over hull choices: a valid pool must pick, for every direction,
    // some presentation whose multipliers it contains, so its span lies in an
    // intersection of one hull per direction. Chains that stop covering their
    // own direction are dropped; survivors are verified against everything.
    std::vector<Polynomial> pool = span_basis(fld, n, collected);
    std::vector<Subspace> beam;
    constexpr size_t kBeamWidth = 32;
    for (size_t di = 0; di < direction_hulls.size(); ++di) {
        std::vector<Subspace> next;
        auto consider = [&](Subspace cand) {
            if (cand.dim() == 0) return;
            if (std::find(next.begin(), next.end(), cand) != next.end()) return;
            // a chain must keep covering everything seen so far (junk chains
            // die quickly on their first failing direction)
            for (size_t j = 0; j <= di; ++j)
                if (!covers_one(cand, covered_cubics[j])) return;
            next.push_back(std::move(cand));
        };
        if (di == 0) {
            for (const auto& h : direction_hulls[0]) consider(h);
        } else {
            for (const auto& s : beam) {
                // a chain may skip this direction's hulls (it still has to
                // cover its cubic); hull lists can be truncated
                consider(s);
                for (const auto& h : direction_hulls[di])
                    consider(intersect_subspaces(s, h));
            }
        }
        std::stable_sort(next.begin(), next.end(),
                         [](const Subspace& a, const Subspace& b) {
                             if (a.dim() != b.dim()) return a.dim() < b.dim();
                             return a.basis() < b.basis();
                         });
        if (next.size() > kBeamWidth)
            next.erase(next.begin() + kBeamWidth, next.end());
        if (next.empty()) {
            beam.clear();
            break;  // fall back to the full collected span
        }
        beam = std::move(next);
    }
    for (const auto& cand : beam) {
        if (cand.dim() >= pool.size()) continue;
        if (!covers_all(cand)) continue;
        pool = as_quads(cand);
        break;  // beam is sorted by dimension; first full cover is minimal
    }

    res.pool = std::move(pool);
    (void)budget;
    return res;
}

}  // namespace fpq
