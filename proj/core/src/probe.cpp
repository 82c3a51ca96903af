#include "fpq/probe.hpp"

#include <algorithm>
#include <map>

namespace fpq {

std::vector<Monomial> monomials_up_to(std::uint32_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial cur{std::vector<std::uint8_t>(n, 0)};
    // enumerate recursively, then sort graded-lex
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t var,
                                                                std::uint32_t left) {
        if (var == n) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur.exps[var] = static_cast<std::uint8_t>(e);
            rec(var + 1, left - e);
        }
        cur.exps[var] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return GradedLexLess{}(a, b);
    });
    return out;
}

namespace {

// All monic polynomials of degree exactly dg: leading (graded-lex maximal)
// monomial has coefficient 1, everything strictly below is free.
std::vector<Polynomial> monic_candidates(const PrimeField& f, std::uint32_t n,
                                         std::uint32_t dg, std::uint64_t cap) {
    auto monos = monomials_up_to(n, dg);
    std::vector<Polynomial> out;
    for (size_t lead = 0; lead < monos.size(); ++lead) {
        if (monos[lead].degree() != dg) continue;
        std::uint64_t combos = 1;
        for (size_t b = 0; b < lead; ++b) {
            combos *= f.p();
            if (combos > cap) throw BudgetError("monic candidate enumeration too large");
        }
        for (std::uint64_t code = 0; code < combos; ++code) {
            Polynomial g(f, n);
            g.add_term(monos[lead], 1);
            std::uint64_t c = code;
            for (size_t b = 0; b < lead; ++b) {
                Scalar coef = static_cast<Scalar>(c % f.p());
                c /= f.p();
                if (coef) g.add_term(monos[b], coef);
            }
            out.push_back(std::move(g));
            if (out.size() > cap) throw BudgetError("monic candidate enumeration too large");
        }
    }
    return out;
}

struct Candidate {
    Polynomial g;
    std::uint32_t dh;          // degree budget for the matching h
    std::vector<Vec> columns;  // coefficient columns of g * monomial(h), per h-monomial
};

}  // namespace

RankProbe bounded_schmidt_rank(const Polynomial& f, std::uint32_t cap,
                               std::uint64_t budget) {
    ensure_degree_semantics(f);
    const int deg = f.degree();
    RankProbe probe;
    if (deg < 2) {
        probe.status = RankProbe::Status::kExact;
        probe.rank = 0;
        return probe;
    }
    if (deg > 4) throw UsageError("bounded_schmidt_rank: degree must be at most 4");
    const std::uint32_t d = static_cast<std::uint32_t>(deg);
    const PrimeField& fld = f.field();
    const std::uint32_t n = f.nvars();

    auto eq_monos = monomials_up_to(n, d);
    std::map<std::vector<std::uint8_t>, std::uint32_t> eq_index;
    for (std::uint32_t i = 0; i < eq_monos.size(); ++i) eq_index[eq_monos[i].exps] = i;
    const std::uint32_t n_eq = static_cast<std::uint32_t>(eq_monos.size());

    Vec target(n_eq, 0);
    for (const auto& [m, c] : f.terms()) target[eq_index.at(m.exps)] = c;

    // candidate (g, deg h) pairs over the spec'd splits
    std::vector<std::pair<std::uint32_t, std::uint32_t>> splits;
    splits.emplace_back(1, d - 1);
    if (d == 4) splits.emplace_back(2, 2);

    std::vector<Candidate> cands;
    for (auto [dg, dh] : splits) {
        for (auto& g : monic_candidates(fld, n, dg, budget)) {
            Candidate c{g, dh, {}};
            for (const auto& hm : monomials_up_to(n, dh)) {
                Vec col(n_eq, 0);
                for (const auto& [gm, gc] : g.terms()) {
                    Monomial prod{std::vector<std::uint8_t>(n)};
                    for (std::uint32_t i = 0; i < n; ++i)
                        prod.exps[i] = static_cast<std::uint8_t>(gm.exps[i] + hm.exps[i]);
                    col[eq_index.at(prod.exps)] = fld.add(col[eq_index.at(prod.exps)], gc);
                }
                c.columns.push_back(std::move(col));
            }
            cands.push_back(std::move(c));
        }
    }

    auto g0_monos = monomials_up_to(n, d - 1);
    const std::uint32_t n_g0 = static_cast<std::uint32_t>(g0_monos.size());

    std::uint64_t solves_left = budget;

    // try r = 0, 1, ..., cap over non-decreasing candidate index tuples
    std::vector<std::uint32_t> pick;
    std::function<bool(std::uint32_t, std::uint32_t)> search = [&](std::uint32_t r,
                                                                   std::uint32_t from) -> bool {
        if (pick.size() == r) {
            if (solves_left == 0) throw BudgetError("rank probe solve budget exhausted");
            --solves_left;
            // assemble equations x unknowns
            std::uint32_t n_unk = n_g0;
            for (auto idx : pick) n_unk += static_cast<std::uint32_t>(cands[idx].columns.size());
            Mat rows(n_eq, Vec(n_unk, 0));
            std::uint32_t colbase = 0;
            for (auto idx : pick) {
                const auto& cols = cands[idx].columns;
                for (std::uint32_t c = 0; c < cols.size(); ++c)
                    for (std::uint32_t e = 0; e < n_eq; ++e) rows[e][colbase + c] = cols[c][e];
                colbase += static_cast<std::uint32_t>(cols.size());
            }
            for (std::uint32_t c = 0; c < n_g0; ++c)
                rows[eq_index.at(g0_monos[c].exps)][colbase + c] = 1;
            auto sol = solve(fld, rows, target, n_unk);
            if (!sol) return false;
            // reconstruct h_i and verify by re-expansion
            probe.products.clear();
            Polynomial expanded(fld, n);
            std::uint32_t base = 0;
            for (auto idx : pick) {
                auto h_monos = monomials_up_to(n, cands[idx].dh);
                Polynomial h(fld, n);
                for (std::uint32_t c = 0; c < h_monos.size(); ++c)
                    if ((*sol)[base + c]) h.add_term(h_monos[c], (*sol)[base + c]);
                base += static_cast<std::uint32_t>(h_monos.size());
                expanded = expanded + multiply(cands[idx].g, h, d);
                probe.products.emplace_back(cands[idx].g, std::move(h));
            }
            Polynomial residual = f - expanded;
            if (residual.degree() >= static_cast<int>(d))
                throw std::logic_error("rank probe: residual affinity check failed");
            return true;
        }
        for (std::uint32_t i = from; i < cands.size(); ++i) {
            pick.push_back(i);
            if (search(r, i)) return true;
            pick.pop_back();
        }
        return false;
    };

    for (std::uint32_t r = 0; r <= cap; ++r) {
        pick.clear();
        if (search(r, 0)) {
            probe.status = RankProbe::Status::kExact;
            probe.rank = r;
            return probe;
        }
    }
    probe.status = RankProbe::Status::kGreaterThanCap;
    probe.rank = cap;
    probe.products.clear();
    return probe;
}

}  // namespace fpq
