#include "fpq/checks.hpp"

#include <algorithm>
#include <chrono>

#include "fpq/charsum.hpp"
#include "fpq/generators.hpp"
#include "fpq/json_io.hpp"
#include "fpq/sumset.hpp"

namespace fpq {

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Timer {
    double start = now_ms();
    double elapsed() const { return now_ms() - start; }
};

std::uint32_t gram_rank_of(const Polynomial& q) {
    return rank(q.field(), QuadraticPoly::from_poly(q).gram_matrix());
}

// Iterates the quadratic corpus of criteria 1 and 2: every coefficient vector
// over F_5 in two variables, then seeded samples at n = 3 for p in {3, 7}.
// Returns false from the visitor to abort.
bool scan_quadratic_corpus(std::uint64_t seed,
                           const std::function<bool(const Polynomial&)>& visit) {
    PrimeField f5(5);
    auto monos = monomials_up_to(2, 2);
    const std::uint64_t total = 15625;  // 5^6
    for (std::uint64_t code = 0; code < total; ++code) {
        Polynomial q(f5, 2);
        std::uint64_t c = code;
        for (const auto& m : monos) {
            Scalar coef = static_cast<Scalar>(c % 5);
            c /= 5;
            if (coef) q.add_term(m, coef);
        }
        if (!visit(q)) return false;
    }
    for (std::uint32_t p : {3u, 7u}) {
        PrimeField f(p);
        SplitMix64 rng(seed ^ (0x9e37u + p));
        for (int i = 0; i < 5000; ++i)
            if (!visit(random_polynomial(f, 3, 2, rng))) return false;
    }
    return true;
}

}  // namespace

ordered_json CheckReport::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["parameters"] = parameters;
    j["status"] = status;
    j["details"] = details;
    if (!witness.is_null()) j["witness"] = witness;
    j["timing_ms"] = timing_ms;
    return j;
}

VerifyConfig VerifyConfig::all() {
    VerifyConfig cfg;
    cfg.checks = all_check_names();
    return cfg;
}

VerifyConfig VerifyConfig::from_json(const ordered_json& j) {
    VerifyConfig cfg;
    if (j.contains("checks"))
        cfg.checks = j.at("checks").get<std::vector<std::string>>();
    else
        cfg.checks = all_check_names();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mutation")) cfg.mutation = j.at("mutation").get<std::string>();
    if (j.contains("budget")) cfg.budget = j.at("budget").get<std::uint64_t>();
    return cfg;
}

ordered_json VerifyConfig::to_json() const {
    ordered_json j;
    j["checks"] = checks;
    j["seed"] = seed;
    j["mutation"] = mutation;
    j["budget"] = budget;
    return j;
}

ImplicationResult implication_check(const Polynomial& f, const QuadFamily& fam,
                                    const Subspace& v, std::uint64_t budget) {
    if (f.nvars() != fam.nvars() || v.ambient_dim() != f.nvars())
        throw UsageError("implication_check: dimension mismatch");
    if (f.degree() > 4) throw UsageError("implication_check: degree exceeds 4");
    ensure_degree_semantics(f);
    const PrimeField& fld = f.field();
    Polynomial f4 = homogeneous_part(f, 4);
    const Scalar factor = fld.reduce(24);
    ImplicationResult res;
    res.pass = true;
    for_each_point(v, [&](const Vec& x) {
        ++res.scanned;
        if (!res.pass) return;
        for (const auto& q : fam.quads)
            if (q.evaluate(x) != 0) return;
        ++res.zero_points;
        if (fld.mul(factor, f4.evaluate(x)) != 0) {
            res.pass = false;
            res.witness = x;
        }
    }, budget);
    return res;
}

RestrictionRankCheck restriction_rank_check(const Polynomial& f, const Subspace& v,
                                            std::uint32_t cap, std::uint64_t budget) {
    RestrictionRankCheck out;
    out.codim = v.codim();
    RankProbe restricted = bounded_schmidt_rank(restrict_to(f, v), cap, budget);
    if (restricted.status != RankProbe::Status::kExact) return out;  // skipped
    out.rank_restricted = restricted.rank;
    const std::uint32_t bound = restricted.rank + v.codim();
    RankProbe full = bounded_schmidt_rank(f, cap, budget);
    if (full.status == RankProbe::Status::kExact) {
        out.rank_full = full.rank;
        out.status = full.rank <= bound ? RestrictionRankCheck::Status::kPass
                                        : RestrictionRankCheck::Status::kFail;
        return out;
    }
    if (full.status == RankProbe::Status::kGreaterThanCap && bound <= cap) {
        out.rank_full = cap + 1;
        out.status = RestrictionRankCheck::Status::kFail;
        return out;
    }
    return out;  // unresolved under cap
}

PipelineResult run_pipeline(const Polynomial& f, std::uint32_t r_target, std::uint32_t cap,
                            std::uint64_t seed, std::uint64_t budget) {
    if (f.degree() > 4) throw UsageError("pipeline: degree exceeds 4");
    ensure_degree_semantics(f);
    const PrimeField& fld = f.field();
    const std::uint32_t n = f.nvars();

    ExtractResult ext = extract_quadratic_pool(f, cap, seed, budget);
    std::vector<QuadraticPoly> quads;
    for (const auto& q : ext.pool) quads.push_back(QuadraticPoly::from_poly(q));

    RegularizeResult reg =
        regularize(QuadFamily::on_full_space(fld, n, std::move(quads)),
                   std::max(1u, r_target), budget);

    PipelineResult res{.extraction_complete = ext.complete,
                       .pass = false,
                       .status = "not-found",
                       .witness = std::nullopt,
                       .pool = ext.pool,
                       .family = reg.family,
                       .subspace = reg.subspace,
                       .family_size = reg.family.size(),
                       .codim_out = reg.subspace.codim(),
                       .implication = {}};
    res.implication = implication_check(f, reg.family, reg.subspace, budget);
    if (!ext.complete) {
        res.status = "not-found";
        res.pass = false;
        return res;
    }
    res.pass = res.implication.pass;
    res.status = res.pass ? "pass" : "fail";
    res.witness = res.implication.witness;
    return res;
}

// ---- criteria ---------------------------------------------------------------

CheckReport check_gauss_sum_law(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "gauss-sum-law";
    rep.parameters = {{"exhaustive", "p=5 n=2 all 5^6"},
                      {"seeded", "p in {3,7}, n=3, 5000 each"},
                      {"seed", cfg.seed}};
    std::uint64_t scanned = 0, zero_bias = 0;
    const bool mutate = cfg.mutation == "gauss-power-shift";
    bool ok = scan_quadratic_corpus(cfg.seed, [&](const Polynomial& q) {
        ++scanned;
        LevelCounts counts = level_counts(q, cfg.budget);
        std::uint32_t m = gram_rank_of(q);
        if (mutate) m += 1;
        if (bias_is_zero(counts)) {
            ++zero_bias;
            return true;
        }
        if (bias_equals_power_check(counts, m)) return true;
        rep.witness = {{"p", q.p()},
                       {"poly", q.to_string()},
                       {"gram_rank", m},
                       {"bias", bias_from_counts(counts)}};
        return false;
    });
    rep.details = {{"scanned", scanned}, {"zero_bias_cases", zero_bias}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_bias_rank_bound(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "bias-rank-bound";
    rep.parameters = {{"bound", "rank <= gram rank m, with bias = p^(-m/2) exact"},
                      {"seed", cfg.seed}};
    std::uint64_t scanned = 0, biased = 0;
    bool ok = scan_quadratic_corpus(cfg.seed, [&](const Polynomial& q) {
        ++scanned;
        LevelCounts counts = level_counts(q, cfg.budget);
        if (bias_is_zero(counts)) return true;
        ++biased;
        RankCertificate cert = schmidt_rank(QuadraticPoly::from_poly(q));
        std::uint32_t m = cert.gram_rank;
        if (!bias_equals_power_check(counts, m)) {
            rep.witness = {{"p", q.p()}, {"poly", q.to_string()}, {"reason", "bias power"}};
            return false;
        }
        if (cert.schmidt_rank > m) {
            rep.witness = {{"p", q.p()},
                           {"poly", q.to_string()},
                           {"rank", cert.schmidt_rank},
                           {"gram_rank", m}};
            return false;
        }
        return true;
    });
    rep.details = {{"scanned", scanned}, {"positive_bias_cases", biased}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_rank_bruteforce_agreement(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "rank-bruteforce-agreement";
    rep.parameters = {{"corpus", "all quadratics, p in {3,5}, n=2"}, {"cap", 3}};
    std::uint64_t scanned = 0;
    bool ok = true;
    for (std::uint32_t p : {3u, 5u}) {
        PrimeField f(p);
        auto monos = monomials_up_to(2, 2);
        std::uint64_t total = 1;
        for (size_t i = 0; i < monos.size(); ++i) total *= p;
        for (std::uint64_t code = 0; code < total && ok; ++code) {
            Polynomial q(f, 2);
            std::uint64_t c = code;
            for (const auto& m : monos) {
                Scalar coef = static_cast<Scalar>(c % p);
                c /= p;
                if (coef) q.add_term(m, coef);
            }
            ++scanned;
            RankCertificate cert = schmidt_rank(QuadraticPoly::from_poly(q));
            RankProbe probe = bounded_schmidt_rank(q, 3, cfg.budget);
            if (probe.status != RankProbe::Status::kExact ||
                probe.rank != cert.schmidt_rank) {
                ok = false;
                rep.witness = {{"p", p},
                               {"poly", q.to_string()},
                               {"certificate", cert.schmidt_rank},
                               {"probe", probe.status == RankProbe::Status::kExact
                                             ? ordered_json(probe.rank)
                                             : ordered_json("unresolved")}};
            }
        }
    }
    rep.details = {{"scanned", scanned}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_restriction_rank_inequality(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "restriction-rank-inequality";
    rep.parameters = {{"corpus", "200 seeded cubics over F_5^2, random codim-1 subspaces"},
                      {"cap", 2},
                      {"seed", cfg.seed}};
    PrimeField f(5);
    SplitMix64 rng(cfg.seed ^ 0xc4b1cULL);
    std::uint64_t skipped = 0;
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        Polynomial cubic = random_polynomial(f, 2, 3, rng, /*exact_degree=*/true);
        Subspace v = random_subspace(f, 2, 1, rng);
        RestrictionRankCheck check = restriction_rank_check(cubic, v, 2, cfg.budget);
        switch (check.status) {
            case RestrictionRankCheck::Status::kSkipped:
                ++skipped;
                break;
            case RestrictionRankCheck::Status::kPass:
                break;
            case RestrictionRankCheck::Status::kFail:
                ok = false;
                rep.witness = {{"poly", cubic.to_string()},
                               {"rank_full", check.rank_full},
                               {"rank_restricted", check.rank_restricted},
                               {"codim", check.codim}};
                break;
        }
    }
    rep.details = {{"cases", 200}, {"skipped", skipped},
                   {"skip_rate", static_cast<double>(skipped) / 200.0}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_affine_counting_bound(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "affine-counting-bound";
    rep.parameters = {{"family", "x1*x2 + x3*x4 over F_5^4"},
                      {"subspaces", "all 780 codim-1 affine"}};
    PrimeField f(5);
    Polynomial q = parse_polynomial(f, 4, "x1*x2 + x3*x4");
    QuadFamily fam = QuadFamily::on_full_space(f, 4, {QuadraticPoly::from_poly(q)});
    Subspace full = Subspace::full(f, 4);
    ZeroSet zs = zero_set(fam, full, cfg.budget);
    bool ok = true;
    if (zs.size() != 145) {
        ok = false;
        rep.witness = {{"reason", "zero set size"}, {"size", zs.size()}};
    }
    std::uint64_t checked = 0;
    Rational max_dev(0, 1);
    if (ok) {
        for_each_projective_vector(f, 4, [&](const Vec& coeffs) {
            if (!ok) return;
            for (Scalar c = 0; c < 5 && ok; ++c) {
                LinearForm form{coeffs, 0};
                auto sol = solve_linear_system(f, {form}, {c}, 4);
                AffineSubspace a(sol->first, sol->second);
                AffineCountReport r = affine_counting_check(a, fam, full, cfg.budget);
                ++checked;
                if (max_dev < r.deviation) max_dev = r.deviation;
                if (!r.holds) {
                    ok = false;
                    rep.witness = {{"form", coeffs},
                                   {"constant", c},
                                   {"deviation", r.deviation.to_string()}};
                }
            }
        });
    }
    rep.details = {{"zero_set_size", zs.size()},
                   {"affine_subspaces", checked},
                   {"max_deviation", max_dev.to_string()},
                   {"bound", "1/5"}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_admissible_density_bound(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "admissible-density-bound";
    rep.parameters = {{"configs", 20}, {"p", 5}, {"seed", cfg.seed}};
    PrimeField f(5);
    bool ok = true;
    ordered_json runs = ordered_json::array();
    for (int i = 0; i < 20 && ok; ++i) {
        SplitMix64 rng(cfg.seed + 1000 + i);
        std::uint32_t n = 3 + (i % 2);
        std::uint32_t big_n = i % 3;
        std::uint32_t r = (i / 2) % 3;
        double mu = i == 19 ? 0.0 : 0.25 + 0.25 * (i % 3);
        std::vector<QuadraticPoly> quads;
        for (std::uint32_t j = 0; j < big_n; ++j) quads.push_back(random_quadratic(f, n, rng));
        QuadFamily fam = QuadFamily::on_full_space(f, n, std::move(quads));
        GroupSubset fset = random_subset(f, n, mu, rng, cfg.budget);
        Subspace w = random_subspace(f, n, r, rng);
        AdmissibleDensityReport ad = admissible_density(fset, w, fam, cfg.budget);
        runs.push_back({{"n", n}, {"N", big_n}, {"codim_w", r}, {"mu", mu},
                        {"density", ad.density.to_string()},
                        {"bound", ad.bound.to_string()},
                        {"holds", ad.holds}});
        if (!ad.holds) {
            ok = false;
            rep.witness = runs.back();
        }
    }
    rep.details = {{"runs", runs}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_bogolyubov_subspace(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "bogolyubov-subspace";
    rep.parameters = {{"corpus", "25 seeds in F_5^3 + 25 seeds in F_3^4, mu >= 0.2"},
                      {"max_b", 3},
                      {"max_codim", 3},
                      {"seed", cfg.seed}};
    std::uint32_t successes = 0, verified = 0;
    const std::uint32_t total = 50;
    bool sound = true;
    std::uint32_t idx = 0;
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 3}, {3, 4}}) {
        PrimeField f(p);
        for (std::uint32_t j = 0; j < 25; ++j, ++idx) {
            SplitMix64 rng(cfg.seed + 7000 + idx);
            double mu = 0.2 + 0.7 * (j / 25.0);
            GroupSubset e = random_subset(f, n, mu, rng, cfg.budget);
            auto res = bogolyubov_search(e, 3, 3, cfg.budget);
            if (!res) continue;
            ++successes;
            // independent containment verification at the returned b
            RepProfile prof = rep_counts(e, res->b, cfg.budget);
            std::uint64_t min_reps = UINT64_MAX;
            for_each_point(res->subspace, [&](const Vec& t) {
                min_reps = std::min(min_reps, prof.counts[point_rank(f, t)]);
            }, cfg.budget);
            if (min_reps == 0 || min_reps != res->min_reps) {
                sound = false;
                rep.witness = {{"p", p}, {"n", n}, {"seed_index", idx},
                               {"reason", "containment verification failed"}};
            } else {
                ++verified;
            }
        }
    }
    bool ok = sound && successes * 10 >= total * 9 && verified == successes;
    if (!ok && rep.witness.is_null())
        rep.witness = {{"successes", successes}, {"total", total}};
    rep.details = {{"successes", successes},
                   {"total", total},
                   {"success_rate", static_cast<double>(successes) / total},
                   {"verified", verified}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_quartic_taylor_identity(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "quartic-taylor-identity";
    rep.parameters = {{"corpus", "100 seeded degree-4 polynomials, p=5, n in {1,2,3}"},
                      {"seed", cfg.seed}};
    PrimeField f(5);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        SplitMix64 rng(cfg.seed + 400 + i);
        std::uint32_t n = 1 + (i % 3);
        Polynomial poly = random_polynomial(f, n, 4, rng, /*exact_degree=*/true);
        Polynomial f4 = homogeneous_part(poly, 4);
        const Scalar factor = f.reduce(24);
        // exhaustive Taylor identity
        for_each_point(f, n, [&](const Vec& x) {
            if (!ok) return;
            Scalar lhs = fourfold_derivative_value(poly, x, x, x, x);
            Scalar rhs = f.mul(factor, f4.evaluate(x));
            if (lhs != rhs) {
                ok = false;
                rep.witness = {{"poly", poly.to_string()}, {"x", x},
                               {"lhs", lhs}, {"rhs", rhs}};
            }
        }, cfg.budget);
        if (!ok) break;
        // symmetric tensor on basis tuples, exhaustive symmetry
        std::vector<Scalar> tensor(n * n * n * n);
        auto at = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                      std::uint32_t d) -> Scalar& {
            return tensor[((a * n + b) * n + c) * n + d];
        };
        std::vector<Vec> basis(n, Vec(n, 0));
        for (std::uint32_t v = 0; v < n; ++v) basis[v][v] = 1;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    for (std::uint32_t d = 0; d < n; ++d)
                        at(a, b, c, d) = fourfold_derivative_value(poly, basis[a], basis[b],
                                                                   basis[c], basis[d]);
        for (std::uint32_t a = 0; a < n && ok; ++a)
            for (std::uint32_t b = 0; b < n && ok; ++b)
                for (std::uint32_t c = 0; c < n && ok; ++c)
                    for (std::uint32_t d = 0; d < n && ok; ++d) {
                        if (at(a, b, c, d) != at(b, a, c, d) ||
                            at(a, b, c, d) != at(a, c, b, d) ||
                            at(a, b, c, d) != at(a, b, d, c)) {
                            ok = false;
                            rep.witness = {{"poly", poly.to_string()},
                                           {"reason", "tensor symmetry"},
                                           {"indices", {a, b, c, d}}};
                        }
                    }
        if (!ok) break;
        // multilinearity and contraction agreement on seeded tuples
        for (int t = 0; t < 20 && ok; ++t) {
            Vec a = random_point(f, n, rng), a2 = random_point(f, n, rng);
            Vec b = random_point(f, n, rng), c = random_point(f, n, rng),
                d = random_point(f, n, rng);
            Scalar left = fourfold_derivative_value(poly, vec_add(f, a, a2), b, c, d);
            Scalar split = f.add(fourfold_derivative_value(poly, a, b, c, d),
                                 fourfold_derivative_value(poly, a2, b, c, d));
            Scalar contracted = 0;
            for (std::uint32_t i1 = 0; i1 < n; ++i1)
                for (std::uint32_t i2 = 0; i2 < n; ++i2)
                    for (std::uint32_t i3 = 0; i3 < n; ++i3)
                        for (std::uint32_t i4 = 0; i4 < n; ++i4)
                            contracted = f.add(
                                contracted,
                                f.mul(f.mul(f.mul(a[i1], b[i2]), f.mul(c[i3], d[i4])),
                                      at(i1, i2, i3, i4)));
            Scalar direct = fourfold_derivative_value(poly, a, b, c, d);
            if (left != split || contracted != direct) {
                ok = false;
                rep.witness = {{"poly", poly.to_string()},
                               {"reason", "multilinearity"},
                               {"tuple_index", t}};
            }
        }
    }
    rep.details = {{"polynomials", 100}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_structured_quartic_pipeline(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "structured-quartic-pipeline";
    rep.parameters = {{"corpus", "20 seeded structured quartics, k in {1,2}, p=5, n=4"},
                      {"R", 1},
                      {"seed", cfg.seed}};
    PrimeField f(5);
    bool ok = true;
    ordered_json runs = ordered_json::array();
    for (int i = 0; i < 20 && ok; ++i) {
        SplitMix64 rng(cfg.seed + 900 + i);
        std::uint32_t k = 1 + (i % 2);
        StructuredQuartic sq = structured_quartic(f, 4, k, rng);
        PipelineResult res = run_pipeline(sq.f, 1, 2 * k, cfg.seed + 900 + i, cfg.budget);
        // independent re-verification of the returned family
        ImplicationResult recheck =
            implication_check(sq.f, res.family, res.subspace, cfg.budget);
        bool good = res.pass && recheck.pass && res.family_size <= 2 * k &&
                    res.codim_out <= 2 * k;
        runs.push_back({{"k", k},
                        {"status", res.status},
                        {"family_size", res.family_size},
                        {"codim_out", res.codim_out},
                        {"zero_points", res.implication.zero_points}});
        if (!good) {
            ok = false;
            rep.witness = {{"seed_index", i},
                           {"k", k},
                           {"status", res.status},
                           {"family_size", res.family_size},
                           {"codim_out", res.codim_out},
                           {"recheck_pass", recheck.pass}};
        }
    }
    rep.details = {{"runs", runs}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

CheckReport check_performance_floor(const VerifyConfig& cfg) {
    Timer timer;
    CheckReport rep;
    rep.name = "performance-floor";
    rep.parameters = {{"table_mode", "bias over F_5^7 (78125 points) < 1 s"},
                      {"throughput", "point evaluations per second, reported"}};
    PrimeField f(5);
    SplitMix64 rng(cfg.seed + 31);
    Polynomial poly = random_polynomial(f, 7, 4, rng, /*exact_degree=*/true);

    Timer table_timer;
    LevelCounts counts = level_counts(poly, cfg.budget);
    double b = bias_from_counts(counts);
    double table_ms = table_timer.elapsed();

    Timer eval_timer;
    std::uint64_t evals = 0;
    Scalar sink = 0;
    for_each_point(f, 7, [&](const Vec& x) {
        sink = f.add(sink, poly.evaluate(x));
        ++evals;
    }, cfg.budget);
    double eval_ms = eval_timer.elapsed();
    double throughput = evals / (eval_ms / 1000.0);

    bool ok = table_ms < 1000.0;
    rep.details = {{"bias", b},
                   {"table_ms", table_ms},
                   {"eval_points", evals},
                   {"eval_ms", eval_ms},
                   {"evals_per_second", throughput},
                   {"throughput_floor_hit", throughput >= 1e6},
                   {"checksum", sink}};
    if (!ok) rep.witness = {{"table_ms", table_ms}};
    rep.status = ok ? "pass" : "fail";
    rep.timing_ms = timer.elapsed();
    return rep;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "gauss-sum-law",
        "bias-rank-bound",
        "rank-bruteforce-agreement",
        "restriction-rank-inequality",
        "affine-counting-bound",
        "admissible-density-bound",
        "bogolyubov-subspace",
        "quartic-taylor-identity",
        "structured-quartic-pipeline",
        "performance-floor",
    };
    return names;
}

VerifyOutcome verify_suite(const VerifyConfig& cfg) {
    using CheckFn = CheckReport (*)(const VerifyConfig&);
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"gauss-sum-law", check_gauss_sum_law},
        {"bias-rank-bound", check_bias_rank_bound},
        {"rank-bruteforce-agreement", check_rank_bruteforce_agreement},
        {"restriction-rank-inequality", check_restriction_rank_inequality},
        {"affine-counting-bound", check_affine_counting_bound},
        {"admissible-density-bound", check_admissible_density_bound},
        {"bogolyubov-subspace", check_bogolyubov_subspace},
        {"quartic-taylor-identity", check_quartic_taylor_identity},
        {"structured-quartic-pipeline", check_structured_quartic_pipeline},
        {"performance-floor", check_performance_floor},
    };
    VerifyOutcome out;
    for (const auto& name : cfg.checks) {
        auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& e) { return e.first == name; });
        if (it == table.end()) throw UsageError("unknown check: " + name);
        out.reports.push_back(it->second(cfg));
        if (!out.reports.back().passed()) out.exit_code = 1;
    }
    return out;
}

ordered_json VerifyOutcome::to_json(const VerifyConfig& cfg) const {
    ordered_json j;
    j["version"] = "0.1.0";
    j["config"] = cfg.to_json();
    j["checks"] = ordered_json::array();
    for (const auto& r : reports) j["checks"].push_back(r.to_json());
    return j;
}

}  // namespace fpq
