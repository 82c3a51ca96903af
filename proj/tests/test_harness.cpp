#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fpq/checks.hpp"
#include "fpq/extract.hpp"
#include "fpq/generators.hpp"
#include "fpq/json_io.hpp"

using namespace fpq;

namespace {

bool in_span(const PrimeField& f, const Polynomial& q, const std::vector<Polynomial>& pool) {
    Mat rows;
    for (const auto& p : pool)
        rows.push_back(QuadraticPoly::from_poly(p).packed_quad());
    std::uint32_t base = rank(f, rows);
    rows.push_back(QuadraticPoly::from_poly(q).packed_quad());
    return rank(f, rows) == base;
}

}  // namespace

TEST_CASE("implication check") {
    PrimeField f(5);
    Polynomial prod = multiply(parse_polynomial(f, 4, "x1*x2"),
                               parse_polynomial(f, 4, "x3*x4"));
    Subspace full = Subspace::full(f, 4);
    SUBCASE("vanishing factor makes the implication hold") {
        QuadFamily fam = QuadFamily::on_full_space(
            f, 4, {QuadraticPoly::from_poly(parse_polynomial(f, 4, "x1*x2"))});
        ImplicationResult r = implication_check(prod, fam, full);
        CHECK(r.pass);
        CHECK(r.scanned == 625);
    }
    SUBCASE("empty family fails with the first witness in point order") {
        QuadFamily fam = QuadFamily::on_full_space(f, 4, {});
        ImplicationResult r = implication_check(prod, fam, full);
        CHECK(!r.pass);
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == Vec{1, 1, 1, 1});
    }
    SUBCASE("degree three passes vacuously") {
        SplitMix64 rng(101);
        Polynomial cubic = random_polynomial(f, 3, 3, rng);
        QuadFamily fam = QuadFamily::on_full_space(f, 3, {});
        CHECK(implication_check(cubic, fam, Subspace::full(f, 3)).pass);
    }
}

TEST_CASE("restriction rank checks") {
    PrimeField f(5);
    SUBCASE("full space restriction is the identity bound") {
        SplitMix64 rng(102);
        Polynomial cubic = random_polynomial(f, 2, 3, rng, /*exact_degree=*/true);
        RestrictionRankCheck c = restriction_rank_check(cubic, Subspace::full(f, 2), 2);
        CHECK(c.status == RestrictionRankCheck::Status::kPass);
        CHECK(c.rank_full == c.rank_restricted);
    }
    SUBCASE("seeded corpus has no violations") {
        SplitMix64 rng(103);
        for (int i = 0; i < 25; ++i) {
            Polynomial cubic = random_polynomial(f, 2, 3, rng, /*exact_degree=*/true);
            Subspace v = random_subspace(f, 2, 1, rng);
            RestrictionRankCheck c = restriction_rank_check(cubic, v, 2);
            CHECK(c.status != RestrictionRankCheck::Status::kFail);
        }
    }
    SUBCASE("quadratic certificate example: x1x2 + x3x4 against a hyperplane") {
        QuadraticPoly q = QuadraticPoly::from_poly(
            parse_polynomial(f, 4, "x1*x2 + x3*x4"));
        std::vector<LinearForm> forms = {{{1, 0, 0, 0}, 0}};
        Subspace v = annihilator_subspace(f, forms, 4);
        RankCertificate on_v = schmidt_rank(q.restricted(v));
        CHECK(on_v.schmidt_rank == 1);
        CHECK(schmidt_rank(q).schmidt_rank <= on_v.schmidt_rank + v.codim());
    }
}

TEST_CASE("derivative pool extraction") {
    PrimeField f(5);
    SUBCASE("degree three gives an empty pool") {
        SplitMix64 rng(104);
        Polynomial cubic = random_polynomial(f, 3, 3, rng);
        ExtractResult r = extract_quadratic_pool(cubic, 3);
        CHECK(r.complete);
        CHECK(r.pool.empty());
        for (const auto& d : r.directions) CHECK(d.width == 0);
    }
    SUBCASE("pure fourth power yields its square root") {
        Polynomial p = parse_polynomial(f, 4, "x1^4");
        ExtractResult r = extract_quadratic_pool(p, 3);
        REQUIRE(r.complete);
        REQUIRE(r.pool.size() == 1);
        CHECK(r.pool[0] == parse_polynomial(f, 4, "x1^2"));
    }
    SUBCASE("product of two quadratics recovers their span") {
        SplitMix64 rng(105);
        Polynomial q1 = random_homogeneous(f, 4, 2, rng);
        Polynomial q2 = random_homogeneous(f, 4, 2, rng);
        Polynomial prod = multiply(q1, q2);
        ExtractResult r = extract_quadratic_pool(prod, 2);
        REQUIRE(r.complete);
        CHECK(r.pool.size() <= 2);
        for (const auto& q : r.pool) CHECK(in_span(f, q, {q1, q2}));
        // cover invariant: every direction cubic lies in the pool ideal
        for (std::uint32_t i = 0; i < 4; ++i) {
            Vec e(4, 0);
            e[i] = 1;
            CHECK(cubic_in_quadratic_ideal(derivative_cubic_slice(prod, e), r.pool));
        }
    }
}

TEST_CASE("pipeline") {
    PrimeField f(5);
    SUBCASE("pure fourth power passes with its square-root family") {
        PipelineResult r = run_pipeline(parse_polynomial(f, 4, "x1^4"), 1, 3);
        CHECK(r.status == "pass");
        REQUIRE(r.family_size == 1);
        CHECK(r.family.quads[0].to_poly() == parse_polynomial(f, 4, "x1^2"));
        CHECK(r.codim_out == 0);
    }
    SUBCASE("vanishing quartic part passes with an empty family") {
        SplitMix64 rng(106);
        Polynomial cubic = random_polynomial(f, 4, 3, rng);
        PipelineResult r = run_pipeline(cubic, 1, 3);
        CHECK(r.status == "pass");
        CHECK(r.family_size == 0);
        CHECK(r.codim_out == 0);
    }
    SUBCASE("structured quartics pass within the budgeted family size") {
        for (std::uint32_t k : {1u, 2u}) {
            SplitMix64 rng(900 + k);
            StructuredQuartic sq = structured_quartic(f, 4, k, rng);
            PipelineResult r = run_pipeline(sq.f, 1, 2 * k, 900 + k);
            CHECK(r.status == "pass");
            CHECK(r.family_size <= 2 * k);
            CHECK(r.codim_out <= 2 * k);
            // soundness: the reported pass re-verifies independently
            ImplicationResult again = implication_check(sq.f, r.family, r.subspace);
            CHECK(again.pass);
        }
    }
}

TEST_CASE("verify suite plumbing") {
    SUBCASE("empty config runs nothing and exits zero") {
        VerifyConfig cfg;
        cfg.checks = {};
        VerifyOutcome out = verify_suite(cfg);
        CHECK(out.exit_code == 0);
        CHECK(out.reports.empty());
        CHECK(out.to_json(cfg)["checks"].empty());
    }
    SUBCASE("unknown check names are usage errors") {
        VerifyConfig cfg;
        cfg.checks = {"no-such-check"};
        CHECK_THROWS_AS(verify_suite(cfg), UsageError);
    }
    SUBCASE("mutation hook is caught with a witness") {
        VerifyConfig cfg;
        cfg.checks = {"gauss-sum-law"};
        cfg.mutation = "gauss-power-shift";
        VerifyOutcome out = verify_suite(cfg);
        CHECK(out.exit_code == 1);
        REQUIRE(out.reports.size() == 1);
        CHECK(out.reports[0].status == "fail");
        CHECK(!out.reports[0].witness.is_null());
    }
    SUBCASE("reports are deterministic modulo timing") {
        VerifyConfig cfg;
        cfg.checks = {"affine-counting-bound"};
        auto scrub = [](ordered_json j) {
            for (auto& c : j["checks"]) c.erase("timing_ms");
            return j.dump();
        };
        VerifyOutcome a = verify_suite(cfg);
        VerifyOutcome b = verify_suite(cfg);
        CHECK(scrub(a.to_json(cfg)) == scrub(b.to_json(cfg)));
    }
}

TEST_CASE("config json round trip") {
    ordered_json j = {{"checks", {"gauss-sum-law"}}, {"seed", 7}, {"mutation", "none"}};
    VerifyConfig cfg = VerifyConfig::from_json(j);
    CHECK(cfg.checks == std::vector<std::string>{"gauss-sum-law"});
    CHECK(cfg.seed == 7);
    VerifyConfig all = VerifyConfig::from_json(ordered_json::object());
    CHECK(all.checks.size() == 10);
}
