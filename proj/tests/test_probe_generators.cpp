#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpq/checks.hpp"
#include "fpq/generators.hpp"
#include "fpq/probe.hpp"
#include "fpq/quadform.hpp"

using namespace fpq;

TEST_CASE("bounded rank probe") {
    PrimeField f(5);
    SUBCASE("monomial product of three variables") {
        RankProbe probe = bounded_schmidt_rank(parse_polynomial(f, 3, "x1*x2*x3"), 2);
        REQUIRE(probe.status == RankProbe::Status::kExact);
        CHECK(probe.rank == 1);
    }
    SUBCASE("anisotropic plane exceeds cap 1") {
        RankProbe probe = bounded_schmidt_rank(parse_polynomial(f, 2, "x1^2 + 2*x2^2"), 1);
        CHECK(probe.status == RankProbe::Status::kGreaterThanCap);
    }
    SUBCASE("affine polynomials have rank zero") {
        RankProbe probe = bounded_schmidt_rank(parse_polynomial(f, 2, "x1 + 3"), 2);
        REQUIRE(probe.status == RankProbe::Status::kExact);
        CHECK(probe.rank == 0);
    }
    SUBCASE("monotone in the cap") {
        SplitMix64 rng(91);
        for (int i = 0; i < 10; ++i) {
            Polynomial p = random_polynomial(f, 2, 2, rng);
            RankProbe a = bounded_schmidt_rank(p, 1);
            RankProbe b = bounded_schmidt_rank(p, 3);
            REQUIRE(b.status == RankProbe::Status::kExact);
            if (a.status == RankProbe::Status::kExact) CHECK(a.rank == b.rank);
            else CHECK(b.rank > 1);
        }
    }
    SUBCASE("probe decompositions re-expand to f") {
        SplitMix64 rng(92);
        for (int i = 0; i < 10; ++i) {
            Polynomial p = random_polynomial(f, 2, 3, rng, /*exact_degree=*/true);
            RankProbe probe = bounded_schmidt_rank(p, 2);
            REQUIRE(probe.status == RankProbe::Status::kExact);
            Polynomial acc(f, 2);
            for (const auto& [g, h] : probe.products) acc = acc + multiply(g, h);
            CHECK((p - acc).degree() < p.degree());
        }
    }
}

TEST_CASE("generator determinism") {
    PrimeField f(5);
    SUBCASE("identical seeds, identical artifacts") {
        SplitMix64 a(1234), b(1234);
        CHECK(random_polynomial(f, 3, 4, a) == random_polynomial(f, 3, 4, b));
        SplitMix64 c(99), d(99);
        GroupSubset sa = random_subset(f, 3, 0.5, c);
        GroupSubset sb = random_subset(f, 3, 0.5, d);
        CHECK(sa.indices() == sb.indices());
        SplitMix64 e(7), g(7);
        CHECK(random_subspace(f, 4, 2, e) == random_subspace(f, 4, 2, g));
    }
    SUBCASE("different seeds differ somewhere") {
        SplitMix64 a(1), b(2);
        CHECK(!(random_polynomial(f, 3, 4, a) == random_polynomial(f, 3, 4, b)));
    }
}

TEST_CASE("random subset has the exact prescribed size") {
    PrimeField f(5);
    SplitMix64 rng(93);
    GroupSubset s = random_subset(f, 3, 0.5, rng);
    CHECK(s.size() == 62);  // floor(0.5 * 125)
    GroupSubset t = random_subset(f, 3, 0.0, rng);
    CHECK(t.size() == 0);
}

TEST_CASE("structured quartics carry a valid ground-truth family") {
    PrimeField f(5);
    for (std::uint32_t k : {1u, 2u}) {
        SplitMix64 rng(700 + k);
        StructuredQuartic sq = structured_quartic(f, 4, k, rng);
        CHECK(sq.ground_truth.size() == 2 * k);
        QuadFamily fam = QuadFamily::on_full_space(f, 4, sq.ground_truth);
        ImplicationResult res = implication_check(sq.f, fam, Subspace::full(f, 4));
        CHECK(res.pass);
        CHECK(res.zero_points >= 1);  // the origin at least
    }
}

TEST_CASE("random subspace hits the requested codimension") {
    PrimeField f(5);
    SplitMix64 rng(94);
    for (std::uint32_t codim : {0u, 1u, 2u, 3u}) {
        Subspace s = random_subspace(f, 3, codim, rng);
        CHECK(s.codim() == codim);
    }
}
