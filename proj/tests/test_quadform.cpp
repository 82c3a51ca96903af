#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpq/charsum.hpp"
#include "fpq/family.hpp"
#include "fpq/generators.hpp"
#include "fpq/probe.hpp"
#include "fpq/quadform.hpp"

using namespace fpq;

namespace {

QuadraticPoly quad5(std::uint32_t n, const std::string& s) {
    return QuadraticPoly::from_poly(parse_polynomial(PrimeField(5), n, s));
}

// random quadratic with zero constant term (the polar identity on zero sets
// needs it)
QuadraticPoly random_quad_no_const(const PrimeField& f, std::uint32_t n, SplitMix64& rng) {
    QuadraticPoly q = random_quadratic(f, n, rng);
    q.set_constant(0);
    return q;
}

}  // namespace

TEST_CASE("gram pairing") {
    PrimeField f(5);
    SUBCASE("hyperbolic plane on unit vectors") {
        CHECK(gram_pair(quad5(2, "x1*x2"), {1, 0}, {0, 1}) == 1);
    }
    SUBCASE("polarization identity (s,s) = 2 Q_hom(s)") {
        SplitMix64 rng(41);
        for (int i = 0; i < 100; ++i) {
            QuadraticPoly q = random_quadratic(f, 3, rng);
            Vec s = random_point(f, 3, rng);
            QuadraticPoly hom(f, 3);
            for (std::uint32_t a = 0; a < 3; ++a)
                for (std::uint32_t b = a; b < 3; ++b)
                    hom.set_quad_coeff(a, b, q.quad_coeff(a, b));
            CHECK(gram_pair(q, s, s) == f.mul(2, hom.evaluate(s)));
        }
    }
    SUBCASE("pairing is bilinear and symmetric") {
        SplitMix64 rng(42);
        QuadraticPoly q = random_quadratic(f, 3, rng);
        Vec s = random_point(f, 3, rng), t = random_point(f, 3, rng),
            u = random_point(f, 3, rng);
        CHECK(gram_pair(q, s, t) == gram_pair(q, t, s));
        CHECK(gram_pair(q, vec_add(f, s, u), t) ==
              f.add(gram_pair(q, s, t), gram_pair(q, u, t)));
    }
    SUBCASE("affine polynomials pair to zero") {
        QuadraticPoly q = quad5(2, "3*x1 + x2 + 2");
        SplitMix64 rng(43);
        for (int i = 0; i < 10; ++i)
            CHECK(gram_pair(q, random_point(f, 2, rng), random_point(f, 2, rng)) == 0);
    }
    SUBCASE("pairing definition Q(s+t) - Q(s) - Q(t) for homogeneous forms") {
        SplitMix64 rng(44);
        for (int i = 0; i < 50; ++i) {
            QuadraticPoly q = QuadraticPoly::from_poly(random_homogeneous(f, 3, 2, rng));
            Vec s = random_point(f, 3, rng), t = random_point(f, 3, rng);
            Scalar direct = f.sub(f.sub(q.evaluate(vec_add(f, s, t)), q.evaluate(s)),
                                  q.evaluate(t));
            CHECK(gram_pair(q, s, t) == direct);
        }
    }
}

TEST_CASE("schmidt rank certificates, spec examples") {
    SUBCASE("x1 x2") {
        RankCertificate c = schmidt_rank(quad5(2, "x1*x2"));
        CHECK(c.gram_rank == 2);
        CHECK(c.witt == WittType::kHyperbolic);
        CHECK(c.schmidt_rank == 1);
    }
    SUBCASE("x1^2 + x2^2 is hyperbolic over F_5") {
        RankCertificate c = schmidt_rank(quad5(2, "x1^2 + x2^2"));
        CHECK(c.gram_rank == 2);
        CHECK(c.witt == WittType::kHyperbolic);
        CHECK(c.schmidt_rank == 1);
    }
    SUBCASE("x1^2 + 2 x2^2 is not") {
        RankCertificate c = schmidt_rank(quad5(2, "x1^2 + 2*x2^2"));
        CHECK(c.gram_rank == 2);
        CHECK(c.witt == WittType::kNonhyperbolic);
        CHECK(c.schmidt_rank == 2);
    }
    SUBCASE("odd rank") {
        RankCertificate c = schmidt_rank(quad5(3, "x1*x2 + x3^2"));
        CHECK(c.gram_rank == 3);
        CHECK(c.witt == WittType::kOdd);
        CHECK(c.schmidt_rank == 2);
    }
    SUBCASE("zero form") {
        RankCertificate c = schmidt_rank(quad5(2, "x1 + 3"));
        CHECK(c.gram_rank == 0);
        CHECK(c.schmidt_rank == 0);
    }
}

TEST_CASE("certificates re-expand exactly (construction is self-verifying)") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField f(p);
        SplitMix64 rng(100 + p);
        for (int i = 0; i < 150; ++i) {
            std::uint32_t n = 1 + (i % 4);
            QuadraticPoly q = random_quadratic(f, n, rng);
            RankCertificate c = schmidt_rank(q);  // throws on re-expansion mismatch
            QuadraticPoly acc(f, n);
            for (const auto& [a, b] : c.factors) acc = acc + form_product(f, a, b);
            for (std::uint32_t j = 0; j < n; ++j)
                acc.linear()[j] = f.add(acc.linear()[j], c.remainder.coeffs[j]);
            acc.set_constant(f.add(acc.constant(), c.remainder.constant));
            CHECK(acc == q);
        }
    }
}

TEST_CASE("rank is invariant under invertible change of variables") {
    PrimeField f(5);
    SplitMix64 rng(55);
    for (int i = 0; i < 50; ++i) {
        QuadraticPoly q = random_quadratic(f, 3, rng);
        Subspace t = random_subspace(f, 3, 0, rng);  // random invertible rows
        std::vector<LinearForm> subs;
        Mat rows;
        for (int j = 0; j < 3; ++j) rows.push_back(random_point(f, 3, rng));
        if (rank(f, rows) != 3) continue;
        for (int j = 0; j < 3; ++j) subs.push_back(LinearForm{rows[j], 0});
        Polynomial composed = compose_linear(q.to_poly(), subs, 3);
        CHECK(schmidt_rank(QuadraticPoly::from_poly(composed)).schmidt_rank ==
              schmidt_rank(q).schmidt_rank);
    }
}

TEST_CASE("pairing forms") {
    PrimeField f(5);
    SUBCASE("x1 x2 pairs t = e1 to the form x2") {
        LinearForm form = regularity_pairing_form(quad5(2, "x1*x2"), {1, 0});
        CHECK(form.coeffs == Vec{0, 1});
        CHECK(form.constant == 0);
    }
    SUBCASE("zero direction gives the zero form") {
        LinearForm form = regularity_pairing_form(quad5(2, "x1*x2 + x1"), {0, 0});
        CHECK(form.is_zero());
    }
    SUBCASE("(t, x) = -Q(t) on the shifted zero set, exhaustively") {
        SplitMix64 rng(56);
        int done = 0;
        while (done < 20) {
            QuadraticPoly q = random_quad_no_const(f, 3, rng);
            Vec t = random_point(f, 3, rng);
            QuadFamily fam = QuadFamily::on_full_space(f, 3, {q});
            ZeroSet x = zero_set(fam, Subspace::full(f, 3));
            ZeroSet xt = shifted(x, t);
            if (xt.size() == 0) continue;
            ++done;
            for (std::uint64_t idx : xt.points) {
                Vec pt = point_unrank(f, 3, idx);
                CHECK(gram_pair(q, t, pt) == f.neg(q.evaluate(t)));
            }
        }
    }
}

TEST_CASE("certificate rank matches the exhaustive probe, all quadratics p=3 n=2") {
    PrimeField f(3);
    auto monos = monomials_up_to(2, 2);
    for (std::uint64_t code = 0; code < 729; ++code) {
        Polynomial q(f, 2);
        std::uint64_t c = code;
        for (const auto& m : monos) {
            Scalar coef = static_cast<Scalar>(c % 3);
            c /= 3;
            if (coef) q.add_term(m, coef);
        }
        RankProbe probe = bounded_schmidt_rank(q, 3);
        REQUIRE(probe.status == RankProbe::Status::kExact);
        CHECK(probe.rank == schmidt_rank(QuadraticPoly::from_poly(q)).schmidt_rank);
    }
}

TEST_CASE("bias of a homogeneous form is exactly p^(-m/2)") {
    PrimeField f(5);
    SplitMix64 rng(57);
    for (int i = 0; i < 50; ++i) {
        std::uint32_t n = 1 + (i % 3);
        Polynomial q = random_homogeneous(f, n, 2, rng);
        LevelCounts counts = level_counts(q);
        std::uint32_t m = rank(f, QuadraticPoly::from_poly(q).gram_matrix());
        CHECK(bias_equals_power_check(counts, m));
    }
}
