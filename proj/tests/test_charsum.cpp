#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fpq/charsum.hpp"
#include "fpq/generators.hpp"
#include "fpq/probe.hpp"
#include "fpq/quadform.hpp"

using namespace fpq;

TEST_CASE("level counts") {
    PrimeField f(5);
    SUBCASE("zero polynomial on a line") {
        LevelCounts c = level_counts(Polynomial::zero(f, 1));
        CHECK(c.counts == std::vector<std::uint64_t>{5, 0, 0, 0, 0});
    }
    SUBCASE("squares mod 5") {
        LevelCounts c = level_counts(parse_polynomial(f, 1, "x1^2"));
        CHECK(c.counts == std::vector<std::uint64_t>{1, 2, 0, 0, 2});
    }
    SUBCASE("balanced linear form") {
        LevelCounts c = level_counts(parse_polynomial(f, 2, "x1"));
        CHECK(c.counts == std::vector<std::uint64_t>{5, 5, 5, 5, 5});
    }
    SUBCASE("counts always sum to the domain size") {
        SplitMix64 rng(31);
        for (int i = 0; i < 20; ++i) {
            LevelCounts c = level_counts(random_polynomial(f, 3, 4, rng));
            std::uint64_t sum = 0;
            for (auto v : c.counts) sum += v;
            CHECK(sum == c.domain_size);
        }
    }
}

TEST_CASE("bias values") {
    PrimeField f(5);
    CHECK(bias(Polynomial::constant(f, 2, 3)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bias(parse_polynomial(f, 2, "x1")) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bias(parse_polynomial(f, 1, "x1^2")) ==
          doctest::Approx(0.4472135954999579).epsilon(1e-12));
}

TEST_CASE("bias invariances, exact on counts") {
    PrimeField f(5);
    SplitMix64 rng(32);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = random_polynomial(f, 2, 2, rng);
        LevelCounts c0 = level_counts(p);
        LevelCounts c1 = level_counts(p + Polynomial::constant(f, 2, 1 + rng.below(4)));
        LevelCounts c2 = level_counts(p.scaled(f.p() - 1));
        CHECK(char_sum_norm_squared(c0) == char_sum_norm_squared(c1));
        CHECK(char_sum_norm_squared(c0) == char_sum_norm_squared(c2));
        double b = bias_from_counts(c0);
        CHECK(b >= 0.0);
        CHECK(b <= 1.0 + 1e-15);
    }
}

TEST_CASE("cyclotomic arithmetic") {
    SUBCASE("vanishing geometric sum") {
        CyclotomicInteger s(7);
        for (std::uint32_t k = 0; k < 7; ++k) s.add_power(k, 1);
        CHECK(s.is_rational());
        CHECK(s.rational_value() == 0);
    }
    SUBCASE("embedding matches extended-precision complex arithmetic") {
        SplitMix64 rng(33);
        PrimeField f(7);
        for (int i = 0; i < 25; ++i) {
            CyclotomicInteger a(7), b(7);
            for (std::uint32_t k = 0; k < 6; ++k) {
                a.coords[k] = static_cast<long long>(rng.below(41)) - 20;
                b.coords[k] = static_cast<long long>(rng.below(41)) - 20;
            }
            auto lhs = (a * b).embed();
            auto rhs = a.embed() * b.embed();
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("exact bias power checks") {
    PrimeField f(5);
    SUBCASE("one-variable square has |S|^2 = 5") {
        LevelCounts c = level_counts(parse_polynomial(f, 1, "x1^2"));
        CyclotomicInteger s2 = char_sum_norm_squared(c);
        CHECK(s2.is_rational());
        CHECK(s2.rational_value() == 5);
        CHECK(bias_equals_power_check(c, 1));
        CHECK(!bias_equals_power_check(c, 0));
        CHECK(!bias_equals_power_check(c, 2));
    }
    SUBCASE("zero polynomial at m = 0") {
        CHECK(bias_equals_power_check(Polynomial::zero(f, 2), 0));
    }
    SUBCASE("hyperbolic plane on F_5^2") {
        Polynomial q = parse_polynomial(f, 2, "x1*x2");
        LevelCounts c = level_counts(q);
        CHECK(c.counts[0] == 9);  // x1 = 0 or x2 = 0
        CyclotomicInteger s2 = char_sum_norm_squared(c);
        CHECK(s2.rational_value() == 25);
        CHECK(bias_equals_power_check(c, 2));
        CHECK(bias(q) == doctest::Approx(0.2).epsilon(1e-12));
    }
    SUBCASE("degree guard") {
        CHECK_THROWS_AS(bias_equals_power_check(parse_polynomial(f, 1, "x1^3"), 1),
                        UsageError);
    }
}

TEST_CASE("cyclotomic |S|^2 matches the complex square, all quadratics p=3 n=2") {
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
        LevelCounts counts = level_counts(q);
        CyclotomicInteger s2 = char_sum_norm_squared(counts);
        double b = bias_from_counts(counts);
        double via_cyclo = std::sqrt(static_cast<double>(std::abs(
                               static_cast<double>(s2.embed().real())))) /
                           static_cast<double>(counts.domain_size);
        CHECK(std::abs(b - via_cyclo) < 1e-9);
        // the mini Gauss-sum law
        std::uint32_t m = rank(f, QuadraticPoly::from_poly(q).gram_matrix());
        CHECK((bias_is_zero(counts) || bias_equals_power_check(counts, m)));
    }
}
