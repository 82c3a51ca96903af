#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpq/generators.hpp"
#include "fpq/json_io.hpp"
#include "fpq/poly.hpp"

using namespace fpq;

namespace {

Polynomial parse5(std::uint32_t n, const std::string& s) {
    return parse_polynomial(PrimeField(5), n, s);
}

}  // namespace

TEST_CASE("evaluation") {
    PrimeField f(5);
    SUBCASE("zero polynomial") {
        Polynomial z(f, 2);
        CHECK(z.evaluate({3, 1}) == 0);
        CHECK(z.degree() == -1);
    }
    SUBCASE("x1^2 x2 at (2,3)") {
        CHECK(parse5(2, "x1^2*x2").evaluate({2, 3}) == 2);  // 4*3 = 12 = 2 mod 5
    }
    SUBCASE("symbolic evaluation equals table lookup") {
        SplitMix64 rng(21);
        for (int i = 0; i < 20; ++i) {
            Polynomial p = random_polynomial(f, 3, 4, rng);
            ValueTable t = to_table(p);
            for (int j = 0; j < 25; ++j) {
                Vec x = random_point(f, 3, rng);
                CHECK(p.evaluate(x) == t.values[point_rank(f, x)]);
            }
        }
    }
}

TEST_CASE("multiplication") {
    PrimeField f(5);
    SUBCASE("identity") {
        Polynomial p = parse5(2, "3*x1^2 + x2");
        CHECK(multiply(p, Polynomial::constant(f, 2, 1)) == p);
    }
    SUBCASE("expansion with cancelling cross terms") {
        Polynomial lhs = multiply(parse5(2, "x1 + 2*x2"), parse5(2, "x1 + 3*x2"));
        CHECK(lhs == parse5(2, "x1^2 + x2^2"));
    }
    SUBCASE("pointwise table oracle") {
        SplitMix64 rng(22);
        for (int i = 0; i < 50; ++i) {
            Polynomial a = random_polynomial(f, 2, 2, rng);
            Polynomial b = random_polynomial(f, 2, 2, rng);
            ValueTable ta = to_table(a), tb = to_table(b), tp = to_table(multiply(a, b));
            for (size_t k = 0; k < tp.values.size(); ++k)
                CHECK(tp.values[k] == f.mul(ta.values[k], tb.values[k]));
        }
    }
    SUBCASE("degree budget") {
        Polynomial q = parse5(1, "x1^3");
        CHECK_THROWS_AS(multiply(q, q, 4), UsageError);   // cap
        CHECK_THROWS_AS(multiply(q, q, 8), UsageError);   // 6 >= p
    }
}

TEST_CASE("discrete derivative") {
    PrimeField f(5);
    SUBCASE("cubic in one variable") {
        CHECK(discrete_derivative(parse5(1, "x1^3"), {1}) ==
              parse5(1, "3*x1^2 + 3*x1 + 1"));
    }
    SUBCASE("zero direction") {
        SplitMix64 rng(3);
        Polynomial p = random_polynomial(f, 3, 4, rng);
        CHECK(discrete_derivative(p, {0, 0, 0}).is_zero());
    }
    SUBCASE("derivatives commute") {
        SplitMix64 rng(4);
        for (int i = 0; i < 100; ++i) {
            std::uint32_t n = 1 + (i % 3);
            Polynomial p = random_polynomial(f, n, 4, rng);
            Vec h = random_point(f, n, rng), k = random_point(f, n, rng);
            CHECK(discrete_derivative(discrete_derivative(p, h), k) ==
                  discrete_derivative(discrete_derivative(p, k), h));
        }
    }
    SUBCASE("degree drops for every direction, exhaustively") {
        SplitMix64 rng(5);
        for (int i = 0; i < 5; ++i) {
            Polynomial p = random_polynomial(f, 3, 4, rng, /*exact_degree=*/true);
            for_each_point(f, 3, [&](const Vec& h) {
                CHECK(discrete_derivative(p, h).degree() <= p.degree() - 1);
            });
        }
    }
    SUBCASE("derivative is linear in f") {
        SplitMix64 rng(6);
        Polynomial a = random_polynomial(f, 2, 4, rng);
        Polynomial b = random_polynomial(f, 2, 4, rng);
        Vec h = random_point(f, 2, rng);
        CHECK(discrete_derivative(a + b, h) ==
              discrete_derivative(a, h) + discrete_derivative(b, h));
    }
}

TEST_CASE("iterated derivative") {
    PrimeField f(5);
    SUBCASE("four directions kill degree 3") {
        SplitMix64 rng(7);
        for (int i = 0; i < 20; ++i) {
            Polynomial p = random_polynomial(f, 2, 3, rng);
            std::vector<Vec> hs;
            for (int k = 0; k < 4; ++k) hs.push_back(random_point(f, 2, rng));
            CHECK(iterated_derivative(p, hs).is_zero());
        }
    }
    SUBCASE("x1 x2 x3 x4 along the basis") {
        Polynomial p = parse5(4, "x1*x2*x3*x4");
        std::vector<Vec> hs = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        CHECK(iterated_derivative(p, hs) == Polynomial::constant(f, 4, 1));
    }
    SUBCASE("four derivatives of a quartic are constant") {
        SplitMix64 rng(8);
        for (int i = 0; i < 100; ++i) {
            std::uint32_t n = 1 + (i % 3);
            Polynomial p = random_polynomial(f, n, 4, rng);
            std::vector<Vec> hs;
            for (int k = 0; k < 4; ++k) hs.push_back(random_point(f, n, rng));
            CHECK(iterated_derivative(p, hs).degree() <= 0);
        }
    }
    SUBCASE("at most five directions") {
        Polynomial p = parse5(1, "x1");
        std::vector<Vec> hs(6, Vec{1});
        CHECK_THROWS_AS(iterated_derivative(p, hs), UsageError);
    }
}

TEST_CASE("degree via vanishing derivatives") {
    PrimeField f(5);
    CHECK(parse5(2, "x1^2*x2").degree() == 3);
    SplitMix64 rng(9);
    for (int i = 0; i < 40; ++i) {
        std::uint32_t d = 1 + (i % 4);
        Polynomial p = random_polynomial(f, 2, d, rng, /*exact_degree=*/true);
        // all (d+1)-fold derivatives vanish
        for (int t = 0; t < 30; ++t) {
            std::vector<Vec> hs;
            for (std::uint32_t k = 0; k < d + 1; ++k)
                hs.push_back(random_point(f, 2, rng));
            CHECK(iterated_derivative(p, hs).is_zero());
        }
        // some d-fold derivative does not vanish
        bool witnessed = false;
        for (int t = 0; t < 200 && !witnessed; ++t) {
            std::vector<Vec> hs;
            for (std::uint32_t k = 0; k < d; ++k)
                hs.push_back(random_nonzero_point(f, 2, rng));
            witnessed = !iterated_derivative(p, hs).is_zero();
        }
        CHECK(witnessed);
    }
}

TEST_CASE("homogeneous parts") {
    PrimeField f(5);
    CHECK(homogeneous_part(parse5(2, "x1^2 + x2"), 2) == parse5(2, "x1^2"));
    SUBCASE("parts sum back to f") {
        SplitMix64 rng(10);
        Polynomial p = random_polynomial(f, 3, 4, rng);
        Polynomial acc(f, 3);
        for (std::uint32_t d = 0; d <= 4; ++d) acc = acc + homogeneous_part(p, d);
        CHECK(acc == p);
    }
    SUBCASE("pure quartic: fourfold derivative is 24 times the monomial") {
        Polynomial p = parse5(1, "x1^4");
        for (Scalar v = 0; v < 5; ++v) {
            Vec x{v};
            Polynomial d4 = iterated_derivative(p, {x, x, x, x});
            Scalar expect = f.mul(4, f.pow(v, 4));  // 24 = 4 mod 5
            CHECK(d4.evaluate({0}) == expect);
        }
    }
}

TEST_CASE("restriction") {
    PrimeField f(5);
    SUBCASE("full space is a relabeling") {
        SplitMix64 rng(11);
        Polynomial p = random_polynomial(f, 3, 3, rng);
        Polynomial r = restrict_to(p, Subspace::full(f, 3));
        CHECK(r == p);
    }
    SUBCASE("x1 x2 on the diagonal line") {
        Subspace diag = Subspace::from_vectors(f, 2, {{1, 1}});
        CHECK(restrict_to(parse5(2, "x1*x2"), diag) == parse_polynomial(f, 1, "x1^2"));
    }
    SUBCASE("evaluation commutes with the parametrization") {
        SplitMix64 rng(12);
        for (int i = 0; i < 100; ++i) {
            Polynomial p = random_polynomial(f, 3, 3, rng);
            Subspace dir = random_subspace(f, 3, 1 + rng.below(2), rng);
            AffineSubspace s(random_point(f, 3, rng), dir);
            Polynomial r = restrict_to(p, s);
            for_each_point(PrimeField(5), s.dim(), [&](const Vec& c) {
                Vec x = s.offset;
                for (std::uint32_t j = 0; j < dir.dim(); ++j)
                    x = vec_add(f, x, vec_scale(f, c[j], dir.basis()[j]));
                CHECK(r.evaluate(c) == p.evaluate(x));
            });
        }
    }
}

TEST_CASE("interpolation") {
    SUBCASE("all-zero table") {
        ValueTable t{5, 2, std::vector<Scalar>(25, 0)};
        CHECK(interpolate_from_table(t).is_zero());
    }
    SUBCASE("identity at p=3") {
        ValueTable t{3, 1, {0, 1, 2}};
        CHECK(interpolate_from_table(t) == parse_polynomial(PrimeField(3), 1, "x1"));
    }
    SUBCASE("round trip on random tables") {
        PrimeField f(5);
        SplitMix64 rng(13);
        for (int i = 0; i < 100; ++i) {
            ValueTable t{5, 3, {}};
            t.values.resize(125);
            for (auto& v : t.values) v = rng.scalar(f);
            Polynomial p = interpolate_from_table(t);
            CHECK(to_table(p).values == t.values);
        }
    }
}

TEST_CASE("text and json round trips") {
    PrimeField f(5);
    CHECK(parse5(3, "3*x1^2*x2 + 4*x3").to_string() == "3*x1^2*x2 + 4*x3");
    CHECK(parse5(2, "x1 - x2") == parse5(2, "x1 + 4*x2"));
    CHECK(parse5(1, "x1^7") == parse5(1, "x1^3"));  // x^p = x reduction
    CHECK_THROWS_AS(parse5(1, "x2"), UsageError);
    SplitMix64 rng(14);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_polynomial(f, 3, 4, rng);
        CHECK(parse_polynomial(f, 3, p.to_string()) == p);
        CHECK(polynomial_from_json(to_json(p)) == p);
    }
}

TEST_CASE("degree semantics guard") {
    PrimeField f(3);
    // interpolants over F_3 may exceed the calculus range
    ValueTable t{3, 2, {0, 1, 2, 1, 2, 0, 2, 2, 2}};
    Polynomial p = interpolate_from_table(t);
    if (p.degree() >= 3) CHECK_THROWS_AS(ensure_degree_semantics(p), UsageError);
}
