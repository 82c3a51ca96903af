#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fpq/errors.hpp"

namespace fpq {

/// Exact rational with int64 numerator/denominator and 128-bit cross
/// products. Counts at desk scale (p^n <= 2e6 points, fourth powers of
/// subspace sizes) stay well inside this range.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    void normalize() {
        if (den == 0) throw UsageError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator-(const Rational& o) const {
        __int128 n = static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den;
        __int128 d = static_cast<__int128>(den) * o.den;
        return from128(n, d);
    }

    Rational abs() const { return num < 0 ? Rational(-num, den) : *this; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

}  // namespace fpq
