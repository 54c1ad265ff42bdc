#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace spectral {

// Exact rational with 64-bit parts, always normalized (gcd 1, positive
// denominator). Large intermediate products go through 128-bit arithmetic.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den <
               static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den, b.den);
        const std::int64_t da = a.den / g;
        const std::int64_t db = b.den / g;
        return Rational(a.num * db - b.num * da, a.den * db);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace spectral
