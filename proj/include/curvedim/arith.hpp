#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace curvedim {

using Int = long long;

// All invariant formulas are evaluated in checked 64-bit arithmetic.
// Dimensions and matrix shapes in this problem stay far below 2^62, so an
// overflow can only mean a caller bug; it throws instead of wrapping.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer add overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer sub overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer mul overflow");
    return r;
}

// C(x,2) = x(x-1)/2, defined for every integer (product of consecutive
// integers, hence exact).
inline Int binom2(Int x) { return checked_mul(x, x - 1) / 2; }

// floor/ceil division with positive divisor
inline Int floor_div(Int a, Int b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b, r = a % b;
    return (r != 0 && a < 0) ? q - 1 : q;
}

inline Int ceil_div(Int a, Int b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    Int q = a / b, r = a % b;
    return (r != 0 && a > 0) ? q + 1 : q;
}

// Minimal exact rational on checked 64-bit components. Enough for the
// interval bookkeeping (dlow and the range bounds); not a general number
// type.
struct Rational {
    Int num{0};
    Int den{1};  // always > 0

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Int n, Int d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = checked_sub(0, n); d = checked_sub(0, d); }
        Int g = std::gcd(std::llabs(n), d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    bool is_integer() const { return den == 1; }
    Int floor() const { return floor_div(num, den); }
    Int ceil() const { return ceil_div(num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) <= checked_mul(b.num, a.den);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
};

}  // namespace curvedim
