#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sigforge {

using Integer = mpz_class;
using Rational = mpq_class;

int sign(const Integer& x);
int sign(const Rational& x);

// Accepts "p/q", "p", and plain decimals such as "-0.25". Result is canonical.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Integer binomial(unsigned long n, unsigned long k);

// Floor of the square root; -1 for negative input.
Integer isqrt(const Integer& x);
bool is_perfect_square(const Integer& x);

// Nearest integer, ties broken toward zero.
Integer round_half_toward_zero(const Rational& x);

// Two-sided average of a pair of integer limits, kept exact.
struct HalfInteger {
    long twice = 0;

    static HalfInteger average(long left, long right) { return HalfInteger{left + right}; }
    double value() const { return static_cast<double>(twice) / 2.0; }
    std::string str() const;

    friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

}  // namespace sigforge
