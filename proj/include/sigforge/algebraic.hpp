#pragma once

// Real algebraic numbers and certified real-root isolation.
//
// An AlgebraicReal is a square-free primitive integer polynomial together with
// an open rational interval (lo, hi) containing exactly one of its real roots.
// Interval endpoints are never roots of the polynomial, so the polynomial takes
// opposite signs at lo and hi and refinement is plain sign bisection.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sigforge/polynomial.hpp"

namespace sigforge {

struct RationalInterval {
    Rational lo;
    Rational hi;
};

class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& p);

    // Number of sign changes of the sequence at x (zeros skipped).
    int variations(const Rational& x) const;
    // Distinct real roots in the half-open interval (a, b].
    int count_half_open(const Rational& a, const Rational& b) const;
    // Distinct real roots in the open interval (a, b).
    int count_open(const Rational& a, const Rational& b) const;
    // Distinct real roots in the closed interval [a, b].
    int count_closed(const Rational& a, const Rational& b) const;

    const IntPolynomial& base() const { return chain_.front(); }

private:
    std::vector<IntPolynomial> chain_;
};

class AlgebraicReal {
public:
    // Checked constructor: minpoly is reduced to its primitive square-free part
    // and the interval must contain exactly one root, with non-root endpoints.
    AlgebraicReal(IntPolynomial minpoly, Rational lo, Rational hi);

    static AlgebraicReal from_rational(const Rational& q);

    const IntPolynomial& minpoly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    // Interval halved; still certified.
    AlgebraicReal refined() const;
    // Refined until hi - lo <= width.
    AlgebraicReal refined_to(const Rational& width) const;

    std::optional<Rational> as_rational() const;
    double approx() const;

    // Exact three-way comparison (gcd + overlap refinement).
    friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b);
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
    std::strong_ordering compare(const Rational& q) const;

private:
    struct Unchecked {};
    AlgebraicReal(Unchecked, IntPolynomial minpoly, Rational lo, Rational hi)
        : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    IntPolynomial minpoly_;
    Rational lo_;
    Rational hi_;
};

struct IsolatedRoot {
    AlgebraicReal value;
    unsigned multiplicity;
};

// Distinct real roots of p strictly inside the open window, in increasing order.
std::vector<AlgebraicReal> sturm_isolate(const IntPolynomial& p, const RationalInterval& window);
// Same, with multiplicities from square-free factorization.
std::vector<IsolatedRoot> isolate_with_multiplicity(const IntPolynomial& p, const RationalInterval& window);

// Exact sign of p at alpha.
int algebraic_sign(const IntPolynomial& p, const AlgebraicReal& alpha);

bool is_palindromic(const IntPolynomial& p);

// For palindromic p of degree 2g with p(0) != 0, the q of degree g with
// p(t) = t^g q(t + 1/t). Verified by re-expansion.
IntPolynomial compress_palindrome(const IntPolynomial& p);
// t^g q(t + 1/t) as a polynomial in t.
IntPolynomial expand_palindrome(const IntPolynomial& q);

// Real parts of the unit roots of a palindromic polynomial with positive
// imaginary part, strictly increasing, each in (-1, 1).
std::vector<AlgebraicReal> unit_root_real_parts(const IntPolynomial& delta);
std::vector<IsolatedRoot> unit_root_real_parts_with_multiplicity(const IntPolynomial& delta);

// Union of two sorted root lists with equal values merged.
std::vector<AlgebraicReal> merge_roots(const std::vector<AlgebraicReal>& a, const std::vector<AlgebraicReal>& b);

// A rational strictly between a and b (a < b required).
Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b);
Rational rational_between(const Rational& a, const AlgebraicReal& b);
Rational rational_between(const AlgebraicReal& a, const Rational& b);

}  // namespace sigforge
