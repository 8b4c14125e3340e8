#pragma once

// Explicit constructions: localized-jump polynomials and their Seifert
// realizations, metabolic matrices whose signature function is a single peak,
// the high-dimensional variants, and independence certificates.

#include <optional>
#include <string>
#include <vector>

#include "sigforge/seifert.hpp"

namespace sigforge {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

using CheckList = std::vector<Check>;

// Throws VerificationFailure naming the first failed check.
void require_all(const CheckList& checks, const std::string& context);

// ---------------------------------------------------------------------------
// Quartic jump polynomials

struct JumpSearchResult {
    Integer a;
    Integer b;
    IntPolynomial delta;     // b t^4 - 2(a+b) t^3 + (4a+2b-1) t^2 - 2(a+b) t + b
    IntPolynomial quadratic; // q(x) = b x^2 - 2(a+b) x + (4a-1), delta = t^2 q(t + 1/t)
};

// Delta for the pair (a, b).
IntPolynomial jump_quartic(const Integer& a, const Integer& b);

// Search b = 1, 2, 3, ... with a the nearest integer to r*b (ties toward
// zero) until delta has a single unit-root pair whose real part is within
// eps of r.
JumpSearchResult jump_search(const Rational& r, const Rational& eps);
IntPolynomial jump_polynomial(const Rational& r, const Rational& eps);

struct HighDimJump {
    JumpSearchResult base;
    Integer c;               // 2(a + b)
    IntPolynomial factor;    // c t^2 + (1 - 2c) t + c
    IntPolynomial d;         // factor * delta
    Rational extra_real_part; // 1 - 1/(2c)
};

// `extra_floor` defaults to r + eps: the extra unit root lies to the right of
// the window.
HighDimJump highdim_jump_search(const Rational& r, const Rational& eps,
                                const std::optional<Rational>& extra_floor = std::nullopt);
IntPolynomial highdim_jump_polynomial(const Rational& r, const Rational& eps,
                                      const std::optional<Rational>& extra_floor = std::nullopt);

// Palindromic of even degree 2g, D(1) = (-1)^g, D(-1) a perfect square.
bool highdim_validate_polynomial(const IntPolynomial& d);

// ---------------------------------------------------------------------------
// Realization

struct LambdaCoefficients {
    std::vector<Integer> a;  // a_0 .. a_g

    std::size_t genus() const { return a.size() - 1; }
    IntPolynomial as_polynomial() const { return IntPolynomial(a); }
};

// Unique integers with sum_j a_j (1-t)^(2g-2j) t^j = delta(t).
LambdaCoefficients lambda_coefficients(const IntPolynomial& delta);
IntPolynomial expand_lambda(const LambdaCoefficients& lambda);

// g x g, subdiagonal -1, last column a_0 .. a_{g-1}; det(A + xI) = lambda(x).
IntMatrix companion_matrix(const LambdaCoefficients& lambda);

// V = [[X, I], [0, Y]] with X the Hankel matrix of lambda and Y = X^{-1} A.
SeifertMatrix hankel_realize(const IntPolynomial& delta);

// ---------------------------------------------------------------------------
// Metabolic peaks

struct PeakSummand {
    Rational separator;  // m in (-1, 1): the summand is positive on one side
    Integer b1;
    Integer b2;
    SeifertMatrix matrix;
};

struct MetabolicPeak {
    LambdaCoefficients lambda;
    IntMatrix companion;
    std::vector<AlgebraicReal> roots;  // unit-root real parts, increasing
    std::size_t target = 0;             // 1-based
    PeakSummand first;                  // positive at roots 1..p
    PeakSummand second;                 // positive at roots p..k
    SeifertMatrix matrix;               // first ⊕ second
    SignatureStepFunction step;
    CheckList checks;
};

// Throws VerificationFailure if any postcondition fails on the output.
MetabolicPeak metabolic_peak_detail(const IntPolynomial& delta, std::size_t p);
SeifertMatrix metabolic_peak(const IntPolynomial& delta, std::size_t p);

MetabolicPeak highdim_metabolic_peak_detail(const IntPolynomial& delta, std::size_t p);
SeifertMatrix highdim_metabolic_peak(const IntPolynomial& delta, std::size_t p);

// The 4g x 4g block matrix of a single summand for the given parity.
IntMatrix peak_block(const IntMatrix& companion, const Integer& b1, const Integer& b2, Parity parity);

// ---------------------------------------------------------------------------
// Independence certificates

struct JumpSummand {
    Rational window_lo;
    Rational window_hi;
    IntPolynomial delta;
    bool negated = false;
    SeifertMatrix matrix;  // oriented: +2 left of its jump, 0 right of it
};

struct IndependenceCertificate {
    std::vector<Rational> points;
    std::size_t target = 0;  // 1-based
    Rational eps;
    JumpSummand right;                 // jump in (c_k, c_{k+1})
    std::optional<JumpSummand> left;   // jump in (c_{k-1}, c_k); absent for k = 1
    SeifertMatrix matrix;
    std::vector<long> signatures;  // exact signature at each point
    CheckList checks;
};

IndependenceCertificate independence_certificate_detail(const std::vector<Rational>& points, std::size_t k);
SeifertMatrix independence_certificate(const std::vector<Rational>& points, std::size_t k);

}  // namespace sigforge
