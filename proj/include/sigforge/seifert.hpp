#pragma once

// Seifert matrices and their signature functions.
//
// For omega = c + i*sqrt(1 - c^2) on the open upper semicircle the signature is
// read off a rational symmetric "realification" of the hermitianized form:
//
//   Classical   (1-w)V + (1-w̄)Vᵀ           ~  [[(1-c)S, -K], [K, S/(1+c)]]
//   HighDimSym  (w-w̄)((1-w)V - (1-w̄)Vᵀ)    ~  [[S, -K], [K, ((1+c)/(1-c))S]]
//
// with S = V + Vᵀ and K = V - Vᵀ. Each eigenvalue of the Hermitian form appears
// twice, so signature and nullity are halved.

#include <optional>
#include <string>
#include <vector>

#include "sigforge/algebraic.hpp"
#include "sigforge/matrix.hpp"

namespace sigforge {

enum class Parity {
    Classical,   // det(V - Vᵀ) = ±1
    HighDimSym,  // det(V + Vᵀ) = ±1
};

std::string to_string(Parity p);
Parity parse_parity(std::string_view text);

class SeifertMatrix {
public:
    // Throws ParityViolation when the determinant condition fails.
    SeifertMatrix(IntMatrix v, Parity parity);

    const IntMatrix& matrix() const { return v_; }
    Parity parity() const { return parity_; }
    std::size_t dimension() const { return v_.rows(); }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    IntMatrix v_;
    Parity parity_;
};

inline SeifertMatrix validate_seifert(const IntMatrix& v, Parity parity) { return SeifertMatrix(v, parity); }

// det(V - Vᵀ) for Classical, det(V + Vᵀ) for HighDimSym.
Integer parity_determinant(const IntMatrix& v, Parity parity);

struct AlexanderPolynomial {
    IntPolynomial raw;         // det(V - tVᵀ) or det(tV + Vᵀ)
    IntPolynomial normalized;  // t-powers stripped, positive constant term
};

AlexanderPolynomial alexander_polynomial(const SeifertMatrix& k);

RatMatrix hermitian_realification(const SeifertMatrix& k, const Rational& c);
// Congruent to hermitian_realification at every c in (-1, 1), with entries
// polynomial in c (second block row/column rescaled by 1+c or 1-c).
PolyMatrix polynomial_realification(const SeifertMatrix& k);

struct PointSignature {
    long signature = 0;
    std::size_t nullity = 0;  // nullity of the Hermitian form
};

PointSignature signature_detail_at_rational(const SeifertMatrix& k, const Rational& c);
PointSignature signature_detail_at_algebraic(const SeifertMatrix& k, const AlgebraicReal& c);
long signature_at_rational(const SeifertMatrix& k, const Rational& c);
long signature_at_algebraic(const SeifertMatrix& k, const AlgebraicReal& c);

struct SignatureStepFunction {
    std::vector<AlgebraicReal> breakpoints;
    std::vector<long> interval_values;  // breakpoints.size() + 1 entries, left to right
    std::vector<long> point_values;     // one per breakpoint
    std::vector<Rational> samples;      // the rational used for each interval value

    // Value at a rational, or at an algebraic point (exact comparison).
    long value_at(const Rational& c) const;
    long value_at(const AlgebraicReal& c) const;
    // Index of the breakpoint equal to c, if any.
    std::optional<std::size_t> breakpoint_index(const AlgebraicReal& c) const;
};

SignatureStepFunction signature_step_function(const SeifertMatrix& k);

HalfInteger averaged_signature(const SeifertMatrix& k, const Rational& c);
HalfInteger averaged_signature(const SeifertMatrix& k, const AlgebraicReal& c);
HalfInteger averaged_signature(const SignatureStepFunction& f, const AlgebraicReal& c);

SeifertMatrix direct_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix negate(const SeifertMatrix& k);

struct MetabolizerCertificate {
    IntMatrix rows;  // g x 2g
};

// Certificate spanned by the coordinate vectors e_i for i in `coordinates`.
MetabolizerCertificate coordinate_certificate(std::size_t dimension, const std::vector<std::size_t>& coordinates);

bool verify_metabolizer(const SeifertMatrix& k, const MetabolizerCertificate& cert);

// For every irreducible factor of the Alexander polynomial, the point values at
// that factor's unit roots share one parity.
bool galois_parity_property(const SeifertMatrix& k);
bool galois_parity_property(const SeifertMatrix& k, const SignatureStepFunction& f);

}  // namespace sigforge
