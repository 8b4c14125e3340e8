#pragma once

// Dense univariate polynomials over Integer or Rational, constant term first.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sigforge/errors.hpp"
#include "sigforge/numeric.hpp"

namespace sigforge {

template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
    // c * x^k
    static Polynomial monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    const T& leading() const { return coeffs_.back(); }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += X(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Polynomial(std::move(d));
    }

    // p(x) -> p(k x)
    Polynomial scale_argument(const T& k) const {
        std::vector<T> v = coeffs_;
        T power(1);
        for (auto& c : v) {
            c *= power;
            power *= k;
        }
        return Polynomial(std::move(v));
    }

    Polynomial operator-() const {
        std::vector<T> v = coeffs_;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& k) {
        for (auto& c : coeffs_) c *= k;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& k) { return a *= k; }
    friend Polynomial operator*(const T& k, Polynomial a) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(T(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

// Positive rescaling of a rational polynomial to a primitive integer one;
// the sign of the leading coefficient is preserved.
IntPolynomial primitive_integer(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
Integer content(const IntPolynomial& p);

// Division over Q; divisor must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b over Z; throws PreconditionError when b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);

// Primitive square-free part with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

struct SquareFreeFactor {
    IntPolynomial factor;
    unsigned multiplicity;
};
// Yun decomposition: p = content * prod factor^multiplicity, nonconstant factors only.
std::vector<SquareFreeFactor> square_free_factorization(const IntPolynomial& p);

// Irreducible factors over Z of a square-free primitive polynomial (Kronecker's
// method; intended for the low degrees that appear here).
std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& p);

// Newton interpolation through (xs[i], ys[i]); xs distinct.
RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Leading zero coefficients (powers of t) stripped and sign fixed so that the
// constant term is positive.
IntPolynomial normalize_unit(const IntPolynomial& p);

// Constant-first comma list, e.g. "3,-6,5,-6,3"; zero polynomial is "0".
std::string serialize(const IntPolynomial& p);
IntPolynomial parse_polynomial(std::string_view text);
// Human-readable form in the variable `var`, highest degree first.
std::string pretty(const IntPolynomial& p, const std::string& var = "t");

}  // namespace sigforge
