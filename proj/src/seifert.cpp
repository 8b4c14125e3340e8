#include "sigforge/seifert.hpp"

#include <algorithm>
#include <numeric>

#include "sigforge/parallel.hpp"

namespace sigforge {

std::string to_string(Parity p) { return p == Parity::Classical ? "classical" : "highdim"; }

Parity parse_parity(std::string_view text) {
    if (text == "classical") return Parity::Classical;
    if (text == "highdim") return Parity::HighDimSym;
    throw ParseError("unknown parity '" + std::string(text) + "' (expected classical|highdim)");
}

Integer parity_determinant(const IntMatrix& v, Parity parity) {
    IntMatrix vt = v.transpose();
    return det_exact(parity == Parity::Classical ? IntMatrix(v - vt) : IntMatrix(v + vt));
}

SeifertMatrix::SeifertMatrix(IntMatrix v, Parity parity) : v_(std::move(v)), parity_(parity) {
    if (!v_.is_square() || v_.rows() == 0) throw PreconditionError("Seifert matrix must be square and nonempty");
    Integer d = parity_determinant(v_, parity_);
    if (abs(d) != 1) {
        throw ParityViolation(std::string("ParityViolation: det(V ") + (parity_ == Parity::Classical ? "-" : "+") +
                                  " V^T) = " + d.get_str() + ", expected ±1",
                              d.get_str());
    }
    if (v_.rows() % 2 != 0) throw ParityViolation("ParityViolation: odd dimension", d.get_str());
}

// ---------------------------------------------------------------------------
// Alexander polynomial

AlexanderPolynomial alexander_polynomial(const SeifertMatrix& k) {
    const IntMatrix& v = k.matrix();
    const IntMatrix vt = v.transpose();
    const std::size_t n = v.rows();
    std::vector<Rational> ts(n + 1);
    std::vector<Rational> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Integer t = static_cast<long>(i);
        IntMatrix m = k.parity() == Parity::Classical ? IntMatrix(v - t * vt) : IntMatrix(t * v + vt);
        ts[i] = t;
        values[i] = det_exact(m);
    }
    RatPolynomial exact = interpolate(ts, values);
    std::vector<Integer> coeffs;
    for (const auto& c : exact.coeffs()) {
        if (c.get_den() != 1) throw VerificationFailure("Alexander polynomial interpolation is not integral");
        coeffs.push_back(c.get_num());
    }
    IntPolynomial raw(std::move(coeffs));
    return {raw, normalize_unit(raw)};
}

// ---------------------------------------------------------------------------
// Realification

namespace {

void check_open_unit(const Rational& c) {
    if (!(c > -1 && c < 1)) throw PreconditionError("evaluation point must lie in (-1, 1), got " + to_string(c));
}

RatMatrix realify(const IntMatrix& v, Parity parity, const Rational& c) {
    const std::size_t n = v.rows();
    RatMatrix s = to_rational(v + v.transpose());
    RatMatrix kk = to_rational(v - v.transpose());
    RatMatrix out(2 * n, 2 * n);
    if (parity == Parity::Classical) {
        out.set_block(0, 0, Rational(1 - c) * s);
        out.set_block(n, n, Rational(1 / (1 + c)) * s);
    } else {
        out.set_block(0, 0, s);
        out.set_block(n, n, Rational((1 + c) / (1 - c)) * s);
    }
    out.set_block(0, n, -kk);
    out.set_block(n, 0, kk);
    return out;
}

PolyMatrix realify_polynomial(const IntMatrix& v, Parity parity) {
    const std::size_t n = v.rows();
    const IntMatrix s = v + v.transpose();
    const IntMatrix kk = v - v.transpose();
    const IntPolynomial one_minus_c{1, -1};
    const IntPolynomial one_plus_c{1, 1};
    auto scaled = [](const IntMatrix& m, const IntPolynomial& p) {
        return m.map([&](const Integer& x) { return p * x; });
    };
    PolyMatrix out(2 * n, 2 * n);
    if (parity == Parity::Classical) {
        out.set_block(0, 0, scaled(s, one_minus_c));
        out.set_block(0, n, scaled(-kk, one_plus_c));
        out.set_block(n, 0, scaled(kk, one_plus_c));
        out.set_block(n, n, scaled(s, one_plus_c));
    } else {
        out.set_block(0, 0, scaled(s, IntPolynomial{1}));
        out.set_block(0, n, scaled(-kk, one_minus_c));
        out.set_block(n, 0, scaled(kk, one_minus_c));
        out.set_block(n, n, scaled(s, one_minus_c * one_plus_c));
    }
    return out;
}

// Index sets of the connected components of the support graph of V + Vᵀ and
// V - Vᵀ. Simultaneous permutation is a congruence, so signatures add over them.
std::vector<std::vector<std::size_t>> components(const IntMatrix& v) {
    const std::size_t n = v.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v(i, j) != 0) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return groups;
}

PointSignature halve(const Inertia& in) {
    if (in.signature() % 2 != 0 || in.n_zero % 2 != 0) {
        throw VerificationFailure("realification inertia is not doubled");
    }
    return {in.signature() / 2, in.n_zero / 2};
}

// Per-component symbolic forms, built on first use.
class ComponentForms {
public:
    ComponentForms(const IntMatrix& v, Parity parity) : v_(v), parity_(parity), groups_(components(v)) {}

    PointSignature at(const Rational& c) const {
        PointSignature total;
        for (const auto& idx : groups_) {
            PointSignature part = halve(inertia_rational(realify(v_.principal(idx), parity_, c)));
            total.signature += part.signature;
            total.nullity += part.nullity;
        }
        return total;
    }

    PointSignature at(const AlgebraicReal& c) {
        if (auto q = c.as_rational()) return at(*q);
        if (symbolic_.empty()) {
            symbolic_.reserve(groups_.size());
            for (const auto& idx : groups_) symbolic_.emplace_back(realify_polynomial(v_.principal(idx), parity_));
        }
        PointSignature total;
        for (const auto& form : symbolic_) {
            PointSignature part = halve(form.at(c));
            total.signature += part.signature;
            total.nullity += part.nullity;
        }
        return total;
    }

private:
    const IntMatrix& v_;
    Parity parity_;
    std::vector<std::vector<std::size_t>> groups_;
    std::vector<SymbolicInertia> symbolic_;
};

void check_open_unit(const AlgebraicReal& c) {
    if (c.compare(Rational(-1)) != std::strong_ordering::greater || c.compare(Rational(1)) != std::strong_ordering::less) {
        throw PreconditionError("evaluation point must lie in (-1, 1)");
    }
}

}  // namespace

RatMatrix hermitian_realification(const SeifertMatrix& k, const Rational& c) {
    check_open_unit(c);
    return realify(k.matrix(), k.parity(), c);
}

PolyMatrix polynomial_realification(const SeifertMatrix& k) { return realify_polynomial(k.matrix(), k.parity()); }

PointSignature signature_detail_at_rational(const SeifertMatrix& k, const Rational& c) {
    check_open_unit(c);
    return ComponentForms(k.matrix(), k.parity()).at(c);
}

PointSignature signature_detail_at_algebraic(const SeifertMatrix& k, const AlgebraicReal& c) {
    check_open_unit(c);
    ComponentForms forms(k.matrix(), k.parity());
    return forms.at(c);
}

long signature_at_rational(const SeifertMatrix& k, const Rational& c) {
    return signature_detail_at_rational(k, c).signature;
}

long signature_at_algebraic(const SeifertMatrix& k, const AlgebraicReal& c) {
    return signature_detail_at_algebraic(k, c).signature;
}

// ---------------------------------------------------------------------------
// Step function

std::optional<std::size_t> SignatureStepFunction::breakpoint_index(const AlgebraicReal& c) const {
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        auto cmp = c <=> breakpoints[i];
        if (cmp == std::strong_ordering::equal) return i;
        if (cmp == std::strong_ordering::less) return std::nullopt;
    }
    return std::nullopt;
}

long SignatureStepFunction::value_at(const AlgebraicReal& c) const {
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        auto cmp = c <=> breakpoints[i];
        if (cmp == std::strong_ordering::equal) return point_values[i];
        if (cmp == std::strong_ordering::less) return interval_values[i];
    }
    return interval_values.back();
}

long SignatureStepFunction::value_at(const Rational& c) const { return value_at(AlgebraicReal::from_rational(c)); }

SignatureStepFunction signature_step_function(const SeifertMatrix& k) {
    SignatureStepFunction f;
    IntPolynomial delta = alexander_polynomial(k).normalized;
    if (delta.degree() >= 2) f.breakpoints = unit_root_real_parts(delta);
    const std::size_t nb = f.breakpoints.size();

    f.samples.resize(nb + 1);
    if (nb == 0) {
        f.samples[0] = 0;
    } else {
        f.samples[0] = rational_between(Rational(-1), f.breakpoints.front());
        for (std::size_t i = 1; i < nb; ++i) f.samples[i] = rational_between(f.breakpoints[i - 1], f.breakpoints[i]);
        f.samples[nb] = rational_between(f.breakpoints.back(), Rational(1));
    }

    ComponentForms forms(k.matrix(), k.parity());
    f.interval_values.resize(nb + 1);
    parallel_for(nb + 1, [&](std::size_t i) { f.interval_values[i] = forms.at(f.samples[i]).signature; });
    f.point_values.resize(nb);
    for (std::size_t i = 0; i < nb; ++i) f.point_values[i] = forms.at(f.breakpoints[i]).signature;
    return f;
}

HalfInteger averaged_signature(const SignatureStepFunction& f, const AlgebraicReal& c) {
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        auto cmp = c <=> f.breakpoints[i];
        if (cmp == std::strong_ordering::equal) return HalfInteger::average(f.interval_values[i], f.interval_values[i + 1]);
        if (cmp == std::strong_ordering::less) return HalfInteger::average(f.interval_values[i], f.interval_values[i]);
    }
    return HalfInteger::average(f.interval_values.back(), f.interval_values.back());
}

HalfInteger averaged_signature(const SeifertMatrix& k, const AlgebraicReal& c) {
    check_open_unit(c);
    return averaged_signature(signature_step_function(k), c);
}

HalfInteger averaged_signature(const SeifertMatrix& k, const Rational& c) {
    check_open_unit(c);
    return averaged_signature(k, AlgebraicReal::from_rational(c));
}

// ---------------------------------------------------------------------------
// Algebra of Seifert matrices

SeifertMatrix direct_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    if (a.parity() != b.parity()) throw PreconditionError("direct sum of Seifert matrices with different parity");
    return SeifertMatrix(direct_sum(a.matrix(), b.matrix()), a.parity());
}

SeifertMatrix negate(const SeifertMatrix& k) { return SeifertMatrix(-k.matrix(), k.parity()); }

MetabolizerCertificate coordinate_certificate(std::size_t dimension, const std::vector<std::size_t>& coordinates) {
    IntMatrix rows(coordinates.size(), dimension);
    for (std::size_t r = 0; r < coordinates.size(); ++r) {
        if (coordinates[r] >= dimension) throw PreconditionError("certificate coordinate out of range");
        rows(r, coordinates[r]) = 1;
    }
    return {rows};
}

bool verify_metabolizer(const SeifertMatrix& k, const MetabolizerCertificate& cert) {
    const std::size_t n = k.dimension();
    if (cert.rows.cols() != n || cert.rows.rows() * 2 != n) {
        throw PreconditionError("metabolizer certificate must be (n/2) x n for an n x n Seifert matrix");
    }
    IntMatrix form = cert.rows * k.matrix() * cert.rows.transpose();
    for (std::size_t i = 0; i < form.rows(); ++i)
        for (std::size_t j = 0; j < form.cols(); ++j)
            if (form(i, j) != 0) return false;
    try {
        return is_primitive_sublattice(cert.rows);
    } catch (const PreconditionError&) {
        return false;  // dependent rows span less than a half-rank summand
    }
}

bool galois_parity_property(const SeifertMatrix& k, const SignatureStepFunction& f) {
    IntPolynomial delta = alexander_polynomial(k).normalized;
    if (delta.degree() < 2) return true;
    IntPolynomial q = square_free_part(compress_palindrome(delta));
    for (const auto& factor : irreducible_factors(q)) {
        IntPolynomial in_c = factor.scale_argument(Integer(2));
        std::optional<long> parity;
        for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
            if (algebraic_sign(in_c, f.breakpoints[i]) != 0) continue;
            long p = ((f.point_values[i] % 2) + 2) % 2;
            if (parity && *parity != p) return false;
            parity = p;
        }
    }
    return true;
}

bool galois_parity_property(const SeifertMatrix& k) { return galois_parity_property(k, signature_step_function(k)); }

}  // namespace sigforge
