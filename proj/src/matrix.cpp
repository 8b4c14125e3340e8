#include "sigforge/matrix.hpp"

#include <algorithm>
#include <utility>

#include "sigforge/parallel.hpp"

namespace sigforge {

RatMatrix to_rational(const IntMatrix& m) {
    return m.map([](const Integer& v) { return Rational(v); });
}

Integer det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    IntMatrix a = m;
    Integer prev = 1;
    int flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return Integer(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            ++flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer d = a(n - 1, n - 1);
    return flips % 2 ? Integer(-d) : d;
}

namespace {

// Rows scaled by the lcm of their denominators; returns the product of scales.
IntMatrix clear_row_denominators(const RatMatrix& m, Integer& scale) {
    IntMatrix out(m.rows(), m.cols());
    scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        scale *= l;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(l);
            out(i, j) = v.get_num();
        }
    }
    return out;
}

// Positive common multiple of all entries' denominators.
IntMatrix clear_denominators(const RatMatrix& m) {
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(l);
            out(i, j) = v.get_num();
        }
    return out;
}

}  // namespace

Rational det_exact(const RatMatrix& m) {
    Integer scale;
    IntMatrix scaled = clear_row_denominators(m, scale);
    Rational d(det_exact(scaled), scale);
    d.canonicalize();
    return d;
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
    if (!m.is_square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> xs(n + 1);
    std::vector<Rational> ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix shifted = -m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += static_cast<long>(k);
        xs[k] = static_cast<long>(k);
        ys[k] = det_exact(shifted);
    }
    RatPolynomial p = interpolate(xs, ys);
    std::vector<Integer> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_num());  // integral: monic integer matrix polynomial
    return IntPolynomial(std::move(coeffs));
}

RatPolynomial char_poly_exact(const RatMatrix& m) {
    if (!m.is_square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> xs(n + 1);
    std::vector<Rational> ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        RatMatrix shifted = -m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += static_cast<long>(k);
        xs[k] = static_cast<long>(k);
        ys[k] = det_exact(shifted);
    }
    return interpolate(xs, ys);
}

Inertia inertia_from_signs(const std::vector<int>& coefficient_signs) {
    if (coefficient_signs.empty()) throw PreconditionError("inertia of an empty coefficient list");
    const std::size_t n = coefficient_signs.size() - 1;
    Inertia in;
    std::size_t k = 0;
    while (k < n && coefficient_signs[k] == 0) ++k;
    in.n_zero = k;
    int last = 0;
    for (; k <= n; ++k) {
        int s = coefficient_signs[k];
        if (s == 0) continue;
        if (last != 0 && s != last) ++in.n_plus;
        last = s;
    }
    in.n_minus = n - in.n_zero - in.n_plus;
    return in;
}

Inertia inertia_rational(const IntMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionError("inertia of a non-symmetric matrix");
    IntPolynomial p = char_poly_exact(m);
    std::vector<int> signs;
    signs.reserve(m.rows() + 1);
    for (std::size_t k = 0; k <= m.rows(); ++k) signs.push_back(sign(p[k]));
    return inertia_from_signs(signs);
}

Inertia inertia_rational(const RatMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionError("inertia of a non-symmetric matrix");
    // positive scaling preserves inertia
    return inertia_rational(clear_denominators(m));
}

IntMatrix evaluate(const PolyMatrix& m, const Integer& c) {
    return m.map([&](const IntPolynomial& p) { return p.eval(c); });
}

RatMatrix evaluate(const PolyMatrix& m, const Rational& c) {
    return m.map([&](const IntPolynomial& p) { return p.eval(c); });
}

SymbolicInertia::SymbolicInertia(const PolyMatrix& m) : dimension_(m.rows()) {
    if (!m.is_symmetric()) throw PreconditionError("symbolic inertia of a non-symmetric matrix");
    const std::size_t n = dimension_;
    long entry_degree = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entry_degree = std::max(entry_degree, m(i, j).degree());
    // coefficient of x^k has degree at most (n - k) * entry_degree in c
    const std::size_t points = n * static_cast<std::size_t>(entry_degree) + 1;
    std::vector<IntPolynomial> samples(points);
    parallel_for(points, [&](std::size_t j) { samples[j] = char_poly_exact(evaluate(m, Integer(static_cast<long>(j)))); });

    std::vector<Rational> cs(points);
    for (std::size_t j = 0; j < points; ++j) cs[j] = static_cast<long>(j);
    coefficients_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> ys(points);
        for (std::size_t j = 0; j < points; ++j) ys[j] = samples[j][k];
        RatPolynomial r = interpolate(cs, ys);
        std::vector<Integer> coeffs;
        for (const auto& c : r.coeffs()) {
            if (c.get_den() != 1) throw VerificationFailure("symbolic characteristic polynomial is not integral");
            coeffs.push_back(c.get_num());
        }
        coefficients_[k] = IntPolynomial(std::move(coeffs));
    }
}

Inertia SymbolicInertia::at(const Rational& c) const {
    std::vector<int> signs;
    signs.reserve(coefficients_.size());
    for (const auto& p : coefficients_) signs.push_back(sign(p.eval(c)));
    return inertia_from_signs(signs);
}

Inertia SymbolicInertia::at(const AlgebraicReal& alpha) const {
    if (auto q = alpha.as_rational()) return at(*q);
    std::vector<int> signs;
    signs.reserve(coefficients_.size());
    for (const auto& p : coefficients_) signs.push_back(algebraic_sign(p, alpha));
    return inertia_from_signs(signs);
}

Inertia inertia_at_algebraic(const PolyMatrix& m, const AlgebraicReal& alpha) {
    return SymbolicInertia(m).at(alpha);
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            Rational f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) throw PreconditionError("matrix is singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const Rational scale = 1 / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= scale;
            inv(k, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

}  // namespace

std::vector<Integer> smith_invariant_factors(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t diag = std::min(rows, cols);
    std::vector<Integer> factors(diag, Integer(0));
    for (std::size_t t = 0; t < diag; ++t) {
        bool settled = false;
        while (!settled) {
            // smallest nonzero |entry| in the trailing block goes to (t, t)
            std::size_t bi = rows;
            std::size_t bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return factors;
            swap_rows(a, t, bi);
            swap_cols(a, t, bj);
            const Integer pivot = a(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any offending row into row t and repeat
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % pivot != 0) {
                        for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
                        divisible = false;
                        break;
                    }
            settled = divisible;
        }
        factors[t] = abs(a(t, t));
    }
    return factors;
}

bool is_primitive_sublattice(const IntMatrix& rows) {
    if (rows.rows() == 0) return true;
    if (rank(rows) < rows.rows()) throw PreconditionError("sublattice rows are linearly dependent");
    auto factors = smith_invariant_factors(rows);
    return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

}  // namespace sigforge
