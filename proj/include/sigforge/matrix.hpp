#pragma once

// Exact dense matrices: fraction-free determinants, characteristic polynomials,
// inertia of symmetric matrices over Q and at real algebraic points, and Smith
// normal form.

#include <string>
#include <vector>

#include "sigforge/algebraic.hpp"
#include "sigforge/polynomial.hpp"

namespace sigforge {

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& v : a.data_) v = -v;
        return a;
    }
    friend Matrix operator*(const T& k, Matrix a) {
        for (auto& v : a.data_) v = k * v;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Copies `block` with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
        if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw PreconditionError("block out of range");
        for (std::size_t i = 0; i < block.rows_; ++i)
            for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
    }
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("block out of range");
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    // Principal submatrix on the given (sorted) index set.
    Matrix principal(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(idx[i], idx[j]);
        return m;
    }

    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    static T one() {
        if constexpr (requires { T::constant(Integer(1)); }) {
            return T::constant(Integer(1));
        } else {
            return T(1);
        }
    }

    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
// Entries are integer polynomials in a single real parameter.
using PolyMatrix = Matrix<IntPolynomial>;

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

RatMatrix to_rational(const IntMatrix& m);

// Bareiss fraction-free elimination with row pivoting.
Integer det_exact(const IntMatrix& m);
Rational det_exact(const RatMatrix& m);

// det(xI - M), monic, by interpolation at dimension+1 integer points.
RatPolynomial char_poly_exact(const RatMatrix& m);
IntPolynomial char_poly_exact(const IntMatrix& m);

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;

    long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
    std::size_t dimension() const { return n_plus + n_zero + n_minus; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Inertia from the signs of a real-rooted polynomial's coefficients: zero
// count is the number of trailing zeros, positive count is Descartes' sign
// variation count of the rest.
Inertia inertia_from_signs(const std::vector<int>& coefficient_signs);

Inertia inertia_rational(const RatMatrix& m);
Inertia inertia_rational(const IntMatrix& m);

// Characteristic polynomial of a symmetric polynomial matrix M(c), kept
// symbolic in c, so inertia at many points costs only sign evaluations.
class SymbolicInertia {
public:
    explicit SymbolicInertia(const PolyMatrix& m);

    Inertia at(const AlgebraicReal& alpha) const;
    Inertia at(const Rational& c) const;

    std::size_t dimension() const { return dimension_; }
    // coefficient of x^k in det(xI - M(c)), as a polynomial in c
    const std::vector<IntPolynomial>& coefficients() const { return coefficients_; }

private:
    std::size_t dimension_;
    std::vector<IntPolynomial> coefficients_;
};

Inertia inertia_at_algebraic(const PolyMatrix& m, const AlgebraicReal& alpha);

IntMatrix evaluate(const PolyMatrix& m, const Integer& c);
RatMatrix evaluate(const PolyMatrix& m, const Rational& c);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Gauss-Jordan; throws PreconditionError when singular.
RatMatrix inverse(const RatMatrix& m);

// Diagonal invariant factors d_1 | d_2 | ... (nonnegative), length min(rows, cols).
std::vector<Integer> smith_invariant_factors(const IntMatrix& m);

// Rows span a direct summand of Z^cols. Throws PreconditionError when the rows
// are linearly dependent.
bool is_primitive_sublattice(const IntMatrix& rows);

}  // namespace sigforge
