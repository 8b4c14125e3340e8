#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sigforge/matrix.hpp"

using namespace sigforge;

namespace {

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> e(-range, range);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    return m;
}

RatMatrix random_symmetric(std::size_t n, std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> e(-range, range), den(1, 4);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational x(e(rng), den(rng));
            x.canonicalize();
            m(i, j) = m(j, i) = x;
        }
    return m;
}

}  // namespace

TEST_SUITE("matrix_exact") {

TEST_CASE("determinants of small examples") {
    CHECK(det_exact(IntMatrix{{-1, 1}, {0, -1}}) == 1);
    CHECK(det_exact(IntMatrix{{0, 1}, {-1, 0}}) == 1);
    CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(det_exact(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
    // V1 - V1^T for the g = 1 peak summand
    IntMatrix v{{0, 0, 1, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 1, 0, 1}};
    CHECK(det_exact(IntMatrix(v - v.transpose())) == 1);
    RatMatrix r(2, 2);
    r(0, 0) = Rational(1, 2);
    r(0, 1) = 3;
    r(1, 0) = Rational(1, 3);
    r(1, 1) = 4;
    CHECK(det_exact(r) == 1);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), PreconditionError);
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly_exact(IntMatrix{{2, 1}, {1, 2}}) == IntPolynomial{3, -4, 1});
    CHECK(char_poly_exact(IntMatrix{{0, -3}, {-1, -6}}) == IntPolynomial{-3, 6, 1});
}

TEST_CASE("inertia from coefficient signs") {
    // x^2 - 1: one positive, one negative
    CHECK(inertia_from_signs({-1, 0, 1}) == Inertia{1, 0, 1});
    // x^3 - x^2 = x^2 (x - 1)
    CHECK(inertia_from_signs({0, 0, -1, 1}) == Inertia{1, 2, 0});
}

TEST_CASE("inertia of symmetric matrices") {
    CHECK(inertia_rational(IntMatrix{{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
    CHECK(inertia_rational(IntMatrix{{-2, 1}, {1, -2}}) == Inertia{0, 0, 2});
    CHECK(inertia_rational(IntMatrix{{1, 1}, {1, 1}}) == Inertia{1, 1, 0});
    CHECK(inertia_rational(IntMatrix(3, 3)) == Inertia{0, 3, 0});
    CHECK_THROWS_AS(inertia_rational(IntMatrix{{0, 1}, {0, 0}}), PreconditionError);
}

TEST_CASE("inverse, rank and Smith form") {
    IntMatrix x{{3, 1}, {1, 0}};
    RatMatrix inv = inverse(to_rational(x));
    CHECK(inv * to_rational(x) == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), PreconditionError);
    CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(smith_invariant_factors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Integer>{2, 6, 12});
    CHECK(is_primitive_sublattice(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK_FALSE(is_primitive_sublattice(IntMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(is_primitive_sublattice(IntMatrix{{1, 1, 0}, {0, 1, 1}}));
    CHECK_THROWS_AS(is_primitive_sublattice(IntMatrix{{1, 1, 0}, {2, 2, 0}}), PreconditionError);
}

TEST_CASE("symbolic inertia along a parameter") {
    // M(c) = [[c, 1], [1, -c]]: indefinite for all c
    PolyMatrix m(2, 2);
    m(0, 0) = IntPolynomial{0, 1};
    m(0, 1) = m(1, 0) = IntPolynomial{1};
    m(1, 1) = IntPolynomial{0, -1};
    SymbolicInertia s(m);
    CHECK(s.at(Rational(3, 7)) == Inertia{1, 0, 1});
    // N(c) = [[c^2 - 2, 0], [0, 1]] vanishes at sqrt 2
    PolyMatrix n(2, 2);
    n(0, 0) = IntPolynomial{-2, 0, 1};
    n(1, 1) = IntPolynomial{1};
    SymbolicInertia t(n);
    AlgebraicReal sqrt2(IntPolynomial{-2, 0, 1}, 1, 2);
    CHECK(t.at(sqrt2) == Inertia{1, 1, 0});
    CHECK(t.at(Rational(1)) == Inertia{1, 0, 1});
    CHECK(inertia_at_algebraic(n, sqrt2) == Inertia{1, 1, 0});
}

TEST_CASE("property: Bareiss agrees with the permutation expansion") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        IntMatrix m = random_matrix(n, rng, trial % 3 == 0 ? 1 : 5);
        CHECK(det_exact(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("property: inertia agrees with congruence diagonalization") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        RatMatrix m = random_symmetric(n, rng, trial % 4 == 0 ? 1 : 3);
        if (trial % 5 == 0 && n > 1) {  // force a rank deficiency
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);
            for (std::size_t j = 0; j < n; ++j) m(j, n - 1) = m(n - 1, j);
            m(n - 1, n - 1) = m(0, 0);
        }
        Inertia exact = inertia_rational(m);
        oracle::Counts ref = oracle::congruence_inertia(m);
        CHECK(exact.n_plus == ref.plus);
        CHECK(exact.n_zero == ref.zero);
        CHECK(exact.n_minus == ref.minus);
    }
}

TEST_CASE("property: Smith invariants multiply to |det|") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix m = random_matrix(n, rng, 6);
        auto d = smith_invariant_factors(m);
        Integer prod = 1;
        for (const auto& x : d) prod *= x;
        CHECK(prod == abs(det_exact(m)));
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
}

TEST_CASE("property: characteristic polynomial matches det(xI - M)") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix m = random_matrix(n, rng, 4);
        IntPolynomial cp = char_poly_exact(m);
        for (long x : {-3L, 5L, 11L}) {
            IntMatrix shifted = Integer(x) * IntMatrix::identity(n) - m;
            CHECK(cp.eval(Integer(x)) == oracle::leibniz_det(shifted));
        }
    }
}

}
