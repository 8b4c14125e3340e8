#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sigforge/seifert.hpp"

using namespace sigforge;

namespace {

const IntMatrix kTrefoil{{-1, 1}, {0, -1}};
const IntMatrix kFigureEight{{-1, 1}, {0, 1}};

// Pythagorean point with real part near c (u = sqrt((1 - c) / (1 + c))).
Rational u_for(double c) {
    double u = std::sqrt((1 - c) / (1 + c));
    Rational q(static_cast<long>(std::lround(u * 997)), 997);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_SUITE("seifert_core") {

TEST_CASE("parity validation") {
    CHECK_NOTHROW(SeifertMatrix(kTrefoil, Parity::Classical));
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix::identity(2), Parity::Classical), ParityViolation);
    try {
        SeifertMatrix(IntMatrix::identity(2), Parity::Classical);
    } catch (const ParityViolation& e) {
        CHECK(e.determinant() == "0");
    }
    CHECK_NOTHROW(SeifertMatrix(IntMatrix{{0, 1}, {0, 0}}, Parity::HighDimSym));
    CHECK_THROWS_AS(SeifertMatrix(kTrefoil, Parity::HighDimSym), ParityViolation);  // det(V + V^T) = 3
    CHECK(parity_determinant(kTrefoil, Parity::HighDimSym) == 3);
    CHECK(parse_parity("highdim") == Parity::HighDimSym);
    CHECK_THROWS_AS(parse_parity("other"), ParseError);
}

TEST_CASE("Alexander polynomials") {
    auto t = alexander_polynomial(SeifertMatrix(kTrefoil, Parity::Classical));
    CHECK(t.normalized == IntPolynomial{1, -1, 1});
    auto f8 = alexander_polynomial(SeifertMatrix(kFigureEight, Parity::Classical));
    CHECK(f8.normalized == IntPolynomial{1, -3, 1});
    auto u = alexander_polynomial(SeifertMatrix(IntMatrix{{0, 1}, {0, 0}}, Parity::Classical));
    CHECK(u.normalized == IntPolynomial{1});
}

TEST_CASE("trefoil step function") {
    SeifertMatrix k(kTrefoil, Parity::Classical);
    CHECK(signature_at_rational(k, 0) == -2);
    CHECK(signature_at_rational(k, Rational(1, 2)) == -1);
    CHECK(signature_detail_at_rational(k, Rational(1, 2)).nullity == 1);
    CHECK(signature_at_rational(k, Rational(3, 4)) == 0);
    auto f = signature_step_function(k);
    REQUIRE(f.breakpoints.size() == 1);
    CHECK(f.breakpoints[0].as_rational() == Rational(1, 2));
    CHECK(f.interval_values == std::vector<long>{-2, 0});
    CHECK(f.point_values == std::vector<long>{-1});
    CHECK(f.value_at(Rational(-9, 10)) == -2);
    CHECK(f.value_at(Rational(1, 2)) == -1);
    CHECK(averaged_signature(k, Rational(1, 2)).str() == "-1");
    CHECK(averaged_signature(k, Rational(0)).str() == "-2");
    CHECK_THROWS_AS(signature_at_rational(k, 1), PreconditionError);
    CHECK_THROWS_AS(signature_at_rational(k, -1), PreconditionError);
}

TEST_CASE("figure eight and the unknot have vanishing signature") {
    SeifertMatrix f8(kFigureEight, Parity::Classical);
    auto f = signature_step_function(f8);
    CHECK(f.breakpoints.empty());
    CHECK(f.interval_values == std::vector<long>{0});
    SeifertMatrix unknot(IntMatrix{{0, 1}, {0, 0}}, Parity::Classical);
    CHECK(signature_at_rational(unknot, Rational(1, 3)) == 0);
}

TEST_CASE("realification agrees with the Hermitian definition at rational points") {
    SeifertMatrix k(kTrefoil, Parity::Classical);
    for (Rational u : {Rational(1, 3), Rational(1), Rational(2), Rational(5, 2)}) {
        auto w = oracle::pythagorean(u);
        CHECK(signature_at_rational(k, w.re) == oracle::hermitian_counts(k, w).signature());
    }
}

TEST_CASE("direct sums and negation") {
    SeifertMatrix k(kTrefoil, Parity::Classical);
    SeifertMatrix kk = direct_sum(k, k);
    CHECK(signature_at_rational(kk, 0) == -4);
    CHECK(signature_at_rational(negate(k), 0) == 2);
    CHECK(signature_at_rational(direct_sum(k, negate(k)), 0) == 0);
    CHECK_THROWS_AS(direct_sum(k, SeifertMatrix(IntMatrix{{0, 1}, {0, 0}}, Parity::HighDimSym)), PreconditionError);
}

TEST_CASE("metabolizer verification") {
    SeifertMatrix k(kTrefoil, Parity::Classical);
    SeifertMatrix m = direct_sum(k, negate(k));
    // V ⊕ -V is metabolic with the diagonal basis e_i + e_{n+i}.
    IntMatrix basis{{1, 0, 1, 0}, {0, 1, 0, 1}};
    CHECK(verify_metabolizer(m, MetabolizerCertificate{basis}));
    CHECK_FALSE(verify_metabolizer(m, MetabolizerCertificate{IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}}));
    CHECK_FALSE(verify_metabolizer(m, MetabolizerCertificate{IntMatrix{{2, 0, 2, 0}, {0, 1, 0, 1}}}));
    CHECK_FALSE(verify_metabolizer(m, MetabolizerCertificate{IntMatrix{{1, 0, 1, 0}, {2, 0, 2, 0}}}));
    CHECK_THROWS_AS(verify_metabolizer(m, MetabolizerCertificate{IntMatrix{{1, 0, 1, 0}}}), PreconditionError);
    CHECK(coordinate_certificate(4, {0, 1}).rows == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
}

TEST_CASE("high-dimensional signature") {
    // V = [[0, 1], [0, 0]] + a symmetric perturbation keeps det(V + V^T) = -1
    SeifertMatrix k(IntMatrix{{1, 1}, {0, 0}}, Parity::HighDimSym);
    auto f = signature_step_function(k);
    for (Rational u : {Rational(1, 4), Rational(2, 3), Rational(3, 2)}) {
        auto w = oracle::pythagorean(u);
        CHECK(signature_at_rational(k, w.re) == oracle::hermitian_counts(k, w).signature());
        CHECK(f.value_at(w.re) == signature_at_rational(k, w.re));
    }
}

TEST_CASE("property: exact signature matches the Hermitian oracle on random matrices") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        Parity parity = trial % 2 ? Parity::HighDimSym : Parity::Classical;
        SeifertMatrix k = oracle::random_seifert(1 + static_cast<std::size_t>(trial % 3), parity, rng);
        Rational u = u_for(std::uniform_real_distribution<double>(-0.95, 0.95)(rng));
        auto w = oracle::pythagorean(u);
        auto ref = oracle::hermitian_counts(k, w);
        PointSignature exact = signature_detail_at_rational(k, w.re);
        CHECK(exact.signature == ref.signature());
        CHECK(exact.nullity == ref.zero);
    }
}

TEST_CASE("property: invariance under unimodular congruence") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        Parity parity = trial % 2 ? Parity::HighDimSym : Parity::Classical;
        SeifertMatrix k = oracle::random_seifert(1 + static_cast<std::size_t>(trial % 3), parity, rng);
        IntMatrix p = oracle::random_unimodular(k.dimension(), rng);
        SeifertMatrix kp(p * k.matrix() * p.transpose(), parity);
        CHECK(alexander_polynomial(kp).normalized == alexander_polynomial(k).normalized);
        Rational c = oracle::random_open_unit(rng);
        CHECK(signature_at_rational(kp, c) == signature_at_rational(k, c));
    }
}

TEST_CASE("property: Alexander polynomial symmetry and step function consistency") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 40; ++trial) {
        Parity parity = trial % 2 ? Parity::HighDimSym : Parity::Classical;
        std::size_t g = 1 + static_cast<std::size_t>(trial % 3);
        SeifertMatrix k = oracle::random_seifert(g, parity, rng);
        IntPolynomial d = alexander_polynomial(k).normalized;
        CHECK(is_palindromic(d));
        Integer at_one = d.eval(Integer(1));
        CHECK(abs(at_one) == 1);
        auto f = signature_step_function(k);
        CHECK(f.interval_values.size() == f.breakpoints.size() + 1);
        for (std::size_t i = 0; i < f.samples.size(); ++i)
            CHECK(f.interval_values[i] == signature_at_rational(k, f.samples[i]));
        // a one-sided limit differs from the point value by at most the nullity
        for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
            PointSignature ps = signature_detail_at_algebraic(k, f.breakpoints[i]);
            CHECK(ps.signature == f.point_values[i]);
            CHECK(ps.nullity > 0);
            CHECK(std::abs(ps.signature - f.interval_values[i]) <= static_cast<long>(ps.nullity));
            CHECK(std::abs(ps.signature - f.interval_values[i + 1]) <= static_cast<long>(ps.nullity));
        }
        CHECK(galois_parity_property(k, f));
        std::size_t half = k.dimension() / 2;
        for (long v : f.interval_values) CHECK(std::abs(v) <= static_cast<long>(2 * half));
    }
}

TEST_CASE("property: additivity of signature and averaged signature") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        SeifertMatrix a = oracle::random_seifert(1 + static_cast<std::size_t>(trial % 2), Parity::Classical, rng);
        SeifertMatrix b = oracle::random_seifert(1, Parity::Classical, rng);
        Rational c = oracle::random_open_unit(rng);
        CHECK(signature_at_rational(direct_sum(a, b), c) == signature_at_rational(a, c) + signature_at_rational(b, c));
        CHECK(averaged_signature(direct_sum(a, negate(a)), c).twice == 0);
        auto f = signature_step_function(a);
        for (const auto& bp : f.breakpoints) CHECK(averaged_signature(direct_sum(a, negate(a)), bp).twice == 0);
    }
}

}
