#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sigforge/constructors.hpp"

using namespace sigforge;

namespace {

// Smaller root of b x^2 - 2(a+b) x + (4a - 1), halved.
double quadratic_c_star(double a, double b) {
    double p = 2 * (a + b), disc = p * p - 4 * b * (4 * a - 1);
    return (p - std::sqrt(disc)) / (2 * b) / 2;
}

LambdaCoefficients random_lambda(std::size_t g, std::mt19937_64& rng, int range = 4) {
    std::uniform_int_distribution<int> e(-range, range);
    LambdaCoefficients l;
    l.a.resize(g + 1);
    for (std::size_t j = 0; j < g; ++j) l.a[j] = e(rng);
    if (l.a[0] == 0) l.a[0] = 1;
    l.a[g] = 1;
    return l;
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("jump polynomials under the fixed search policy") {
    CHECK(jump_polynomial(0, Rational(1, 10)) == IntPolynomial{3, -6, 5, -6, 3});
    CHECK(jump_polynomial(0, 2) == IntPolynomial{1, -2, 1, -2, 1});
    auto r = jump_search(Rational(1, 2), Rational(1, 20));
    CHECK(r.a == 5);
    CHECK(r.b == 10);
    CHECK(r.delta == IntPolynomial{10, -30, 39, -30, 10});
    CHECK(std::abs(quadratic_c_star(5, 10) - 0.5) < 0.05);
    CHECK_THROWS_AS(jump_polynomial(1, Rational(1, 10)), PreconditionError);
    CHECK_THROWS_AS(jump_polynomial(0, 0), PreconditionError);
}

TEST_CASE("jump polynomial root location against the quadratic formula") {
    auto r = jump_search(0, Rational(1, 10));
    auto roots = unit_root_real_parts(r.delta);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].approx() == doctest::Approx((1 - std::sqrt(4.0 / 3.0)) / 2));
    CHECK(roots[0].approx() == doctest::Approx(quadratic_c_star(0, 3)));
}

TEST_CASE("property: jump invariants over random windows") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Rational r = oracle::random_open_unit(rng, 40);
        Rational eps(1, 5 + static_cast<long>(trial % 40));
        auto j = jump_search(r, eps);
        CHECK(j.quadratic.eval(Integer(2)) == -1);
        Integer disc = 4 * (j.a + j.b) * (j.a + j.b) - 4 * j.b * (4 * j.a - 1);
        CHECK(disc == 4 * ((j.a - j.b) * (j.a - j.b) + j.b));
        CHECK(j.delta.eval(Integer(1)) == -1);
        double c = quadratic_c_star(j.a.get_d(), j.b.get_d());
        CHECK(std::abs(c - r.get_d()) < eps.get_d());
        auto numeric = oracle::numeric_unit_root_real_parts(j.delta);
        REQUIRE(numeric.size() == 1);
        CHECK(numeric[0] == doctest::Approx(c).epsilon(1e-7));
    }
}

TEST_CASE("high-dimensional jump polynomials") {
    auto h = highdim_jump_search(0, Rational(1, 10));
    CHECK(h.c == 6);
    CHECK(h.factor == IntPolynomial{6, -11, 6});
    CHECK(h.d == IntPolynomial{6, -11, 6} * IntPolynomial{3, -6, 5, -6, 3});
    CHECK(h.d.eval(Integer(1)) == -1);
    CHECK(h.d.eval(Integer(-1)) == 529);
    CHECK(h.extra_real_part == Rational(11, 12));
    CHECK(highdim_validate_polynomial(h.d));

    auto h2 = highdim_jump_search(Rational(1, 2), Rational(1, 20));
    CHECK(h2.c == 30);
    CHECK(h2.extra_real_part == Rational(59, 60));
    CHECK(h2.d.eval(Integer(-1)) == 119 * 119);

    // a stricter threshold pushes b up until the extra root clears it
    auto h3 = highdim_jump_search(0, Rational(1, 10), Rational(19, 20));
    CHECK(h3.extra_real_part > Rational(19, 20));
    CHECK_THROWS_AS(highdim_jump_search(0, Rational(1, 10), Rational(1)), PreconditionError);
}

TEST_CASE("high-dimensional polynomial validation") {
    CHECK_FALSE(highdim_validate_polynomial(IntPolynomial{1, -1, 1}));
    CHECK_FALSE(highdim_validate_polynomial(IntPolynomial{1, -1, 1, -1, 1}));
    CHECK_FALSE(highdim_validate_polynomial(IntPolynomial{-1, 1, -1}));  // D(-1) = -3
    CHECK(highdim_validate_polynomial(IntPolynomial{2, -5, 2}));
    CHECK_FALSE(highdim_validate_polynomial(IntPolynomial{6, -11, 6}));  // D(1) = 1 in odd genus
}

TEST_CASE("lambda coefficients") {
    CHECK(lambda_coefficients(IntPolynomial{1, -1, 1}).a == std::vector<Integer>{1, 1});
    CHECK(lambda_coefficients(IntPolynomial{-3, 6, -5, 6, -3}).a == std::vector<Integer>{-3, -6, 1});
    CHECK(lambda_coefficients(IntPolynomial{1, -1, 1, -1, 1}).a == std::vector<Integer>{1, 3, 1});
    CHECK_THROWS_AS(lambda_coefficients(IntPolynomial{1, 1, 1}), PreconditionError);  // delta(1) = 3
    CHECK_THROWS_AS(lambda_coefficients(IntPolynomial{0, 1, -1, 1}), PreconditionError);
}

TEST_CASE("companion matrices") {
    CHECK(companion_matrix({{1, 1}}) == IntMatrix{{1}});
    CHECK(companion_matrix({{1, 3, 1}}) == IntMatrix{{0, 1}, {-1, 3}});
    CHECK(companion_matrix({{-3, -6, 1}}) == IntMatrix{{0, -3}, {-1, -6}});
    CHECK_THROWS_AS(companion_matrix({{1, 3, -1}}), PreconditionError);
}

TEST_CASE("Hankel realizations") {
    CHECK(hankel_realize(IntPolynomial{1, -1, 1}).matrix() == IntMatrix{{1, 1}, {0, 1}});
    CHECK(hankel_realize(IntPolynomial{1, -1, 1, -1, 1}).matrix() ==
          IntMatrix{{3, 1, 1, 0}, {1, 0, 0, 1}, {0, 0, -1, 3}, {0, 0, 3, -8}});
    CHECK(hankel_realize(IntPolynomial{3, -6, 5, -6, 3}).matrix() ==
          IntMatrix{{-6, 1, 1, 0}, {1, 0, 0, 1}, {0, 0, -1, -6}, {0, 0, -6, -39}});
}

TEST_CASE("property: lambda round trip, companion determinant and Hankel realization") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t g = 1 + static_cast<std::size_t>(trial % 4);
        LambdaCoefficients l = random_lambda(g, rng);
        IntPolynomial d = expand_lambda(l);
        CHECK(is_palindromic(d));
        CHECK(d.eval(Integer(1)) == 1);
        CHECK(lambda_coefficients(d).a == l.a);

        // det(A + xI) = lambda(x), checked at integer points with Leibniz
        IntMatrix a = companion_matrix(l);
        for (long x : {-2L, 0L, 3L}) {
            IntMatrix shifted = a + Integer(x) * IntMatrix::identity(g);
            CHECK(oracle::leibniz_det(shifted) == l.as_polynomial().eval(Integer(x)));
        }

        SeifertMatrix v = hankel_realize(d);
        CHECK(abs(det_exact(IntMatrix(v.matrix() - v.matrix().transpose()))) == 1);
        CHECK(normalize_unit(alexander_polynomial(v).normalized) == normalize_unit(d));
        IntMatrix x = v.matrix().block(0, 0, g, g);
        CHECK(a * x == x * a.transpose());
        CHECK(abs(oracle::leibniz_det(x)) == 1);
        // the negated polynomial realizes too
        CHECK(normalize_unit(alexander_polynomial(hankel_realize(Integer(-1) * d)).normalized) == normalize_unit(d));
    }
}

TEST_CASE("metabolic peak for a single root pair") {
    auto peak = metabolic_peak_detail(IntPolynomial{1, -1, 1}, 1);
    CHECK(peak.first.matrix.matrix() == IntMatrix{{0, 0, 1, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 1, 0, 1}});
    CHECK(peak.matrix.dimension() == 8);
    REQUIRE(peak.step.breakpoints.size() == 1);
    CHECK(peak.step.breakpoints[0].as_rational() == Rational(1, 2));
    CHECK(peak.step.point_values == std::vector<long>{2});
    CHECK(peak.step.interval_values == std::vector<long>{0, 0});
    CHECK(normalize_unit(alexander_polynomial(peak.matrix).normalized) == IntPolynomial{1, -1, 1}.pow(4));
    for (const auto& c : peak.checks) CHECK_MESSAGE(c.passed, c.name);
    CHECK_THROWS_AS(metabolic_peak(IntPolynomial{1, -1, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(metabolic_peak(IntPolynomial{-1, 1, -1}, 1), PreconditionError);
    CHECK_THROWS_AS(metabolic_peak(IntPolynomial{1, -3, 1}, 1), PreconditionError);  // no unit roots
}

TEST_CASE("metabolic peaks select one of two roots") {
    IntPolynomial d{1, -1, 1, -1, 1};
    auto p1 = metabolic_peak_detail(d, 1);
    auto p2 = metabolic_peak_detail(d, 2);
    CHECK(p1.step.point_values == std::vector<long>{2, 0});
    CHECK(p2.step.point_values == std::vector<long>{0, 2});
    // independent check: exact signature at the breakpoints from scratch
    auto roots = unit_root_real_parts(d);
    CHECK(signature_at_algebraic(p1.matrix, roots[0]) == 2);
    CHECK(signature_at_algebraic(p1.matrix, roots[1]) == 0);
    CHECK(signature_at_algebraic(p2.matrix, roots[1]) == 2);
}

TEST_CASE("high-dimensional metabolic peaks") {
    auto h = highdim_metabolic_peak_detail(IntPolynomial{-1, 1, -1}, 1);
    CHECK(h.matrix.parity() == Parity::HighDimSym);
    CHECK(h.matrix.dimension() == 8);
    CHECK(abs(parity_determinant(h.matrix.matrix(), Parity::HighDimSym)) == 1);
    CHECK(h.step.point_values == std::vector<long>{2});
    CHECK(h.step.interval_values == std::vector<long>{0, 0});
    CHECK_THROWS_AS(highdim_metabolic_peak(IntPolynomial{1, -1, 1}, 1), PreconditionError);

    IntPolynomial d = highdim_jump_polynomial(0, Rational(1, 10));
    for (std::size_t p = 1; p <= 2; ++p) {
        auto hp = highdim_metabolic_peak_detail(d, p);
        CHECK(hp.step.point_values == std::vector<long>{p == 1 ? 2L : 0L, p == 2 ? 2L : 0L});
    }
}

TEST_CASE("property: metabolic peaks on random polynomials") {
    std::mt19937_64 rng(47);
    int built = 0;
    for (int trial = 0; trial < 40 && built < 8; ++trial) {
        std::size_t g = 1 + static_cast<std::size_t>(trial % 2);
        LambdaCoefficients l = random_lambda(g, rng, 3);
        IntPolynomial d = expand_lambda(l);
        auto roots = unit_root_real_parts(d);
        if (roots.empty()) continue;
        for (std::size_t p = 1; p <= roots.size(); ++p) {
            auto peak = metabolic_peak_detail(d, p);
            for (std::size_t i = 0; i < roots.size(); ++i) CHECK(peak.step.point_values[i] == (i + 1 == p ? 2 : 0));
            std::vector<std::size_t> half(2 * g);
            for (std::size_t i = 0; i < 2 * g; ++i) half[i] = i;
            CHECK(verify_metabolizer(peak.first.matrix, coordinate_certificate(4 * g, half)));
            // vanishing away from the unit roots, from the Hermitian definition
            auto w = oracle::pythagorean(Rational(2, 3));
            if (algebraic_sign(IntPolynomial{-1, 1}, roots[0]) != 0)
                CHECK(oracle::hermitian_counts(peak.matrix, w).signature() == 0);
        }
        ++built;
    }
    CHECK(built >= 4);
}

TEST_CASE("independence certificates") {
    std::vector<Rational> pts{Rational(-3, 5), Rational(-1, 10), Rational(2, 5)};
    for (std::size_t k = 1; k <= 3; ++k) {
        auto cert = independence_certificate_detail(pts, k);
        for (std::size_t i = 0; i < 3; ++i) CHECK(cert.signatures[i] == (i + 1 == k ? 2 : 0));
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(signature_at_rational(cert.matrix, pts[i]) == cert.signatures[i]);
        CHECK(cert.left.has_value() == (k > 1));
    }
    auto single = independence_certificate_detail({Rational(0)}, 1);
    CHECK(single.signatures == std::vector<long>{2});
    CHECK_THROWS_AS(independence_certificate({Rational(0), Rational(0)}, 1), PreconditionError);
    CHECK_THROWS_AS(independence_certificate({Rational(0)}, 2), PreconditionError);
    CHECK_THROWS_AS(independence_certificate({Rational(1, 2), Rational(0)}, 1), PreconditionError);
}

TEST_CASE("independence certificates add up to a nowhere-vanishing sum") {
    std::vector<Rational> pts{Rational(-3, 5), Rational(-1, 10), Rational(2, 5)};
    SeifertMatrix total = independence_certificate(pts, 1);
    for (std::size_t k = 2; k <= 3; ++k) total = direct_sum(total, independence_certificate(pts, k));
    for (const auto& c : pts) CHECK(signature_at_rational(total, c) != 0);
}

TEST_CASE("property: independence certificates on random point sets") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Rational> pts;
        while (pts.size() < 2 + static_cast<std::size_t>(trial % 3)) {
            Rational c = oracle::random_open_unit(rng, 30);
            if (std::find(pts.begin(), pts.end(), c) == pts.end()) pts.push_back(c);
        }
        std::sort(pts.begin(), pts.end());
        std::size_t k = 1 + static_cast<std::size_t>(trial) % pts.size();
        auto cert = independence_certificate_detail(pts, k);
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(cert.signatures[i] == (i + 1 == k ? 2 : 0));
    }
}

}
