#include "sigforge/constructors.hpp"

#include <algorithm>
#include <array>

#include "sigforge/parallel.hpp"

namespace sigforge {

void require_all(const CheckList& checks, const std::string& context) {
    for (const auto& c : checks) {
        if (!c.passed) {
            std::string msg = context + ": check '" + c.name + "' failed";
            if (!c.detail.empty()) msg += " (" + c.detail + ")";
            throw VerificationFailure(msg);
        }
    }
}

namespace {

Check check(std::string name, bool passed, std::string detail = {}) {
    return Check{std::move(name), passed, std::move(detail)};
}

void require_even_palindrome(const IntPolynomial& delta) {
    if (delta.degree() < 2 || delta.degree() % 2 != 0) {
        throw PreconditionError("polynomial must have even degree >= 2, got " + pretty(delta));
    }
    if (delta[0] == 0 || !is_palindromic(delta)) {
        throw PreconditionError("polynomial must be palindromic with nonzero constant term: " + pretty(delta));
    }
}

Integer eval_int(const IntPolynomial& p, long x) { return p.eval(Integer(x)); }

bool same_up_to_unit(const IntPolynomial& a, const IntPolynomial& b) { return normalize_unit(a) == normalize_unit(b); }

bool inside(const AlgebraicReal& x, const Rational& lo, const Rational& hi) {
    return x.compare(lo) == std::strong_ordering::greater && x.compare(hi) == std::strong_ordering::less;
}

void check_jump_inputs(const Rational& r, const Rational& eps) {
    if (!(r > -1 && r < 1)) throw PreconditionError("jump location must lie in (-1, 1), got " + to_string(r));
    if (eps <= 0) throw PreconditionError("eps must be positive, got " + to_string(eps));
}

IntPolynomial jump_quadratic(const Integer& a, const Integer& b) {
    return IntPolynomial(std::vector<Integer>{Integer(4 * a - 1), Integer(-2 * (a + b)), b});
}

// The quadratic's root in (-2, 2) lies in (2(r - eps), 2(r + eps)).
bool accepts(const Rational& r, const Rational& eps, const Integer& a, const Integer& b) {
    if (8 * a + 8 * b - 1 <= 0) return false;
    const Rational lower = std::max(Rational(2 * (r - eps)), Rational(-2));
    const Rational upper = std::min(Rational(2 * (r + eps)), Rational(2));
    IntPolynomial q = jump_quadratic(a, b);
    return sign(q.eval(lower)) > 0 && sign(q.eval(upper)) < 0;
}

JumpSearchResult verified_jump(const Rational& r, const Rational& eps, const Integer& a, const Integer& b) {
    JumpSearchResult res{a, b, jump_quartic(a, b), jump_quadratic(a, b)};
    const IntPolynomial& q = res.quadratic;
    auto roots = unit_root_real_parts(res.delta);
    Integer disc = 4 * (a + b) * (a + b) - 4 * b * (4 * a - 1);
    CheckList checks{
        check("delta(1) = -1", eval_int(res.delta, 1) == -1),
        check("palindromic quartic", res.delta.degree() == 4 && is_palindromic(res.delta)),
        check("delta = t^2 q(t + 1/t)", expand_palindrome(q) == res.delta),
        check("q(2) = -1", eval_int(q, 2) == -1),
        check("simple roots", disc > 0 && disc == 4 * ((a - b) * (a - b) + b)),
        check("one unit-root pair", roots.size() == 1 && SturmSequence(q).count_open(-2, 2) == 1),
        check("|c* - r| < eps", roots.size() == 1 && inside(roots[0], r - eps, r + eps)),
    };
    require_all(checks, "jump_polynomial");
    return res;
}

}  // namespace

// ---------------------------------------------------------------------------
// Jump polynomials

IntPolynomial jump_quartic(const Integer& a, const Integer& b) {
    Integer s = -2 * (a + b);
    return IntPolynomial(std::vector<Integer>{b, s, Integer(4 * a + 2 * b - 1), s, b});
}

JumpSearchResult jump_search(const Rational& r, const Rational& eps) {
    check_jump_inputs(r, eps);
    for (Integer b = 1;; ++b) {
        Integer a = round_half_toward_zero(Rational(r * b));
        if (accepts(r, eps, a, b)) return verified_jump(r, eps, a, b);
    }
}

IntPolynomial jump_polynomial(const Rational& r, const Rational& eps) { return jump_search(r, eps).delta; }

HighDimJump highdim_jump_search(const Rational& r, const Rational& eps, const std::optional<Rational>& extra_floor) {
    check_jump_inputs(r, eps);
    const Rational floor = extra_floor ? *extra_floor : Rational(r + eps);
    if (floor >= 1) throw PreconditionError("extra-root threshold must be below 1, got " + to_string(floor));

    for (Integer b = 1;; ++b) {
        Integer a = round_half_toward_zero(Rational(r * b));
        if (a + b <= 0) continue;  // a/b > -1
        const Integer c = 2 * (a + b);
        const Rational extra = 1 - Rational(1) / Rational(2 * c);
        if (extra <= floor || !accepts(r, eps, a, b)) continue;

        HighDimJump res{verified_jump(r, eps, a, b), c, IntPolynomial(std::vector<Integer>{c, Integer(1 - 2 * c), c}),
                        IntPolynomial{}, extra};
        res.d = res.factor * res.base.delta;

        const Integer at_minus_one = eval_int(res.d, -1);
        const Integer root = 8 * a + 8 * b - 1;
        auto roots = unit_root_real_parts(res.d);
        CheckList checks{
            check("D(1) = -1", eval_int(res.d, 1) == -1),
            check("D(-1) = (8a+8b-1)^2", at_minus_one == root * root, at_minus_one.get_str()),
            check("palindromic sextic", res.d.degree() == 6 && is_palindromic(res.d)),
            check("two unit-root pairs", roots.size() == 2),
            check("c* within eps of r", roots.size() == 2 && inside(roots[0], r - eps, r + eps)),
            check("extra root at 1 - 1/(2c)", roots.size() == 2 && roots[1].compare(extra) == std::strong_ordering::equal),
            check("validates", highdim_validate_polynomial(res.d)),
        };
        require_all(checks, "highdim_jump_polynomial");
        return res;
    }
}

IntPolynomial highdim_jump_polynomial(const Rational& r, const Rational& eps, const std::optional<Rational>& extra_floor) {
    return highdim_jump_search(r, eps, extra_floor).d;
}

bool highdim_validate_polynomial(const IntPolynomial& d) {
    if (d.degree() < 0 || d.degree() % 2 != 0 || d[0] == 0 || !is_palindromic(d)) return false;
    const long g = d.degree() / 2;
    if (eval_int(d, 1) != (g % 2 == 0 ? 1 : -1)) return false;
    return is_perfect_square(eval_int(d, -1));
}

// ---------------------------------------------------------------------------
// Realization

IntPolynomial expand_lambda(const LambdaCoefficients& lambda) {
    const std::size_t g = lambda.genus();
    const IntPolynomial one_minus_t{1, -1};
    IntPolynomial sum;
    for (std::size_t j = 0; j <= g; ++j) {
        sum = sum + lambda.a[j] * (one_minus_t.pow(static_cast<unsigned>(2 * (g - j))) * IntPolynomial::monomial(Integer(1), j));
    }
    return sum;
}

LambdaCoefficients lambda_coefficients(const IntPolynomial& delta) {
    require_even_palindrome(delta);
    const Integer at_one = eval_int(delta, 1);
    if (abs(at_one) != 1) throw PreconditionError("lambda_coefficients needs delta(1) = ±1, got " + at_one.get_str());
    const std::size_t g = static_cast<std::size_t>(delta.degree()) / 2;
    LambdaCoefficients lambda;
    lambda.a.resize(g + 1);
    for (std::size_t k = 0; k <= g; ++k) {
        Integer ak = delta[k];
        for (std::size_t j = 0; j < k; ++j) {
            Integer term = lambda.a[j] * binomial(2 * (g - j), k - j);
            if ((k - j) % 2 == 1) term = -term;
            ak -= term;
        }
        lambda.a[k] = ak;
    }
    if (expand_lambda(lambda) != delta) throw VerificationFailure("lambda re-expansion does not reproduce delta");
    if (lambda.a[g] != at_one) throw VerificationFailure("lambda leading coefficient differs from delta(1)");
    return lambda;
}

IntMatrix companion_matrix(const LambdaCoefficients& lambda) {
    if (lambda.a.size() < 2) throw PreconditionError("companion matrix needs g >= 1");
    const std::size_t g = lambda.genus();
    if (lambda.a[g] != 1) {
        throw PreconditionError("companion matrix needs a_g = 1 (negate lambda first), got " + lambda.a[g].get_str());
    }
    IntMatrix m(g, g);
    for (std::size_t i = 1; i < g; ++i) m(i, i - 1) = -1;
    for (std::size_t i = 0; i < g; ++i) m(i, g - 1) += lambda.a[i];
    return m;
}

SeifertMatrix hankel_realize(const IntPolynomial& delta) {
    require_even_palindrome(delta);
    const Integer at_one = eval_int(delta, 1);
    if (abs(at_one) != 1) throw PreconditionError("hankel_realize needs delta(1) = ±1, got " + at_one.get_str());
    const IntPolynomial monic_side = at_one == 1 ? delta : IntPolynomial(Integer(-1) * delta);
    LambdaCoefficients lambda = lambda_coefficients(monic_side);
    const std::size_t g = lambda.genus();
    IntMatrix a = companion_matrix(lambda);

    IntMatrix x(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            std::size_t idx = i + j + 1;
            x(i, j) = idx <= g ? lambda.a[idx] : Integer(0);
        }

    const Integer det_x = det_exact(x);
    if (abs(det_x) != 1) throw VerificationFailure("Hankel matrix is not unimodular (det " + det_x.get_str() + ")");
    if (!(a * x == x * a.transpose())) throw VerificationFailure("intertwining A X = X A^T fails");

    RatMatrix y_rat = inverse(to_rational(x)) * to_rational(a);
    IntMatrix y(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            if (y_rat(i, j).get_den() != 1) throw VerificationFailure("X^{-1} A is not integral");
            y(i, j) = y_rat(i, j).get_num();
        }
    if (!y.is_symmetric()) throw VerificationFailure("X^{-1} A is not symmetric");

    IntMatrix v(2 * g, 2 * g);
    v.set_block(0, 0, x);
    v.set_block(0, g, IntMatrix::identity(g));
    v.set_block(g, g, y);
    SeifertMatrix out(v, Parity::Classical);
    if (!same_up_to_unit(alexander_polynomial(out).normalized, delta)) {
        throw VerificationFailure("realized Alexander polynomial differs from the input");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Metabolic peaks

IntMatrix peak_block(const IntMatrix& companion, const Integer& b1, const Integer& b2, Parity parity) {
    const std::size_t g = companion.rows();
    const IntMatrix id = IntMatrix::identity(g);
    const Integer lower_sign = parity == Parity::Classical ? 1 : -1;
    IntMatrix v(4 * g, 4 * g);
    // top-right [[I, A], [I, 0]]
    v.set_block(0, 2 * g, id);
    v.set_block(0, 3 * g, companion);
    v.set_block(g, 2 * g, id);
    // bottom-left [[0, ±I], [±A^T, I]]
    v.set_block(2 * g, g, lower_sign * id);
    v.set_block(3 * g, 0, lower_sign * companion.transpose());
    v.set_block(3 * g, g, id);
    // B: only the lower-right g x g block is nonzero
    const std::size_t corner = 4 * g - 1;
    if (g > 1) {
        v(3 * g, corner) = b1;
        v(corner, 3 * g) = b1;
    }
    v(corner, corner) = b2;
    return v;
}

namespace {

struct SummandSpec {
    Rational separator;
    Integer b1;
    Integer b2;
};

// Positive where Omega > mu (first) or Omega < mu (second), mu = 2 - 2m.
SummandSpec select_b(const Rational& m, const Integer& a0, std::size_t g, int orientation, bool first) {
    if (g == 1) return {m, Integer(0), Integer(1)};
    const Rational mu = 2 - 2 * m;
    const Integer num = mu.get_num();
    const Integer den = mu.get_den();
    const int s0 = sign(a0);
    const Integer abs_a0 = abs(a0);
    if (first) return {m, Integer(orientation * s0 * den), Integer(-2 * abs_a0 * num)};
    return {m, Integer(-orientation * s0 * den), Integer(2 * abs_a0 * num)};
}

MetabolicPeak build_peak(const IntPolynomial& delta, std::size_t p, Parity parity) {
    require_even_palindrome(delta);
    const std::size_t g = static_cast<std::size_t>(delta.degree()) / 2;
    const Integer at_one = eval_int(delta, 1);
    const Integer expected = parity == Parity::Classical || g % 2 == 0 ? 1 : -1;
    if (at_one != expected) {
        throw PreconditionError("peak construction needs delta(1) = " + expected.get_str() + ", got " + at_one.get_str());
    }
    std::vector<AlgebraicReal> roots = unit_root_real_parts(delta);
    const std::size_t k = roots.size();
    if (k == 0) throw PreconditionError("polynomial has no roots on the unit circle: " + pretty(delta));
    if (p < 1 || p > k) {
        throw PreconditionError("root index " + std::to_string(p) + " out of range 1.." + std::to_string(k));
    }

    LambdaCoefficients lambda = lambda_coefficients(delta);
    LambdaCoefficients monic = lambda;
    if (parity == Parity::HighDimSym) {
        for (std::size_t j = 1; j <= g; j += 2) monic.a[j] = -monic.a[j];
    }
    IntMatrix a = companion_matrix(monic);
    const Integer a0 = lambda.a[0];
    const int orientation = parity == Parity::Classical ? 1 : -1;

    const Rational m1 = p < k ? rational_between(roots[p - 1], roots[p]) : rational_between(roots[k - 1], Rational(1));
    const Rational m2 = p > 1 ? rational_between(roots[p - 2], roots[p - 1]) : rational_between(Rational(-1), roots[0]);
    SummandSpec s1 = select_b(m1, a0, g, orientation, true);
    SummandSpec s2 = select_b(m2, a0, g, orientation, false);

    auto make = [&](const SummandSpec& s) {
        try {
            return PeakSummand{s.separator, s.b1, s.b2, SeifertMatrix(peak_block(a, s.b1, s.b2, parity), parity)};
        } catch (const ParityViolation& e) {
            throw VerificationFailure(std::string("peak summand is not a Seifert matrix: ") + e.what());
        }
    };
    PeakSummand first = make(s1);
    PeakSummand second = make(s2);
    SeifertMatrix w = direct_sum(first.matrix, second.matrix);

    MetabolicPeak out{lambda, a, roots, p, first, second, w, {}, {}};

    std::vector<std::size_t> half(2 * g);
    for (std::size_t i = 0; i < 2 * g; ++i) half[i] = i;
    const MetabolizerCertificate cert = coordinate_certificate(4 * g, half);
    const IntPolynomial squared = delta * delta;

    CheckList& checks = out.checks;
    checks.push_back(check("summand 1 metabolizer", verify_metabolizer(first.matrix, cert)));
    checks.push_back(check("summand 2 metabolizer", verify_metabolizer(second.matrix, cert)));
    checks.push_back(check("summand 1 Alexander = delta^2",
                           same_up_to_unit(alexander_polynomial(first.matrix).normalized, squared)));
    checks.push_back(check("summand 2 Alexander = delta^2",
                           same_up_to_unit(alexander_polynomial(second.matrix).normalized, squared)));
    checks.push_back(check("Alexander = delta^4",
                           same_up_to_unit(alexander_polynomial(w).normalized, squared * squared)));

    out.step = signature_step_function(w);
    const SignatureStepFunction& f = out.step;
    bool same_breaks = f.breakpoints.size() == k;
    for (std::size_t i = 0; same_breaks && i < k; ++i) same_breaks = f.breakpoints[i] == roots[i];
    checks.push_back(check("breakpoints are the unit roots", same_breaks));
    bool zero_gaps = std::all_of(f.interval_values.begin(), f.interval_values.end(), [](long v) { return v == 0; });
    checks.push_back(check("interval values all 0", zero_gaps));
    bool peak = same_breaks;
    for (std::size_t i = 0; peak && i < k; ++i) peak = f.point_values[i] == (i + 1 == p ? 2 : 0);
    checks.push_back(check("point value 2 at root p only", peak));

    require_all(checks, parity == Parity::Classical ? "metabolic_peak" : "highdim_metabolic_peak");
    return out;
}

}  // namespace

MetabolicPeak metabolic_peak_detail(const IntPolynomial& delta, std::size_t p) {
    return build_peak(delta, p, Parity::Classical);
}

SeifertMatrix metabolic_peak(const IntPolynomial& delta, std::size_t p) { return metabolic_peak_detail(delta, p).matrix; }

MetabolicPeak highdim_metabolic_peak_detail(const IntPolynomial& delta, std::size_t p) {
    return build_peak(delta, p, Parity::HighDimSym);
}

SeifertMatrix highdim_metabolic_peak(const IntPolynomial& delta, std::size_t p) {
    return highdim_metabolic_peak_detail(delta, p).matrix;
}

// ---------------------------------------------------------------------------
// Independence certificates

namespace {

JumpSummand oriented_jump(const Rational& lo, const Rational& hi, const Rational& eps) {
    const Rational r = (lo + hi) / 2;
    IntPolynomial delta = jump_polynomial(r, eps);
    SeifertMatrix v = hankel_realize(delta);
    SignatureStepFunction f = signature_step_function(v);
    if (f.breakpoints.size() != 1 || !inside(f.breakpoints[0], lo, hi)) {
        throw VerificationFailure("jump summand does not have a single breakpoint inside its window");
    }
    if (f.interval_values[1] != 0 || std::abs(f.interval_values[0]) != 2) {
        throw VerificationFailure("jump summand step is not (±2, 0)");
    }
    const bool flip = f.interval_values[0] < 0;
    return JumpSummand{lo, hi, delta, flip, flip ? negate(v) : v};
}

}  // namespace

IndependenceCertificate independence_certificate_detail(const std::vector<Rational>& points, std::size_t k) {
    const std::size_t n = points.size();
    if (n == 0) throw PreconditionError("independence certificate needs at least one point");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i] > -1 && points[i] < 1)) throw PreconditionError("points must lie in (-1, 1)");
        if (i > 0 && points[i] == points[i - 1]) throw PreconditionError("duplicate point " + to_string(points[i]));
        if (i > 0 && points[i] < points[i - 1]) throw PreconditionError("points must be sorted ascending");
    }
    if (k < 1 || k > n) throw PreconditionError("target index " + std::to_string(k) + " out of range 1.." + std::to_string(n));

    std::vector<Rational> grid;
    grid.push_back(-1);
    grid.insert(grid.end(), points.begin(), points.end());
    grid.push_back(1);
    Rational gap = grid[1] - grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i) gap = std::min(gap, Rational(grid[i] - grid[i - 1]));
    Rational eps = gap / 2;

    // Jump windows either side of c_k: (c_k, c_{k+1}) and (c_{k-1}, c_k).
    const Rational right_lo = points[k - 1];
    const Rational right_hi = k < n ? points[k] : Rational(1);
    const bool has_left = k > 1;

    constexpr int attempts = 8;
    std::string last_failure;
    for (int attempt = 0; attempt < attempts; ++attempt, eps /= 2) {
        std::vector<std::optional<JumpSummand>> parts(2);
        try {
            parallel_for(has_left ? 2 : 1, [&](std::size_t i) {
                if (i == 0) parts[0] = oriented_jump(right_lo, right_hi, eps);
                else parts[1] = oriented_jump(points[k - 2], points[k - 1], eps);
            });
        } catch (const VerificationFailure& e) {
            last_failure = e.what();
            continue;
        }

        SeifertMatrix v = has_left ? direct_sum(parts[0]->matrix, negate(parts[1]->matrix)) : parts[0]->matrix;
        std::vector<long> sigs(n);
        parallel_for(n, [&](std::size_t i) { sigs[i] = signature_at_rational(v, points[i]); });

        bool pattern = true;
        for (std::size_t i = 0; i < n; ++i) pattern = pattern && sigs[i] == (i + 1 == k ? 2 : 0);
        if (!pattern) {
            last_failure = "signature pattern not met";
            continue;
        }
        IndependenceCertificate out{points, k, eps, *parts[0], has_left ? parts[1] : std::nullopt, v, sigs, {}};
        out.checks.push_back(check("valid classical Seifert matrix", true));
        out.checks.push_back(check("right jump inside (c_k, c_k+1)", true));
        if (has_left) out.checks.push_back(check("left jump inside (c_k-1, c_k)", true));
        out.checks.push_back(check("signature 2 at c_k", sigs[k - 1] == 2));
        out.checks.push_back(check("signature 0 at other points", pattern));
        return out;
    }
    throw VerificationFailure("independence certificate could not be verified: " + last_failure);
}

SeifertMatrix independence_certificate(const std::vector<Rational>& points, std::size_t k) {
    return independence_certificate_detail(points, k).matrix;
}

}  // namespace sigforge
