#include "sigforge/polynomial.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

namespace sigforge {

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return RatPolynomial(std::move(v));
}

Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        v.push_back(std::move(q));
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial primitive_integer(const RatPolynomial& p) {
    if (p.is_zero()) return {};
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(l);
        v.push_back(scaled.get_num());
    }
    return primitive_part(IntPolynomial(std::move(v)));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) return {RatPolynomial{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
    const Rational& lead = b.leading();
    for (long k = da - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    RatPolynomial x = to_rational(a);
    RatPolynomial y = to_rational(b);
    while (!y.is_zero()) {
        RatPolynomial r = divmod(x, y).second;
        x = std::move(y);
        // keep coefficients small
        y = to_rational(primitive_integer(r));
    }
    IntPolynomial g = primitive_integer(x);
    if (!g.is_zero() && g.leading() < 0) g = -g;
    return g;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero()) throw PreconditionError("polynomial does not divide");
    std::vector<Integer> v;
    v.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) throw PreconditionError("quotient is not integral");
        v.push_back(c.get_num());
    }
    return IntPolynomial(std::move(v));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(to_rational(a), to_rational(b)).second.is_zero();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    IntPolynomial g = gcd(p, p.derivative());
    IntPolynomial s = g.degree() <= 0 ? primitive_part(p) : primitive_part(primitive_integer(divmod(to_rational(p), to_rational(g)).first));
    if (s.leading() < 0) s = -s;
    return s;
}

std::vector<SquareFreeFactor> square_free_factorization(const IntPolynomial& p) {
    std::vector<SquareFreeFactor> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm over Q.
    const RatPolynomial f = to_rational(primitive_part(p));
    const RatPolynomial fp = f.derivative();
    const RatPolynomial a0 = to_rational(gcd(primitive_part(p), primitive_part(p).derivative()));
    RatPolynomial b = divmod(f, a0).first;
    RatPolynomial c = divmod(fp, a0).first;
    RatPolynomial d = c - b.derivative();
    for (unsigned i = 1; b.degree() > 0; ++i) {
        IntPolynomial ai = gcd(primitive_integer(b), primitive_integer(d));
        if (ai.degree() > 0) out.push_back({ai, i});
        RatPolynomial aq = to_rational(ai);
        b = divmod(b, aq).first;
        c = divmod(d, aq).first;
        d = c - b.derivative();
    }
    return out;
}

RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw PreconditionError("interpolate: size mismatch");
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    RatPolynomial result;
    for (std::size_t k = n; k-- > 0;) {
        // result = result * (x - xs[k]) + dd[k]
        result = result * RatPolynomial(std::vector<Rational>{Rational(-xs[k]), Rational(1)}) +
                 RatPolynomial::constant(dd[k]);
    }
    return result;
}

IntPolynomial normalize_unit(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    std::size_t shift = 0;
    while (p.coeffs()[shift] == 0) ++shift;
    std::vector<Integer> v(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
    if (v.front() < 0) {
        for (auto& c : v) c = -c;
    }
    return IntPolynomial(std::move(v));
}

namespace {

std::vector<Integer> divisors_of(const Integer& value) {
    Integer n = abs(value);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(Integer(n / d));
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Search for a factor of degree exactly `d` via interpolation through divisor
// choices at d+1 integer points.
std::optional<IntPolynomial> kronecker_factor(const IntPolynomial& f, long d) {
    std::vector<Integer> points;
    std::vector<std::vector<Integer>> choices;
    for (long x = 0; static_cast<long>(points.size()) < d + 1; x = (x <= 0 ? 1 - x : -x)) {
        Integer v = f.eval(Integer(x));
        if (v == 0) continue;  // square-free input of degree > 1 has no rational root here
        points.emplace_back(x);
        auto divs = divisors_of(v);
        std::vector<Integer> signed_divs;
        for (const auto& dv : divs) {
            signed_divs.push_back(dv);
            // the first point fixes the overall sign of the candidate
            if (points.size() > 1) signed_divs.push_back(Integer(-dv));
        }
        choices.push_back(std::move(signed_divs));
    }
    std::vector<Rational> xs;
    for (const auto& x : points) xs.emplace_back(x);
    std::vector<std::size_t> idx(points.size(), 0);
    while (true) {
        std::vector<Rational> ys;
        ys.reserve(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) ys.emplace_back(choices[i][idx[i]]);
        RatPolynomial g = interpolate(xs, ys);
        if (g.degree() == d) {
            bool integral = std::all_of(g.coeffs().begin(), g.coeffs().end(),
                                        [](const Rational& c) { return c.get_den() == 1; });
            if (integral) {
                IntPolynomial gi = primitive_integer(g);
                if (divides(gi, f)) return gi;
            }
        }
        std::size_t k = 0;
        while (k < idx.size()) {
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) return std::nullopt;
    }
}

}  // namespace

std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& p) {
    std::vector<IntPolynomial> out;
    if (p.degree() <= 0) return out;
    std::vector<IntPolynomial> work{primitive_part(p)};
    while (!work.empty()) {
        IntPolynomial f = std::move(work.back());
        work.pop_back();
        if (f.leading() < 0) f = -f;
        bool split = false;
        for (long d = 1; d <= f.degree() / 2 && !split; ++d) {
            // Rational roots break the point selection in kronecker_factor, so
            // peel linear factors off via the rational root test first.
            if (d == 1) {
                const Integer& c0 = f.coeffs().front();
                if (c0 == 0) {
                    work.push_back(IntPolynomial{0, 1});
                    work.push_back(exact_quotient(f, IntPolynomial{0, 1}));
                    split = true;
                    break;
                }
                for (const auto& num : divisors_of(c0)) {
                    for (const auto& den : divisors_of(f.leading())) {
                        for (int s : {1, -1}) {
                            Rational r(Integer(s * num), den);
                            r.canonicalize();
                            if (!split && f.eval(r) == 0) {
                                IntPolynomial lin(std::vector<Integer>{-r.get_num(), r.get_den()});
                                work.push_back(lin);
                                work.push_back(exact_quotient(f, lin));
                                split = true;
                            }
                        }
                    }
                }
                continue;
            }
            if (auto g = kronecker_factor(f, d)) {
                work.push_back(*g);
                work.push_back(primitive_part(exact_quotient(f, *g)));
                split = true;
            }
        }
        if (!split) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return serialize(a) < serialize(b);
    });
    return out;
}

std::string serialize(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
    std::vector<Integer> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        v.push_back(parse_integer(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(v));
}

std::string pretty(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

}  // namespace sigforge
