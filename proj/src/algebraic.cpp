#include "sigforge/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sigforge {

// ---------------------------------------------------------------------------
// Sturm sequences

SturmSequence::SturmSequence(const IntPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
    chain_.push_back(square_free_part(p));
    if (chain_.front().degree() == 0) return;
    chain_.push_back(primitive_part(chain_.front().derivative()));
    while (chain_.back().degree() > 0) {
        const auto& prev = chain_[chain_.size() - 2];
        const auto& cur = chain_.back();
        RatPolynomial rem = divmod(to_rational(prev), to_rational(cur)).second;
        if (rem.is_zero()) break;
        chain_.push_back(-primitive_integer(rem));
    }
}

int SturmSequence::variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& f : chain_) {
        int s = sign(f.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
    return count_half_open(a, b) - (base().eval(b) == 0 ? 1 : 0);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
    return count_half_open(a, b) + (base().eval(a) == 0 ? 1 : 0);
}

// ---------------------------------------------------------------------------
// AlgebraicReal

namespace {

IntPolynomial linear_minpoly(const Rational& q) {
    return IntPolynomial(std::vector<Integer>{-q.get_num(), q.get_den()});
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

}  // namespace

AlgebraicReal::AlgebraicReal(IntPolynomial minpoly, Rational lo, Rational hi)
    : minpoly_(square_free_part(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (minpoly_.degree() < 1) throw PreconditionError("algebraic number needs a nonconstant polynomial");
    if (!(lo_ < hi_)) throw PreconditionError("isolating interval must satisfy lo < hi");
    if (minpoly_.eval(lo_) == 0 || minpoly_.eval(hi_) == 0) {
        throw PreconditionError("isolating interval endpoints must not be roots");
    }
    if (SturmSequence(minpoly_).count_open(lo_, hi_) != 1) {
        throw PreconditionError("interval does not isolate exactly one root");
    }
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
    return AlgebraicReal(Unchecked{}, linear_minpoly(q), q - 1, q + 1);
}

AlgebraicReal AlgebraicReal::refined() const {
    Rational m = midpoint(lo_, hi_);
    int sm = sign(minpoly_.eval(m));
    if (sm == 0) {
        Rational quarter = (hi_ - lo_) / 4;
        return AlgebraicReal(Unchecked{}, linear_minpoly(m), m - quarter, m + quarter);
    }
    if (sm == sign(minpoly_.eval(lo_))) return AlgebraicReal(Unchecked{}, minpoly_, m, hi_);
    return AlgebraicReal(Unchecked{}, minpoly_, lo_, m);
}

AlgebraicReal AlgebraicReal::refined_to(const Rational& width) const {
    AlgebraicReal cur = *this;
    while (cur.hi_ - cur.lo_ > width) cur = cur.refined();
    return cur;
}

std::optional<Rational> AlgebraicReal::as_rational() const {
    if (minpoly_.degree() != 1) return std::nullopt;
    Rational r(-minpoly_.coeffs()[0], minpoly_.coeffs()[1]);
    r.canonicalize();
    return r;
}

double AlgebraicReal::approx() const {
    if (auto r = as_rational()) return r->get_d();
    AlgebraicReal fine = refined_to(Rational(1, Integer(1) << 60));
    return midpoint(fine.lo_, fine.hi_).get_d();
}

std::strong_ordering AlgebraicReal::compare(const Rational& q) const {
    AlgebraicReal cur = *this;
    while (true) {
        if (q <= cur.lo_) return std::strong_ordering::greater;
        if (q >= cur.hi_) return std::strong_ordering::less;
        if (cur.minpoly_.eval(q) == 0) return std::strong_ordering::equal;
        cur = cur.refined();
    }
}

std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) {
    IntPolynomial g = gcd(a.minpoly_, b.minpoly_);
    std::optional<SturmSequence> common;
    if (g.degree() >= 1) common.emplace(g);
    AlgebraicReal x = a;
    AlgebraicReal y = b;
    while (true) {
        if (x.hi_ <= y.lo_) return std::strong_ordering::less;
        if (y.hi_ <= x.lo_) return std::strong_ordering::greater;
        if (common) {
            const Rational& lo = std::max(x.lo_, y.lo_);
            const Rational& hi = std::min(x.hi_, y.hi_);
            // A common root inside both isolating intervals is both numbers.
            if (common->count_open(lo, hi) >= 1) return std::strong_ordering::equal;
        }
        x = x.refined();
        y = y.refined();
    }
}

// ---------------------------------------------------------------------------
// Isolation

namespace {

class Isolator {
public:
    explicit Isolator(const IntPolynomial& p) : s_(square_free_part(p)), seq_(s_) {}

    void run(const Rational& a, const Rational& b, std::vector<AlgebraicReal>& out) const {
        int n = seq_.count_open(a, b);
        split(a, b, n, out);
    }

private:
    void split(const Rational& a, const Rational& b, int n, std::vector<AlgebraicReal>& out) const {
        if (n <= 0) return;
        if (n == 1) {
            out.push_back(single(a, b));
            return;
        }
        Rational m = midpoint(a, b);
        if (s_.eval(m) == 0) {
            // Exact rational root: its interval is fitted between the neighbours.
            int left = seq_.count_open(a, m);
            std::vector<AlgebraicReal> lower;
            std::vector<AlgebraicReal> upper;
            split(a, m, left, lower);
            split(m, b, n - left - 1, upper);
            Rational lo = midpoint(m, lower.empty() ? a : lower.back().hi());
            Rational hi = midpoint(m, upper.empty() ? b : upper.front().lo());
            out.insert(out.end(), lower.begin(), lower.end());
            out.emplace_back(linear_minpoly(m), lo, hi);
            out.insert(out.end(), upper.begin(), upper.end());
            return;
        }
        int left = seq_.count_open(a, m);
        split(a, m, left, out);
        split(m, b, n - left, out);
    }

    AlgebraicReal single(Rational lo, Rational hi) const {
        while (s_.eval(lo) == 0 || s_.eval(hi) == 0) {
            Rational m = midpoint(lo, hi);
            if (s_.eval(m) == 0) {
                Rational quarter = (hi - lo) / 4;
                return AlgebraicReal(linear_minpoly(m), m - quarter, m + quarter);
            }
            if (seq_.count_open(lo, m) == 1) {
                hi = m;
            } else {
                lo = m;
            }
        }
        return AlgebraicReal(s_, lo, hi);
    }

    IntPolynomial s_;
    SturmSequence seq_;
};

}  // namespace

std::vector<AlgebraicReal> sturm_isolate(const IntPolynomial& p, const RationalInterval& window) {
    if (p.is_zero()) throw PreconditionError("sturm_isolate: zero polynomial");
    if (!(window.lo < window.hi)) throw PreconditionError("sturm_isolate: empty window");
    std::vector<AlgebraicReal> out;
    if (p.degree() < 1) return out;
    Isolator(p).run(window.lo, window.hi, out);
    return out;
}

std::vector<IsolatedRoot> isolate_with_multiplicity(const IntPolynomial& p, const RationalInterval& window) {
    std::vector<IsolatedRoot> out;
    for (const auto& [factor, mult] : square_free_factorization(p)) {
        for (auto& r : sturm_isolate(factor, window)) out.push_back({std::move(r), mult});
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.value < b.value; });
    return out;
}

int algebraic_sign(const IntPolynomial& p, const AlgebraicReal& alpha) {
    if (p.is_zero()) return 0;
    if (p.degree() == 0) return sign(p.leading());
    IntPolynomial g = gcd(p, alpha.minpoly());
    if (g.degree() >= 1 && SturmSequence(g).count_open(alpha.lo(), alpha.hi()) >= 1) return 0;
    SturmSequence seq(p);
    AlgebraicReal cur = alpha;
    while (seq.count_closed(cur.lo(), cur.hi()) != 0) cur = cur.refined();
    return sign(p.eval(cur.lo()));
}

// ---------------------------------------------------------------------------
// Palindromic polynomials

bool is_palindromic(const IntPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("is_palindromic: zero polynomial");
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i <= d / 2; ++i) {
        if (c[i] != c[d - i]) return false;
    }
    return true;
}

IntPolynomial expand_palindrome(const IntPolynomial& q) {
    if (q.is_zero()) return {};
    const auto g = static_cast<std::size_t>(q.degree());
    const IntPolynomial t_sq_plus_one{1, 0, 1};
    IntPolynomial acc;
    IntPolynomial power = IntPolynomial::constant(Integer(1));
    for (std::size_t j = 0; j <= g; ++j) {
        acc += IntPolynomial::monomial(q.coeffs()[j], g - j) * power;
        power *= t_sq_plus_one;
    }
    return acc;
}

IntPolynomial compress_palindrome(const IntPolynomial& p) {
    if (!is_palindromic(p)) throw PreconditionError("compress_palindrome: polynomial is not palindromic");
    if (p.degree() % 2 != 0) throw PreconditionError("compress_palindrome: odd degree");
    const auto g = static_cast<std::size_t>(p.degree() / 2);
    // t^k + t^-k = D_k(x), x = t + 1/t:  D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
    const IntPolynomial x{0, 1};
    IntPolynomial q = IntPolynomial::constant(p[g]);
    IntPolynomial d_prev{2};
    IntPolynomial d_cur = x;
    for (std::size_t k = 1; k <= g; ++k) {
        q += d_cur * p[g + k];
        IntPolynomial d_next = x * d_cur - d_prev;
        d_prev = std::move(d_cur);
        d_cur = std::move(d_next);
    }
    if (!(expand_palindrome(q) == p)) throw VerificationFailure("compress_palindrome: re-expansion mismatch");
    return q;
}

namespace {

// Small inputs are split into irreducible factors so that each root carries its
// own minimal polynomial (rational roots become linear).
bool worth_factoring(const IntPolynomial& p) {
    if (p.degree() <= 1 || p.degree() > 8) return false;
    for (const auto& c : p.coeffs())
        if (abs(c) > Integer("1000000000000")) return false;
    return true;
}

AlgebraicReal with_factor(const AlgebraicReal& root, const std::vector<IntPolynomial>& factors) {
    for (const auto& f : factors) {
        if (sign(f.eval(root.lo())) * sign(f.eval(root.hi())) < 0) return AlgebraicReal(f, root.lo(), root.hi());
    }
    return root;
}

}  // namespace

std::vector<IsolatedRoot> unit_root_real_parts_with_multiplicity(const IntPolynomial& delta) {
    IntPolynomial q = compress_palindrome(delta);
    std::vector<IsolatedRoot> out;
    auto roots = isolate_with_multiplicity(q, {Rational(-2), Rational(2)});
    std::map<std::string, std::vector<IntPolynomial>> factor_cache;
    for (auto& [root, mult] : roots) {
        AlgebraicReal x = root;
        if (worth_factoring(root.minpoly())) {
            auto [it, fresh] = factor_cache.try_emplace(serialize(root.minpoly()));
            if (fresh) it->second = irreducible_factors(root.minpoly());
            if (it->second.size() > 1) x = with_factor(root, it->second);
        }
        // c = x / 2: the minimal polynomial in c is q(2c).
        IntPolynomial in_c = primitive_part(x.minpoly().scale_argument(Integer(2)));
        out.push_back({AlgebraicReal(in_c, x.lo() / 2, x.hi() / 2), mult});
    }
    return out;
}

std::vector<AlgebraicReal> unit_root_real_parts(const IntPolynomial& delta) {
    std::vector<AlgebraicReal> out;
    for (auto& r : unit_root_real_parts_with_multiplicity(delta)) out.push_back(std::move(r.value));
    return out;
}

std::vector<AlgebraicReal> merge_roots(const std::vector<AlgebraicReal>& a, const std::vector<AlgebraicReal>& b) {
    std::vector<AlgebraicReal> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
        } else if (i == a.size()) {
            out.push_back(b[j++]);
        } else {
            auto cmp = a[i] <=> b[j];
            if (cmp == std::strong_ordering::less) {
                out.push_back(a[i++]);
            } else if (cmp == std::strong_ordering::greater) {
                out.push_back(b[j++]);
            } else {
                out.push_back(a[i++]);
                ++j;
            }
        }
    }
    return out;
}

Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
    AlgebraicReal x = a;
    AlgebraicReal y = b;
    while (!(x.hi() <= y.lo())) {
        if (y.hi() <= x.lo()) throw PreconditionError("rational_between: a >= b");
        x = x.refined();
        y = y.refined();
    }
    return midpoint(x.hi(), y.lo());
}

Rational rational_between(const Rational& a, const AlgebraicReal& b) {
    if (b.compare(a) != std::strong_ordering::greater) throw PreconditionError("rational_between: a >= b");
    Rational r = midpoint(a, std::max(b.hi(), Rational(a + 1)));
    while (b.compare(r) != std::strong_ordering::greater) r = midpoint(a, r);
    return r;
}

Rational rational_between(const AlgebraicReal& a, const Rational& b) {
    if (a.compare(b) != std::strong_ordering::less) throw PreconditionError("rational_between: a >= b");
    Rational r = midpoint(std::min(a.lo(), Rational(b - 1)), b);
    while (a.compare(r) != std::strong_ordering::less) r = midpoint(r, b);
    return r;
}

}  // namespace sigforge
