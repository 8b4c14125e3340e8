#include "sigforge/numeric.hpp"

#include <cctype>

#include "sigforge/errors.hpp"

namespace sigforge {

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    auto s = trim(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
    std::string digits(s);
    if (digits.front() == '+') digits.erase(0, 1);
    return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) throw ParseError("empty rational");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash));
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
        Integer den(std::string(den_text), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        bool negative = !s.empty() && s.front() == '-';
        std::string_view int_part = s.substr(0, dot);
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        std::string_view frac_part = s.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty())) {
            throw ParseError("not a decimal: '" + std::string(text) + "'");
        }
        Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part), 10);
        Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part), 10);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational q(whole * scale + frac, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) {
    Rational x = q;
    x.canonicalize();
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer isqrt(const Integer& x) {
    if (x < 0) return Integer(-1);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Integer round_half_toward_zero(const Rational& x) {
    Rational mag = abs(x);
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), mag.get_num().get_mpz_t(), mag.get_den().get_mpz_t());
    if (mag - Rational(rounded) > Rational(1, 2)) rounded += 1;
    return x < 0 ? Integer(-rounded) : rounded;
}

std::string HalfInteger::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

}  // namespace sigforge
