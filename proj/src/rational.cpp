#include "fanoku/rational.hpp"

#include "fanoku/error.hpp"

#include <cctype>

namespace fanoku {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(text);
    if (digits.front() == '+') digits.erase(0, 1);
    return Integer(digits);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    const Integer num = parse_integer(trim(s.substr(0, slash)), text);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& x) {
    const Integer num = numerator(x);
    const Integer den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer floor(const Rational& x) {
    const Integer num = numerator(x);
    const Integer den = denominator(x);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Integer ceil(const Rational& x) { return -floor(-x); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const Integer num = numerator(x);
    const Integer den = denominator(x);
    const Integer rn = mp::sqrt(num);
    const Integer rd = mp::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

Rational rational_gcd(const Rational& x, const Rational& y) {
    if (x == 0) return mp::abs(y);
    if (y == 0) return mp::abs(x);
    const Integer l = mp::lcm(denominator(x), denominator(y));
    const Integer nx = mp::abs(numerator(x)) * (l / denominator(x));
    const Integer ny = mp::abs(numerator(y)) * (l / denominator(y));
    return Rational(mp::gcd(nx, ny), l);
}

}  // namespace fanoku
