#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace fanoku {

namespace mp = boost::multiprecision;

// Expression templates are disabled so that Eigen and `auto` see plain values.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

/// Parses "p/q", "p" or "-p/q". Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);

/// Returns r with r*r == x when x is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Positive generator of the additive subgroup of Q generated by x and y.
/// rational_gcd(0, 0) == 0.
Rational rational_gcd(const Rational& x, const Rational& y);

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(double x) { return (x > 0) - (x < 0); }

}  // namespace fanoku
