#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace hayman {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double x);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);

/// Square root in the rationals, if one exists. The nonnegative root is returned.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace hayman
