#ifndef LAZCAD_NUMERIC_HPP
#define LAZCAD_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lazcad {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }
inline Integer den(const Rational& q) { return Integer(boost::multiprecision::denominator(q)); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }
inline Integer abs(const Integer& a) { return boost::multiprecision::abs(a); }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

inline int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }
inline int sign(const Integer& z) { return z < 0 ? -1 : (z > 0 ? 1 : 0); }

Rational pow(const Rational& base, unsigned exp);

/// Renders "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);

}  // namespace lazcad

#endif
