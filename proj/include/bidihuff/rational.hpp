#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bidihuff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^-exponent, exactly.
inline Rational dyadic(unsigned exponent) {
  return Rational(BigInt(1), BigInt(1) << exponent);
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace bidihuff
