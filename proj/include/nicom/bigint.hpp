#ifndef NICOM_BIGINT_HPP
#define NICOM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nicom {

/// Arbitrary-precision signed integer. Zero is canonical (no negative zero).
using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction of two BigInts with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "num/den" form used by every text and JSON emitter.
inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Division that must be exact; a remainder means a transcribed formula is wrong.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error(std::string("inexact division in ") + what + ": " + num.str() +
                           " is not divisible by " + den.str());
  }
  return q;
}

}  // namespace nicom

#endif  // NICOM_BIGINT_HPP
