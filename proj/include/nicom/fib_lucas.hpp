#ifndef NICOM_FIB_LUCAS_HPP
#define NICOM_FIB_LUCAS_HPP

// Fibonacci and Lucas numbers at arbitrary precision, the F_n - 1
// factorizations by n mod 4, and gcd/lcm over BigInt.

#include "nicom/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace nicom {

namespace detail {

// (F_n, F_{n+1}) by fast doubling:
//   F_{2m}   = F_m (2 F_{m+1} - F_m)
//   F_{2m+1} = F_m^2 + F_{m+1}^2
inline std::pair<BigInt, BigInt> fib_pair(std::uint64_t n) {
  BigInt a = 0;  // F_m
  BigInt b = 1;  // F_{m+1}
  int top = 63;
  while (top >= 0 && ((n >> top) & 1u) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if ((n >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

inline std::uint64_t checked_index(std::int64_t n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": index must be nonnegative, got " +
                                std::to_string(n));
  }
  return static_cast<std::uint64_t>(n);
}

}  // namespace detail

/// F_n with F_0 = 0, F_1 = 1.
inline BigInt fib(std::int64_t n) {
  return detail::fib_pair(detail::checked_index(n, "fib")).first;
}

/// L_n with L_0 = 2, L_1 = 1. Uses L_n = 2 F_{n+1} - F_n.
inline BigInt lucas(std::int64_t n) {
  auto [f, g] = detail::fib_pair(detail::checked_index(n, "lucas"));
  return 2 * g - f;
}

/// Fibonacci and Lucas factor of F_n - 1, chosen by n mod 4:
///   F_{4l}-1   = F_{2l+1} L_{2l-1}     F_{4l+1}-1 = F_{2l} L_{2l+1}
///   F_{4l+2}-1 = F_{2l} L_{2l+2}       F_{4l+3}-1 = F_{2l+2} L_{2l+1}
/// Requires n >= 3 so that every factor index is nonnegative.
struct FibMinusOneFactors {
  BigInt fibonacci;
  BigInt lucas;
  std::int64_t fibonacci_index;
  std::int64_t lucas_index;
};

inline FibMinusOneFactors fib_minus_one_factors(std::int64_t n) {
  if (n < 3) {
    throw std::invalid_argument("fib_minus_one_factors: n must be >= 3, got " + std::to_string(n));
  }
  const std::int64_t l = n / 4;
  std::int64_t fi = 0;
  std::int64_t li = 0;
  switch (n % 4) {
    case 0: fi = 2 * l + 1; li = 2 * l - 1; break;
    case 1: fi = 2 * l;     li = 2 * l + 1; break;
    case 2: fi = 2 * l;     li = 2 * l + 2; break;
    default: fi = 2 * l + 2; li = 2 * l + 1; break;
  }
  return {fib(fi), lucas(li), fi, li};
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a);
  BigInt y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

/// lcm(|a|, |b|); lcm(0, x) = 0.
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd(a, b) * abs(b);
}

}  // namespace nicom

#endif  // NICOM_FIB_LUCAS_HPP
