#ifndef NICOM_TESTS_ORACLES_HPP
#define NICOM_TESTS_ORACLES_HPP

// Slow reference implementations, kept independent of the library's
// evaluation paths: no fast doubling, no isqrt, no 128-bit accumulation.

#include "nicom/bigint.hpp"

#include <cstdint>
#include <vector>

namespace nicom::oracle {

inline BigInt fib(std::int64_t n) {
  BigInt a = 0, b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

inline BigInt lucas(std::int64_t n) {
  BigInt a = 2, b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

// f = floor(phi n)  <=>  f <= phi n < f + 1  <=>  2f - n <= sqrt(5) n < 2f + 2 - n.
inline bool is_floor_phi(const BigInt& n, const BigInt& f) {
  const BigInt lo = 2 * f - n;
  const BigInt hi = 2 * f + 2 - n;
  const BigInt five_n2 = 5 * n * n;
  const bool lower_ok = lo < 0 || lo * lo < five_n2;  // strict: sqrt(5) n is irrational
  return lower_ok && hi > 0 && five_n2 < hi * hi;
}

// floor(phi n) for n = 1..m, stepping by 1 or 2 and checking the bracket.
inline std::vector<std::int64_t> floor_phi_table(std::int64_t m) {
  std::vector<std::int64_t> out;
  std::int64_t f = 0;
  for (std::int64_t n = 1; n <= m; ++n) {
    f += 1;
    if (!is_floor_phi(n, f)) f += 1;
    out.push_back(f);
  }
  return out;
}

// sum_{n=1}^{F_k-1} n^j floor(phi n)^s and sum floor(phi^2 n)^s, in plain BigInt.
inline BigInt moment(std::int64_t k, unsigned s, unsigned j) {
  const auto m = static_cast<std::int64_t>(fib(k) - 1);
  const auto floors = floor_phi_table(m);
  BigInt total = 0;
  for (std::int64_t n = 1; n <= m; ++n) {
    total += pow(BigInt(n), j) * pow(BigInt(floors[static_cast<std::size_t>(n - 1)]), s);
  }
  return total;
}

inline BigInt moment_prime(std::int64_t k, unsigned s) {
  const auto m = static_cast<std::int64_t>(fib(k) - 1);
  const auto floors = floor_phi_table(m);
  BigInt total = 0;
  for (std::int64_t n = 1; n <= m; ++n) {
    total += pow(BigInt(n + floors[static_cast<std::size_t>(n - 1)]), s);
  }
  return total;
}

}  // namespace nicom::oracle

#endif  // NICOM_TESTS_ORACLES_HPP
