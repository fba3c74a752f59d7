#ifndef NICOM_BEATTY_FLOOR_HPP
#define NICOM_BEATTY_FLOOR_HPP

// Exact floor(phi n) and floor(phi^2 n) without floating point.

#include "nicom/bigint.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nicom {

/// The two Beatty moduli handled here.
enum class Alpha { phi, phi_squared };

/// (1 + (-1)^k) / 2: one for even k, zero for odd k.
struct Epsilon {
  int value;
  friend bool operator==(Epsilon, Epsilon) = default;
};

constexpr Epsilon epsilon(std::int64_t k) { return Epsilon{k % 2 == 0 ? 1 : 0}; }

/// floor(sqrt(n)) for n < 2^64. Integer Newton from an upper bound.
constexpr std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);  // x >= sqrt(n)
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

/// floor(sqrt(n)): the unique r with r^2 <= n < (r+1)^2.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input " + n.str());
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return BigInt(isqrt_u64(static_cast<std::uint64_t>(n)));
  }
  const std::size_t bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

namespace detail {

inline void require_positive(const BigInt& n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " + n.str());
}

// 5 n^2 < 2^64 whenever n < 2^31.
constexpr std::uint64_t kSmallFloorLimit = std::uint64_t{1} << 31;

}  // namespace detail

/// floor(phi n) for n < 2^31, the fast path used by brute-force sums.
constexpr std::uint64_t floor_phi_u64(std::uint64_t n) {
  return (n + isqrt_u64(5 * n * n)) / 2;
}

/// floor(phi n) = floor((n + isqrt(5 n^2)) / 2). Exact since phi n is irrational.
inline BigInt floor_phi(const BigInt& n) {
  detail::require_positive(n, "floor_phi");
  if (n < detail::kSmallFloorLimit) {
    return BigInt(floor_phi_u64(static_cast<std::uint64_t>(n)));
  }
  return (n + isqrt(5 * n * n)) >> 1;
}

/// floor(phi^2 n) = n + floor(phi n).
inline BigInt floor_phi2(const BigInt& n) {
  detail::require_positive(n, "floor_phi2");
  return n + floor_phi(n);
}

}  // namespace nicom

#endif  // NICOM_BEATTY_FLOOR_HPP
