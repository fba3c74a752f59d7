#ifndef NICOM_QRATIO_HPP
#define NICOM_QRATIO_HPP

// Q(alpha, m) = sum floor(alpha n)^3 / (sum floor(alpha n))^2 over n = 1..m,
// as an exact reduced fraction, for alpha in {phi, phi^2}.

#include "nicom/beatty_floor.hpp"
#include "nicom/bigint.hpp"
#include "nicom/closed_forms.hpp"
#include "nicom/fib_lucas.hpp"
#include "nicom/moment_sums.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace nicom {

/// K >= 3 with F_K = v, if v is such a Fibonacci number.
inline std::optional<std::int64_t> fibonacci_index_of(const BigInt& v) {
  if (v < 2) return std::nullopt;
  BigInt a = 1, b = 2;  // F_2, F_3
  std::int64_t k = 3;
  while (b < v) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
    ++k;
  }
  if (b == v) return k;
  return std::nullopt;
}

inline Rational q_from_sums(const BigInt& cubes, const BigInt& firsts) {
  return Rational(cubes, firsts * firsts);
}

/// Q(alpha, m). Literal sums when m is within the guard; otherwise m must be
/// F_K - 1 and the sums come from the closed forms.
inline Rational q_value(Alpha alpha, const BigInt& m, std::uint64_t guard = kDefaultBruteGuard) {
  if (m < 0) throw std::invalid_argument("Q: m must be >= 1, got " + m.str());
  if (m == 0) throw std::invalid_argument("Q undefined at m = 0");
  if (m <= guard) {
    const auto mm = static_cast<std::uint64_t>(m);
    return q_from_sums(beatty_moment_literal(mm, 3, 0, alpha), beatty_moment_literal(mm, 1, 0, alpha));
  }
  if (auto K = fibonacci_index_of(m + 1)) {
    if (alpha == Alpha::phi) return q_from_sums(lemma3_a3(*K), lemma2_a(*K));
    return q_from_sums(lemma4_a_prime3(*K), lemma2_a_prime(*K));
  }
  throw BruteForceGuardError(m, guard);
}

/// Q(phi^2, m) - Q(phi, m) from one set of moment sums at m = F_K - 1.
inline Rational q_diff_from(const FirstThirdMoments& m) {
  return q_from_sums(m.a_prime3, m.a_prime1) - q_from_sums(m.a3, m.a1);
}

/// Q(phi^2, F_K - 1) - Q(phi, F_K - 1) for K >= 3.
inline Rational q_diff(std::int64_t K, std::uint64_t guard = kDefaultBruteGuard) {
  if (K <= 2) {
    throw std::invalid_argument("q_diff: K must be >= 3 (m = F_K - 1 is zero for K <= 2), got " +
                                std::to_string(K));
  }
  const BigInt m = fib(K) - 1;
  return q_value(Alpha::phi_squared, m, guard) - q_value(Alpha::phi, m, guard);
}

/// 1^3 + ... + m^3 == (1 + ... + m)^2, by direct summation.
inline bool nicomachus_check(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("nicomachus_check: m must be >= 1");
  BigInt cubes = 0, firsts = 0;
  for (std::uint64_t n = 1; n <= m; ++n) {
    const BigInt b = n;
    cubes += b * b * b;
    firsts += b;
  }
  return cubes == firsts * firsts;
}

/// Rational bracket lo < phi < hi of width 10^-digits / 2.
struct PhiEnclosure {
  Rational lo;
  Rational hi;
};

inline PhiEnclosure phi_enclosure(unsigned digits) {
  const BigInt scale = pow(BigInt(10), digits);
  // r <= sqrt(5) * scale < r + 1, and sqrt(5) * scale is irrational.
  const BigInt r = isqrt(5 * scale * scale);
  return {Rational(scale + r, 2 * scale), Rational(scale + r + 1, 2 * scale)};
}

/// Bounds [lo, hi] on |q - phi| implied by an enclosure.
struct DistanceBounds {
  Rational lo;
  Rational hi;
};

inline DistanceBounds distance_to_phi(const Rational& q, const PhiEnclosure& e) {
  if (q <= e.lo) return {e.lo - q, e.hi - q};
  if (q >= e.hi) return {q - e.hi, q - e.lo};
  return {Rational(0), std::max(q - e.lo, e.hi - q)};
}

}  // namespace nicom

#endif  // NICOM_QRATIO_HPP
