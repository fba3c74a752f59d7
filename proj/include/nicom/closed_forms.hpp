#ifndef NICOM_CLOSED_FORMS_HPP
#define NICOM_CLOSED_FORMS_HPP

// Closed forms for the first and third moments at m = F_K - 1, the
// Q-difference and LCM formulas built on them, and the cross-multiplied
// integer form of the Q-difference identity.
//
// Everything is evaluated through fast-doubling fib/lucas, so K in the
// thousands costs a handful of big multiplications.

#include "nicom/bigint.hpp"
#include "nicom/fib_lucas.hpp"
#include "nicom/moment_sums.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nicom {

namespace detail {

inline void require_index(std::int64_t k, std::int64_t lo, const char* what) {
  if (k < lo) {
    throw std::invalid_argument(std::string(what) + ": index must be >= " + std::to_string(lo) +
                                ", got " + std::to_string(k));
  }
}

inline BigInt fm1(std::int64_t n) { return fib(n) - 1; }

}  // namespace detail

/// A(k,1) = (F_{k+1} - 1)(F_k - 1) / 2.
inline BigInt lemma2_a(std::int64_t k) {
  detail::require_index(k, 1, "lemma2_a");
  return exact_div(detail::fm1(k + 1) * detail::fm1(k), 2, "lemma2_a");
}

/// A'(k,1) = (F_{k+2} - 1)(F_k - 1) / 2.
inline BigInt lemma2_a_prime(std::int64_t k) {
  detail::require_index(k, 1, "lemma2_a_prime");
  return exact_div(detail::fm1(k + 2) * detail::fm1(k), 2, "lemma2_a_prime");
}

/// A(K,3). Even K = 2k and odd K = 2k-1 take different forms; the odd one
/// carries a factor (L_{4k} - 3 L_{2k+1} - L_{2k} + 3) / 5.
inline BigInt lemma3_a3(std::int64_t K) {
  detail::require_index(K, 1, "lemma3_a3");
  if (K % 2 == 0) {
    const std::int64_t k = K / 2;
    const BigInt mid = detail::fm1(2 * k + 1);
    return exact_div(detail::fm1(2 * k - 1) * mid * mid * detail::fm1(2 * k + 2), 4,
                     "lemma3_a3 (even)");
  }
  const std::int64_t k = (K + 1) / 2;
  const BigInt lucas_part = lucas(4 * k) - 3 * lucas(2 * k + 1) - lucas(2 * k) + 3;
  // The 1/4 and 1/5 need not divide their own factors (K = 3 gives 2/4 * 10/5).
  return exact_div(detail::fm1(2 * k - 1) * detail::fm1(2 * k) * lucas_part, 20, "lemma3_a3 (odd)");
}

/// A'(K,3), split by the parity of K like lemma3_a3.
inline BigInt lemma4_a_prime3(std::int64_t K) {
  detail::require_index(K, 1, "lemma4_a_prime3");
  if (K % 2 == 0) {
    const std::int64_t k = K / 2;
    const BigInt lucas_part = lucas(4 * k + 4) - 5 * lucas(2 * k + 3) + 13;
    return exact_div(detail::fm1(2 * k) * detail::fm1(2 * k + 2) * lucas_part, 20,
                     "lemma4_a_prime3 (even)");
  }
  const std::int64_t k = (K + 1) / 2;
  const BigInt lucas_part = lucas(4 * k + 2) - 5 * lucas(2 * k + 2) + 7;
  return exact_div(detail::fm1(2 * k - 1) * detail::fm1(2 * k + 1) * lucas_part, 20,
                   "lemma4_a_prime3 (odd)");
}

/// Branch selection for the Q-difference at m = F_K - 1. K = 2k uses the
/// even display and K = 2k-1 the odd one, each with an inner split on the
/// parity of k; together that is a dispatch on K mod 4.
struct ParityBranch {
  std::int64_t index;  // K
  std::int64_t half;   // k
  bool index_even;
  bool half_even;
  int residue_mod4;
};

constexpr ParityBranch theorem1_branch(std::int64_t K) {
  const bool even = K % 2 == 0;
  const std::int64_t k = even ? K / 2 : (K + 1) / 2;
  return {K, k, even, k % 2 == 0, static_cast<int>(K % 4)};
}

class DegenerateIndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Q(phi^2, F_K - 1) - Q(phi, F_K - 1) = 1 - deficit / denominator.
struct Theorem1Defect {
  BigInt deficit;
  BigInt denominator;
};

inline Theorem1Defect theorem1_defect(std::int64_t K) {
  if (K <= 2) {
    throw std::invalid_argument("theorem1: K must be >= 3 (m = F_K - 1 is zero for K <= 2), got " +
                                std::to_string(K));
  }
  const ParityBranch b = theorem1_branch(K);
  const std::int64_t k = b.half;
  Theorem1Defect d;
  if (b.index_even) {
    d.deficit = 1;
    if (b.half_even) {
      const BigInt f = fib(k + 1);
      d.denominator = f * f * lucas(k + 2) * lucas(k - 1);
    } else {
      const BigInt l = lucas(k + 1);
      d.denominator = l * l * fib(k + 2) * fib(k - 1);
    }
  } else if (b.half_even) {
    const BigInt f = fib(k);
    const BigInt l = lucas(k - 1);
    d.deficit = fib(k - 2);
    d.denominator = fib(k + 1) * f * f * l * l;
  } else {
    const BigInt l = lucas(k);
    const BigInt f = fib(k - 1);
    d.deficit = lucas(k - 2);
    d.denominator = lucas(k + 1) * l * l * f * f;
  }
  if (d.denominator == 0) {
    throw DegenerateIndexError("theorem1: degenerate index K = " + std::to_string(K));
  }
  return d;
}

/// Right-hand side of the Q-difference identity at index K >= 3.
inline Rational theorem1_rhs(std::int64_t K) {
  const Theorem1Defect d = theorem1_defect(K);
  return Rational(1) - Rational(d.deficit, d.denominator);
}

/// lcm(A(2k,1), A'(2k,1)) in product form; zero at k = 1 through F_0.
inline BigInt theorem6_rhs(std::int64_t k) {
  detail::require_index(k, 1, "theorem6_rhs");
  BigInt p;
  if (k % 2 == 0) {
    p = fib(k + 1) * fib(k) * lucas(k + 2) * lucas(k + 1) * lucas(k - 1);
  } else {
    p = fib(k + 2) * fib(k + 1) * fib(k - 1) * lucas(k + 1) * lucas(k);
  }
  return exact_div(p, 2, "theorem6_rhs");
}

/// A(K,1), A(K,3), A'(K,1), A'(K,3) from a single engine.
struct FirstThirdMoments {
  BigInt a1;
  BigInt a3;
  BigInt a_prime1;
  BigInt a_prime3;
};

inline FirstThirdMoments closed_moments(std::int64_t K) {
  return {lemma2_a(K), lemma3_a3(K), lemma2_a_prime(K), lemma4_a_prime3(K)};
}

inline FirstThirdMoments recursive_moments(std::int64_t K, MomentTable& table) {
  return {a_recursive({K, 1, 0}, table), a_recursive({K, 3, 0}, table), a_prime(K, 1, table),
          a_prime(K, 3, table)};
}

inline FirstThirdMoments brute_moments(std::int64_t K, std::uint64_t guard = kDefaultBruteGuard) {
  return {a_brute({K, 1, 0}, guard), a_brute({K, 3, 0}, guard), a_prime_brute(K, 1, guard),
          a_prime_brute(K, 3, guard)};
}

struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
  bool equal() const { return lhs == rhs; }
};

/// The Q-difference identity at index K, cleared of denominators:
///   D (A'_3 A_1^2 - A_3 A'_1^2) = A_1^2 A'_1^2 (D - N)
/// where the claimed difference is 1 - N/D.
inline IdentitySides theorem1_cross_sides(std::int64_t K, const FirstThirdMoments& m) {
  const Theorem1Defect d = theorem1_defect(K);
  const BigInt a1sq = m.a1 * m.a1;
  const BigInt ap1sq = m.a_prime1 * m.a_prime1;
  return {d.denominator * (m.a_prime3 * a1sq - m.a3 * ap1sq),
          a1sq * ap1sq * (d.denominator - d.deficit)};
}

/// Factor shared by D and A(K,1) that is divided out of the cross-multiplied
/// identity for odd K mod 4. After the division both sides are linearly
/// recurrent in l with roots among {phi^(4i) : |i| <= 10}, as for K = 4l;
/// without it the odd classes need the 22 roots phi^(4i+2). From
/// F_{4l+2}-1 = F_{2l} L_{2l+2} style factorizations: A(4l+1,1) carries
/// L_{2l+1} and A(4l+3,1) carries F_{2l+3}.
inline BigInt theorem1_common_factor(std::int64_t K) {
  const std::int64_t l = K / 4;
  switch (K % 4) {
    case 1: return lucas(2 * l + 1);
    case 3: return fib(2 * l + 3);
    default: return 1;
  }
}

/// theorem1_cross_sides with theorem1_common_factor(K) divided out of both sides.
inline IdentitySides theorem1_reduced_sides(std::int64_t K, const FirstThirdMoments& m) {
  const Theorem1Defect d = theorem1_defect(K);
  const BigInt g = theorem1_common_factor(K);
  const BigInt a1sq = m.a1 * m.a1;
  const BigInt ap1sq = m.a_prime1 * m.a_prime1;
  return {exact_div(d.denominator, g, "theorem1_reduced_sides (denominator)") *
              (m.a_prime3 * a1sq - m.a3 * ap1sq),
          exact_div(a1sq * ap1sq, g, "theorem1_reduced_sides (moments)") *
              (d.denominator - d.deficit)};
}

/// The K = 4l case written out directly:
///   F_{2l+1}^2 L_{2l+2} L_{2l-1} (A'(4l,3) A(4l,1)^2 - A(4l,3) A'(4l,1)^2)
///     = A(4l,1)^2 A'(4l,1)^2 (F_{2l+1}^2 L_{2l+2} L_{2l-1} - 1)
inline IdentitySides case4l_sides(std::int64_t ell, const FirstThirdMoments& m) {
  detail::require_index(ell, 1, "case4l_sides");
  const BigInt f = fib(2 * ell + 1);
  const BigInt factor = f * f * lucas(2 * ell + 2) * lucas(2 * ell - 1);
  const BigInt a1sq = m.a1 * m.a1;
  const BigInt ap1sq = m.a_prime1 * m.a_prime1;
  return {factor * (m.a_prime3 * a1sq - m.a3 * ap1sq), a1sq * ap1sq * (factor - 1)};
}

/// Moments from the closed forms.
inline IdentitySides case4l_sides(std::int64_t ell) {
  detail::require_index(ell, 1, "case4l_sides");
  return case4l_sides(ell, closed_moments(4 * ell));
}

/// Moments from the recursive engine.
inline IdentitySides case4l_sides(std::int64_t ell, MomentTable& table) {
  detail::require_index(ell, 1, "case4l_sides");
  return case4l_sides(ell, recursive_moments(4 * ell, table));
}

}  // namespace nicom

#endif  // NICOM_CLOSED_FORMS_HPP
