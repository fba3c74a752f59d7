#ifndef NICOM_RECURRENCE_PROVER_HPP
#define NICOM_RECURRENCE_PROVER_HPP

// Identity certificates for linearly recurrent integer sequences.
//
// If two sequences are both annihilated by a polynomial of degree d with
// simple roots, agreement on d consecutive terms forces agreement
// everywhere. The polynomial is built exactly in Z[phi] from a symbolic
// root set. That each side's roots lie in that set comes from the
// Fibonacci-step recursion for the moment sums and is taken as given;
// the annihilation windows only corroborate it.

#include "nicom/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicom {

/// a + b phi with phi^2 = phi + 1.
struct GoldenNumber {
  BigInt a = 0;
  BigInt b = 0;

  bool is_integer() const { return b == 0; }

  friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;

  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a, -x.b}; }
  // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    const BigInt bd = x.b * y.b;
    return {x.a * y.a + bd, x.a * y.b + x.b * y.a + bd};
  }

  std::string to_string() const { return a.str() + (b < 0 ? " - " : " + ") + abs(b).str() + "*phi"; }
};

/// phi^l in Z[phi]; negative l uses phi^-1 = phi - 1.
inline GoldenNumber golden_power(std::int64_t l) {
  const GoldenNumber base = l >= 0 ? GoldenNumber{0, 1} : GoldenNumber{-1, 1};
  std::uint64_t e = l >= 0 ? static_cast<std::uint64_t>(l) : static_cast<std::uint64_t>(-l);
  GoldenNumber result{1, 0};
  GoldenNumber sq = base;
  while (e != 0) {
    if (e & 1u) result = result * sq;
    sq = sq * sq;
    e >>= 1;
  }
  return result;
}

/// Symbolic root sets, all closed under phi -> -1/phi.
enum class RootShape {
  signed_phi_powers,    // {+-phi^l : |l| <= B}, 2(2B+1) roots
  even_phi_powers,      // {phi^(2l) : |l| <= B}, 2B+1 roots
  phi4_powers,          // {phi^(4l) : |l| <= B}, 2B+1 roots
  phi4_shifted_powers,  // {phi^(4l+2) : -B-1 <= l <= B}, 2B+2 roots
};

struct RootSetSpec {
  RootShape shape = RootShape::even_phi_powers;
  std::int64_t bound = 0;

  friend bool operator==(const RootSetSpec&, const RootSetSpec&) = default;
};

inline std::string shape_name(RootShape s) {
  switch (s) {
    case RootShape::signed_phi_powers: return "signed-phi-powers";
    case RootShape::even_phi_powers: return "even-phi-powers";
    case RootShape::phi4_powers: return "phi4-powers";
    case RootShape::phi4_shifted_powers: return "phi4-shifted-powers";
  }
  return "unknown";
}

inline std::size_t cardinality(const RootSetSpec& spec) {
  const auto b = static_cast<std::size_t>(spec.bound);
  switch (spec.shape) {
    case RootShape::signed_phi_powers: return 2 * (2 * b + 1);
    case RootShape::phi4_shifted_powers: return 2 * b + 2;
    default: return 2 * b + 1;
  }
}

inline std::vector<GoldenNumber> roots(const RootSetSpec& spec) {
  if (spec.bound < 0) throw std::invalid_argument("root set bound must be >= 0");
  const std::int64_t B = spec.bound;
  std::vector<GoldenNumber> out;
  switch (spec.shape) {
    case RootShape::signed_phi_powers:
      for (std::int64_t l = -B; l <= B; ++l) {
        out.push_back(golden_power(l));
        out.push_back(-golden_power(l));
      }
      break;
    case RootShape::even_phi_powers:
      for (std::int64_t l = -B; l <= B; ++l) out.push_back(golden_power(2 * l));
      break;
    case RootShape::phi4_powers:
      for (std::int64_t l = -B; l <= B; ++l) out.push_back(golden_power(4 * l));
      break;
    case RootShape::phi4_shifted_powers:
      for (std::int64_t l = -B - 1; l <= B; ++l) out.push_back(golden_power(4 * l + 2));
      break;
  }
  return out;
}

/// Integer polynomial, constant term first.
struct IntPolynomial {
  std::vector<BigInt> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// prod (x - alpha) over the root set, expanded in Z[phi].
inline IntPolynomial char_poly(const RootSetSpec& spec) {
  std::vector<GoldenNumber> poly{GoldenNumber{1, 0}};
  for (const GoldenNumber& r : roots(spec)) {
    std::vector<GoldenNumber> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - r * poly[i];
    }
    poly = std::move(next);
  }
  IntPolynomial out;
  out.coefficients.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].is_integer()) {
      throw InternalConsistencyError("char_poly(" + shape_name(spec.shape) + ", B=" +
                                     std::to_string(spec.bound) + "): coefficient " +
                                     std::to_string(i) + " has a phi part: " + poly[i].to_string());
    }
    out.coefficients.push_back(std::move(poly[i].a));
  }
  return out;
}

namespace detail {

// First window start n with sum_i c_i u_{n+i} != 0.
inline std::optional<std::size_t> first_unannihilated(const IntPolynomial& p,
                                                      std::span<const BigInt> terms) {
  const std::size_t d = p.degree();
  if (terms.size() < d + 1) {
    throw std::invalid_argument("annihilates: need at least degree + 1 = " + std::to_string(d + 1) +
                                " terms, got " + std::to_string(terms.size()));
  }
  for (std::size_t n = 0; n + d < terms.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= d; ++i) acc += p.coefficients[i] * terms[n + i];
    if (acc != 0) return n;
  }
  return std::nullopt;
}

}  // namespace detail

/// True iff p, read as a shift recurrence, kills every window of terms.
inline bool annihilates(const IntPolynomial& p, std::span<const BigInt> terms) {
  return !detail::first_unannihilated(p, terms).has_value();
}

enum class Verdict { certified, refuted };

struct Certificate {
  std::string claim;
  RootSetSpec spec;
  std::size_t degree = 0;
  std::size_t terms_agreed = 0;
  std::size_t window = 0;  // terms checked against the annihilator, per side
  Verdict verdict = Verdict::refuted;
  std::optional<std::int64_t> refuted_at;  // 1-based sequence index
  std::string reason;

  bool certified() const { return verdict == Verdict::certified; }
};

using SequenceGenerator = std::function<BigInt(std::int64_t)>;

/// Checks lhs(i) == rhs(i) for i = 1..d, then that char_poly(spec) kills
/// both sides over i = 1..d + extra_window.
inline Certificate certify_identity(const std::string& claim, const SequenceGenerator& lhs,
                                    const SequenceGenerator& rhs, const RootSetSpec& spec,
                                    std::size_t extra_window) {
  if (extra_window == 0) {
    throw std::invalid_argument("certify_identity: extra_window must be >= 1 to test annihilation");
  }
  const IntPolynomial p = char_poly(spec);
  Certificate cert;
  cert.claim = claim;
  cert.spec = spec;
  cert.degree = p.degree();
  cert.window = cert.degree + extra_window;

  std::vector<BigInt> left, right;
  left.reserve(cert.window);
  right.reserve(cert.window);
  for (std::size_t i = 1; i <= cert.window; ++i) {
    left.push_back(lhs(static_cast<std::int64_t>(i)));
    right.push_back(rhs(static_cast<std::int64_t>(i)));
    if (i <= cert.degree) {
      if (left.back() != right.back()) {
        cert.refuted_at = static_cast<std::int64_t>(i);
        cert.reason = "sides differ: " + left.back().str() + " != " + right.back().str();
        return cert;
      }
      cert.terms_agreed = i;
    }
  }
  for (const auto& [side, terms] : {std::pair{"lhs", &left}, std::pair{"rhs", &right}}) {
    if (auto n = detail::first_unannihilated(p, *terms)) {
      cert.refuted_at = static_cast<std::int64_t>(*n + cert.degree + 1);
      cert.reason = std::string(side) + " is not annihilated by the characteristic polynomial";
      return cert;
    }
  }
  cert.verdict = Verdict::certified;
  return cert;
}

}  // namespace nicom

#endif  // NICOM_RECURRENCE_PROVER_HPP
