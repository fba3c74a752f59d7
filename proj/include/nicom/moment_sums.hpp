#ifndef NICOM_MOMENT_SUMS_HPP
#define NICOM_MOMENT_SUMS_HPP

// Moment sums A(k,s,j) = sum_{n=1}^{F_k - 1} n^j floor(phi n)^s.
//
// Two engines: the literal sum (bounded by a term guard) and the
// Fibonacci-step recursion
//
//   A(k+1,s,j) = A(k,s,j) + F_k^j (F_{k+1} - eps_k)^s
//              + sum_{l<=j} sum_{i<=s} C(j,l) C(s,i) F_k^l F_{k+1}^i A(k-1, s-i, j-l)
//
// which follows from floor(phi F_k) = F_{k+1} - eps_k and the shift
// floor(phi (F_k + n)) = F_{k+1} + floor(phi n) for 1 <= n < F_{k-1}.
// A'(k,s) uses floor(phi^2 n) = n + floor(phi n) and a binomial expansion.

#include "nicom/beatty_floor.hpp"
#include "nicom/bigint.hpp"
#include "nicom/fib_lucas.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicom {

/// Index (k, s, j) of A(k,s,j): Fibonacci index, floor power, plain power.
struct MomentKey {
  std::int64_t k = 1;
  unsigned s = 0;
  unsigned j = 0;

  friend auto operator<=>(const MomentKey&, const MomentKey&) = default;
};

inline void validate(const MomentKey& key) {
  if (key.k < 1) {
    throw std::invalid_argument("moment index k must be >= 1, got " + std::to_string(key.k));
  }
}

inline constexpr std::uint64_t kDefaultBruteGuard = 1'000'000;

/// Term guard for the brute engine; NICOM_BRUTE_GUARD overrides the default.
inline std::uint64_t brute_guard_from_env() {
  const char* raw = std::getenv("NICOM_BRUTE_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultBruteGuard;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw std::invalid_argument(std::string("NICOM_BRUTE_GUARD is not a nonnegative integer: ") + raw);
  }
  return v;
}

class BruteForceGuardError : public std::runtime_error {
 public:
  BruteForceGuardError(const BigInt& terms, std::uint64_t guard)
      : std::runtime_error("too large for brute force: " + terms.str() +
                           " terms exceeds the guard of " + std::to_string(guard) +
                           " (set NICOM_BRUTE_GUARD to raise it)"),
        guard_(guard) {}

  std::uint64_t guard() const noexcept { return guard_; }

 private:
  std::uint64_t guard_;
};

namespace detail {

__extension__ typedef unsigned __int128 u128;

inline BigInt from_u128(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

// Accumulates in 128-bit words while terms fit and flushes to BigInt.
class Accumulator {
 public:
  void add(u128 term) {
    if (term > kMax - partial_) flush();
    partial_ += term;
  }
  void add(const BigInt& term) { total_ += term; }
  BigInt result() {
    flush();
    return total_;
  }

 private:
  static constexpr u128 kMax = ~static_cast<u128>(0);
  void flush() {
    total_ += from_u128(partial_);
    partial_ = 0;
  }
  u128 partial_ = 0;
  BigInt total_ = 0;
};

// x^e in 128 bits, or nullopt on overflow.
inline std::optional<u128> pow_u128(std::uint64_t x, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (x != 0 && r > (~static_cast<u128>(0)) / x) return std::nullopt;
    r *= x;
  }
  return r;
}

inline std::optional<u128> mul_u128(u128 a, u128 b) {
  if (a != 0 && b > (~static_cast<u128>(0)) / a) return std::nullopt;
  return a * b;
}

}  // namespace detail

/// sum_{n=1}^{m} n^j floor(alpha n)^s, term by term. No guard; callers bound m.
inline BigInt beatty_moment_literal(std::uint64_t m, unsigned s, unsigned j, Alpha alpha) {
  if (m >= detail::kSmallFloorLimit) {
    throw std::invalid_argument("beatty_moment_literal: range too large for a literal sum");
  }
  detail::Accumulator acc;
  for (std::uint64_t n = 1; n <= m; ++n) {
    const std::uint64_t f = alpha == Alpha::phi ? floor_phi_u64(n) : n + floor_phi_u64(n);
    auto np = detail::pow_u128(n, j);
    auto fp = detail::pow_u128(f, s);
    std::optional<detail::u128> term;
    if (np && fp) term = detail::mul_u128(*np, *fp);
    if (term) {
      acc.add(*term);
    } else {
      acc.add(pow(BigInt(n), j) * pow(BigInt(f), s));
    }
  }
  return acc.result();
}

namespace detail {

inline std::uint64_t brute_terms(std::int64_t k, std::uint64_t guard) {
  const BigInt terms = fib(k) - 1;
  if (terms > guard) throw BruteForceGuardError(terms, guard);
  return static_cast<std::uint64_t>(terms);
}

}  // namespace detail

/// A(k,s,j) as the literal sum over n = 1..F_k - 1.
inline BigInt a_brute(const MomentKey& key, std::uint64_t guard = kDefaultBruteGuard) {
  validate(key);
  return beatty_moment_literal(detail::brute_terms(key.k, guard), key.s, key.j, Alpha::phi);
}

/// A'(k,s) as the literal sum of floor(phi^2 n)^s over n = 1..F_k - 1.
inline BigInt a_prime_brute(std::int64_t k, unsigned s, std::uint64_t guard = kDefaultBruteGuard) {
  validate(MomentKey{k, s, 0});
  return beatty_moment_literal(detail::brute_terms(k, guard), s, 0, Alpha::phi_squared);
}

/// Upper bound 4(s+j)+6 on the recurrence order of k -> A(k,s,j).
constexpr std::int64_t order_bound(std::int64_t s, std::int64_t j) { return 4 * (s + j) + 6; }

/// Memo for the recursive engine. Internally synchronized: concurrent
/// callers see a consistent map and never a partially written value.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(const MomentTable&) = delete;
  MomentTable& operator=(const MomentTable&) = delete;

  /// A(k,s,j), materializing every (k', s', j') with k' <= k, s' <= s, j' <= j.
  BigInt value(const MomentKey& key) {
    validate(key);
    std::lock_guard lock(mu_);
    ensure(key.k, key.s, key.j);
    return values_.at(key);
  }

  /// Stored value, if materialized.
  std::optional<BigInt> find(const MomentKey& key) const {
    std::lock_guard lock(mu_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return values_.size();
  }

  std::int64_t max_k() const {
    std::lock_guard lock(mu_);
    return max_k_;
  }

  /// C(n, r) from the cached Pascal triangle.
  BigInt binomial(unsigned n, unsigned r) {
    std::lock_guard lock(mu_);
    return binom(n, r);
  }

 private:
  const BigInt& binom(unsigned n, unsigned r) {
    while (pascal_.size() <= n) {
      const std::size_t row = pascal_.size();
      std::vector<BigInt> next(row + 1, BigInt(1));
      for (std::size_t c = 1; c < row; ++c) next[c] = pascal_[row - 1][c - 1] + pascal_[row - 1][c];
      pascal_.push_back(std::move(next));
    }
    return pascal_[n][r];
  }

  const BigInt& fib_at(std::int64_t n) {
    if (fib_.empty()) {
      fib_.push_back(0);
      fib_.push_back(1);
    }
    while (static_cast<std::int64_t>(fib_.size()) <= n) {
      const std::size_t m = fib_.size();
      fib_.push_back(fib_[m - 1] + fib_[m - 2]);
    }
    return fib_[static_cast<std::size_t>(n)];
  }

  void ensure(std::int64_t k_max, unsigned s_max, unsigned j_max) {
    binom(std::max(s_max, j_max), 0);
    for (std::int64_t k = 1; k <= std::min<std::int64_t>(k_max, 2); ++k) {
      for (unsigned s = 0; s <= s_max; ++s)
        for (unsigned j = 0; j <= j_max; ++j) values_.try_emplace(MomentKey{k, s, j}, 0);
    }
    for (std::int64_t k = 3; k <= k_max; ++k) {
      if (complete_row(k, s_max, j_max)) continue;
      // Step from (k-1, k-2) to k with F = F_{k-1}, G = F_k.
      const BigInt g = fib_at(k);
      const BigInt f = fib_at(k - 1);
      const int eps = epsilon(k - 1).value;
      std::vector<BigInt> f_pow(j_max + 1), g_pow(s_max + 1), g_eps_pow(s_max + 1);
      f_pow[0] = 1;
      for (unsigned l = 1; l <= j_max; ++l) f_pow[l] = f_pow[l - 1] * f;
      g_pow[0] = 1;
      g_eps_pow[0] = 1;
      for (unsigned i = 1; i <= s_max; ++i) {
        g_pow[i] = g_pow[i - 1] * g;
        g_eps_pow[i] = g_eps_pow[i - 1] * (g - eps);
      }
      for (unsigned s = 0; s <= s_max; ++s) {
        for (unsigned j = 0; j <= j_max; ++j) {
          const MomentKey key{k, s, j};
          if (values_.contains(key)) continue;
          BigInt v = values_.at(MomentKey{k - 1, s, j}) + f_pow[j] * g_eps_pow[s];
          for (unsigned l = 0; l <= j; ++l) {
            for (unsigned i = 0; i <= s; ++i) {
              const BigInt& prev = values_.at(MomentKey{k - 2, s - i, j - l});
              if (prev == 0) continue;
              v += binom(j, l) * binom(s, i) * f_pow[l] * g_pow[i] * prev;
            }
          }
          values_.emplace(key, std::move(v));
        }
      }
    }
    max_k_ = std::max(max_k_, k_max);
  }

  bool complete_row(std::int64_t k, unsigned s_max, unsigned j_max) const {
    for (unsigned s = 0; s <= s_max; ++s)
      for (unsigned j = 0; j <= j_max; ++j)
        if (!values_.contains(MomentKey{k, s, j})) return false;
    return true;
  }

  mutable std::mutex mu_;
  std::map<MomentKey, BigInt> values_;
  std::vector<BigInt> fib_;
  std::vector<std::vector<BigInt>> pascal_;
  std::int64_t max_k_ = 0;
};

/// A(k,s,j) by the Fibonacci-step recursion from A(1,.,.) = A(2,.,.) = 0.
inline BigInt a_recursive(const MomentKey& key, MomentTable& table) { return table.value(key); }

/// A'(k,s) = sum_i C(s,i) A(k, s-i, i).
inline BigInt a_prime(std::int64_t k, unsigned s, MomentTable& table) {
  validate(MomentKey{k, s, 0});
  BigInt total = 0;
  for (unsigned i = 0; i <= s; ++i) {
    total += table.binomial(s, i) * a_recursive(MomentKey{k, s - i, i}, table);
  }
  return total;
}

}  // namespace nicom

#endif  // NICOM_MOMENT_SUMS_HPP
