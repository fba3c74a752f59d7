#include "nicom/closed_forms.hpp"
#include "nicom/moment_sums.hpp"
#include "nicom/recurrence_prover.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <thread>

using namespace nicom;

TEST(MomentSums, BruteExamples) {
  EXPECT_EQ(a_brute({5, 1, 0}), 14);
  EXPECT_EQ(a_brute({2, 3, 0}), 0);
  EXPECT_EQ(a_brute({4, 3, 0}), 28);
  EXPECT_EQ(a_prime_brute(5, 1), 24);
  EXPECT_EQ(a_prime_brute(3, 3), 8);
}

TEST(MomentSums, BruteGuard) {
  EXPECT_THROW(a_brute({31, 1, 0}), BruteForceGuardError);  // F_31 - 1 > 10^6
  EXPECT_NO_THROW(a_brute({30, 0, 0}));
  try {
    a_brute({12, 1, 0}, 100);
    FAIL() << "expected guard error";
  } catch (const BruteForceGuardError& e) {
    EXPECT_EQ(e.guard(), 100u);
    EXPECT_NE(std::string(e.what()).find("too large for brute force"), std::string::npos);
  }
}

TEST(MomentSums, GuardFromEnvironment) {
  ::setenv("NICOM_BRUTE_GUARD", "77", 1);
  EXPECT_EQ(brute_guard_from_env(), 77u);
  ::setenv("NICOM_BRUTE_GUARD", "lots", 1);
  EXPECT_THROW(brute_guard_from_env(), std::invalid_argument);
  ::unsetenv("NICOM_BRUTE_GUARD");
  EXPECT_EQ(brute_guard_from_env(), kDefaultBruteGuard);
}

TEST(MomentSums, InvalidKey) {
  MomentTable t;
  EXPECT_THROW(a_brute({0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(a_recursive({0, 1, 0}, t), std::invalid_argument);
  EXPECT_THROW(a_prime(-2, 1, t), std::invalid_argument);
}

TEST(MomentSums, RecursiveExamples) {
  MomentTable t;
  EXPECT_EQ(a_recursive({5, 1, 0}, t), 14);
  EXPECT_EQ(a_recursive({1, 7, 3}, t), 0);
  EXPECT_EQ(a_recursive({6, 0, 0}, t), 7);
  EXPECT_EQ(a_prime(5, 1, t), 24);
  EXPECT_EQ(a_prime(3, 3, t), 8);
  EXPECT_EQ(a_prime(2, 3, t), 0);
}

TEST(MomentSums, FrozenOracleValues) {
  // Computed once with an independent big-integer script (floor via math.isqrt).
  MomentTable t;
  EXPECT_EQ(a_recursive({10, 2, 1}, t), 5688210);
  EXPECT_EQ(a_recursive({12, 1, 3}, t), BigInt("19638054372"));
  EXPECT_EQ(a_recursive({15, 4, 0}, t), BigInt("115012780131697"));
  EXPECT_EQ(a_recursive({18, 0, 4}, t), BigInt("23018248317021132"));
  EXPECT_EQ(a_prime(12, 2, t), 6724432);
  EXPECT_EQ(a_prime(15, 3, t), BigInt("618322674312"));
}

TEST(MomentSums, BaseRowsAreZero) {
  MomentTable t;
  for (unsigned s = 0; s <= 4; ++s)
    for (unsigned j = 0; j <= 4; ++j) {
      EXPECT_EQ(a_recursive({1, s, j}, t), 0);
      EXPECT_EQ(a_recursive({2, s, j}, t), 0);
    }
}

TEST(MomentSums, RecursiveMatchesBruteOnGrid) {
  MomentTable t;
  for (std::int64_t k = 1; k <= 18; ++k)
    for (unsigned s = 0; s <= 4; ++s)
      for (unsigned j = 0; s + j <= 4; ++j) {
        ASSERT_EQ(a_recursive({k, s, j}, t), a_brute({k, s, j})) << k << ',' << s << ',' << j;
      }
}

TEST(MomentSums, BruteMatchesPlainOracle) {
  for (std::int64_t k = 1; k <= 16; ++k) {
    ASSERT_EQ(a_brute({k, 3, 1}), oracle::moment(k, 3, 1)) << k;
    ASSERT_EQ(a_prime_brute(k, 3), oracle::moment_prime(k, 3)) << k;
  }
}

TEST(MomentSums, PrimeMatchesLiteralSums) {
  MomentTable t;
  for (std::int64_t k = 1; k <= 18; ++k)
    for (unsigned s = 0; s <= 3; ++s) ASSERT_EQ(a_prime(k, s, t), a_prime_brute(k, s)) << k << ',' << s;
}

TEST(MomentSums, ZerothMomentCountsTerms) {
  MomentTable t;
  for (std::int64_t k = 1; k <= 60; ++k) ASSERT_EQ(a_recursive({k, 0, 0}, t), fib(k) - 1);
}

TEST(MomentSums, Monotone) {
  MomentTable t;
  for (unsigned s = 0; s <= 3; ++s)
    for (unsigned j = 0; s + j <= 3; ++j)
      for (std::int64_t k = 1; k < 40; ++k) {
        const BigInt a = a_recursive({k, s, j}, t);
        ASSERT_GE(a, 0);
        ASSERT_GE(a_recursive({k + 1, s, j}, t), a);
      }
}

TEST(MomentSums, OrderBound) {
  EXPECT_EQ(order_bound(1, 0), 10);
  EXPECT_EQ(order_bound(3, 0), 18);
  EXPECT_EQ(order_bound(0, 0), 6);
}

TEST(MomentSums, SequencesLieInClaimedSpan) {
  // k -> A(k,s,j) is killed by prod (x - r) over {+-phi^l : |l| <= s+j+1}.
  MomentTable t;
  for (unsigned s = 0; s <= 3; ++s)
    for (unsigned j = 0; s + j <= 3; ++j) {
      const IntPolynomial p = char_poly({RootShape::signed_phi_powers, s + j + 1});
      ASSERT_EQ(static_cast<std::int64_t>(p.degree()), order_bound(s, j));
      std::vector<BigInt> terms;
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(3 * p.degree()); ++k)
        terms.push_back(a_recursive({k, s, j}, t));
      ASSERT_TRUE(annihilates(p, terms)) << s << ',' << j;
    }
}

TEST(MomentSums, TableMemoizes) {
  MomentTable t;
  a_recursive({20, 2, 1}, t);
  EXPECT_EQ(t.max_k(), 20);
  EXPECT_EQ(t.size(), 20u * 3u * 2u);
  ASSERT_TRUE(t.find({17, 1, 1}).has_value());
  EXPECT_EQ(*t.find({17, 1, 1}), a_brute({17, 1, 1}));
  EXPECT_FALSE(t.find({21, 0, 0}).has_value());
  EXPECT_EQ(t.binomial(6, 3), 20);
}

TEST(MomentSums, ConcurrentCallersAgree) {
  MomentTable shared;
  std::vector<BigInt> results(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = a_prime(120 + i % 3, 3, shared); });
  }
  for (auto& th : threads) th.join();
  MomentTable fresh;
  for (int i = 0; i < 8; ++i) EXPECT_EQ(results[static_cast<std::size_t>(i)], a_prime(120 + i % 3, 3, fresh));
}
