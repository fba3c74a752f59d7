#include "nicom/fib_lucas.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nicom;

TEST(FibLucas, BaseCasesAndSmallValues) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(1), 1);
  EXPECT_EQ(lucas(12), 322);
}

TEST(FibLucas, NegativeIndexRejected) {
  EXPECT_THROW(fib(-1), std::invalid_argument);
  EXPECT_THROW(lucas(-3), std::invalid_argument);
}

TEST(FibLucas, FastDoublingMatchesIteration) {
  BigInt a = 0, b = 1;
  for (std::int64_t n = 0; n <= 1000; ++n) {
    ASSERT_EQ(fib(n), a) << "n=" << n;
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
}

TEST(FibLucas, LucasFromNeighbouringFibonacci) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(lucas(n), oracle::fib(n - 1) + oracle::fib(n + 1)) << "n=" << n;
  }
  EXPECT_EQ(lucas(200), oracle::lucas(200));
}

TEST(FibLucas, BinetNormIdentity) {
  // 5 F_n^2 - L_n^2 = 4 (-1)^(n+1)
  for (std::int64_t n = 0; n <= 500; ++n) {
    const BigInt f = fib(n), l = lucas(n);
    const BigInt expected = n % 2 == 0 ? -4 : 4;
    ASSERT_EQ(5 * f * f - l * l, expected) << "n=" << n;
  }
}

TEST(FibLucas, FibMinusOneFactorsExamples) {
  auto f4 = fib_minus_one_factors(4);
  EXPECT_EQ(f4.fibonacci, 2);
  EXPECT_EQ(f4.lucas, 1);
  EXPECT_EQ(f4.fibonacci_index, 3);
  EXPECT_EQ(f4.lucas_index, 1);
  auto f6 = fib_minus_one_factors(6);
  EXPECT_EQ(f6.fibonacci, 1);
  EXPECT_EQ(f6.lucas, 7);
  auto f5 = fib_minus_one_factors(5);
  EXPECT_EQ(f5.fibonacci, 1);
  EXPECT_EQ(f5.lucas, 4);
}

TEST(FibLucas, FibMinusOneFactorsLowerBound) {
  EXPECT_THROW(fib_minus_one_factors(2), std::invalid_argument);
  EXPECT_NO_THROW(fib_minus_one_factors(3));
}

TEST(FibLucas, AllFourFactorBranches) {
  for (std::int64_t l = 1; l <= 50; ++l) {
    EXPECT_EQ(oracle::fib(4 * l) - 1, oracle::fib(2 * l + 1) * oracle::lucas(2 * l - 1));
    EXPECT_EQ(oracle::fib(4 * l + 1) - 1, oracle::fib(2 * l) * oracle::lucas(2 * l + 1));
    EXPECT_EQ(oracle::fib(4 * l + 2) - 1, oracle::fib(2 * l) * oracle::lucas(2 * l + 2));
    EXPECT_EQ(oracle::fib(4 * l + 3) - 1, oracle::fib(2 * l + 2) * oracle::lucas(2 * l + 1));
    for (std::int64_t n = 4 * l; n < 4 * l + 4; ++n) {
      const auto f = fib_minus_one_factors(n);
      ASSERT_EQ(f.fibonacci * f.lucas, fib(n) - 1) << "n=" << n;
    }
  }
}

TEST(FibLucas, ConsecutiveOddEvenLucasCoprime) {
  for (std::int64_t l = 1; l <= 50; ++l) {
    ASSERT_EQ(gcd(lucas(2 * l + 1), lucas(2 * l + 2)), 1) << "l=" << l;
  }
}

TEST(FibLucas, Lcm) {
  EXPECT_EQ(lcm(4, 7), 28);
  EXPECT_EQ(lcm(0, 0), 0);
  EXPECT_EQ(lcm(0, 9), 0);
  EXPECT_EQ(lcm(42, 70), 210);
  EXPECT_EQ(lcm(-6, 4), 12);
  EXPECT_EQ(gcd(-12, 18), 6);
}
