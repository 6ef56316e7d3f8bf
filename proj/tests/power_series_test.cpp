#include <gtest/gtest.h>

#include <random>

#include "ward/power_series.hpp"

namespace ward {
namespace {

PowerSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  PowerSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s.set(i, Rational(Integer(num(rng)), Integer(den(rng))));
  return s;
}

TEST(PowerSeries, RingLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t N = 1 + trial % 9;
    auto a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, PowerSeries(N));
  }
}

TEST(PowerSeries, TruncationCommutesWithMultiplication) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t N = 12;
    auto a = random_series(rng, N), b = random_series(rng, N);
    for (std::size_t M = 0; M <= N; ++M) {
      EXPECT_EQ((a * b).truncated(M), a.truncated(M) * b.truncated(M));
    }
  }
}

TEST(PowerSeries, InverseOfOneMinusXPower) {
  const std::size_t N = 30;
  const PowerSeries one_minus_x(N, {Rational(1), Rational(-1)});
  for (unsigned long k = 1; k <= 8; ++k) {
    auto inv = one_minus_x.pow(k).inverse();
    for (long n = 0; n <= static_cast<long>(N); ++n) {
      EXPECT_EQ(inv[n], Rational(binomial(n + static_cast<long>(k) - 1, n))) << "k=" << k << " n=" << n;
    }
  }
}

TEST(PowerSeries, InverseIsInverse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_series(rng, 10);
    if (a[0].is_zero()) a.set(0, Rational(1));
    EXPECT_EQ(a * a.inverse(), PowerSeries::constant(10, Rational(1)));
  }
}

TEST(PowerSeries, InverseNeedsConstantTerm) {
  EXPECT_THROW(PowerSeries::monomial(5, 1).inverse(), DivisionError);
}

TEST(PowerSeries, MonomialBeyondOrderIsZero) {
  EXPECT_EQ(PowerSeries::monomial(3, 4), PowerSeries(3));
  auto x2 = PowerSeries::monomial(5, 2);
  EXPECT_EQ(x2 * x2 * x2, PowerSeries(5));
  EXPECT_EQ((x2 * x2)[4], Rational(1));
}

TEST(PowerSeries, ScalarDivide) {
  PowerSeries s(2, {Rational(2), Rational(4), Rational(6)});
  EXPECT_EQ(s.divided(Rational(4)), PowerSeries(2, {Rational(Integer(1), Integer(2)), Rational(1),
                                                    Rational(Integer(3), Integer(2))}));
  EXPECT_THROW(s.divided(Rational(0)), DivisionError);
}

TEST(PowerSeries, OrderMismatchRejected) {
  EXPECT_THROW(PowerSeries(3) + PowerSeries(4), std::invalid_argument);
}

}  // namespace
}  // namespace ward
