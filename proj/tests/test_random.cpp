#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "pax/random.hpp"

using pax::RandomStream;

TEST(RandomStream, SameSeedSameSequence) {
  RandomStream a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(a.uniform(), b.uniform());
    ASSERT_EQ(a.normal(), b.normal());
  }
  EXPECT_EQ(a, b);
}

TEST(RandomStream, DifferentSeedsDiverge) {
  RandomStream a(1), b(2);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += a.uniform() == b.uniform();
  EXPECT_LT(same, 3);
}

TEST(RandomStream, UniformMatchesTopBitsOfEngine) {
  std::mt19937_64 ref(42);
  RandomStream s(42);
  for (int i = 0; i < 1000; ++i) {
    const double expected = static_cast<double>(ref() >> 11) / 9007199254740992.0;
    ASSERT_EQ(s.uniform(), expected);
  }
}

TEST(RandomStream, UniformStaysInHalfOpenUnitInterval) {
  RandomStream s(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomStream, NormalIsBoxMullerOverTwoUniforms) {
  std::mt19937_64 ref(11);
  RandomStream s(11);
  for (int i = 0; i < 1000; ++i) {
    const double u1 = 1.0 - static_cast<double>(ref() >> 11) / 9007199254740992.0;
    const double u2 = static_cast<double>(ref() >> 11) / 9007199254740992.0;
    const double expected = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    ASSERT_EQ(s.normal(), expected);
  }
}

TEST(RandomStream, DrawCounting) {
  RandomStream s(5);
  EXPECT_EQ(s.draws(), 0u);
  s.uniform();
  EXPECT_EQ(s.draws(), 1u);
  s.normal();
  EXPECT_EQ(s.draws(), 3u);
  for (int i = 0; i < 10; ++i) s.normal();
  EXPECT_EQ(s.draws(), 23u);
}

TEST(RandomStream, NormalMoments) {
  RandomStream s(8);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = s.normal();
    ASSERT_TRUE(std::isfinite(z));
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 3.0 / std::sqrt(n));
  EXPECT_NEAR(var, 1.0, 0.02);
}
