#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "rmt/random.hpp"

using namespace rmt;

// Known-answer vectors of the reference Philox4x32-10 implementation.
TEST(Philox, KnownAnswerZero) {
  const auto out = philox4x32({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out[0], 0x6627e8d5u);
  EXPECT_EQ(out[1], 0xe169c58du);
  EXPECT_EQ(out[2], 0xbc57ac4cu);
  EXPECT_EQ(out[3], 0x9b00dbd8u);
}

TEST(Philox, KnownAnswerOnes) {
  const auto out = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(out[0], 0x408f276du);
  EXPECT_EQ(out[1], 0x41c83b0eu);
  EXPECT_EQ(out[2], 0xa20bc7c6u);
  EXPECT_EQ(out[3], 0x6d5451fdu);
}

TEST(Philox, KnownAnswerPi) {
  const auto out = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(out[0], 0xd16cfe09u);
  EXPECT_EQ(out[1], 0x94fdccebu);
  EXPECT_EQ(out[2], 0x5001e420u);
  EXPECT_EQ(out[3], 0x24126ea1u);
}

TEST(DeriveSeed, DistinctPathsGiveDistinctSeeds) {
  std::set<Seed> seen;
  for (std::uint64_t n : {10u, 20u, 40u})
    for (std::uint64_t r = 0; r < 200; ++r) seen.insert(derive_seed(7, {n, r}));
  EXPECT_EQ(seen.size(), 600u);
  EXPECT_EQ(derive_seed(7, {1, 2}), derive_seed(7, {1, 2}));
  EXPECT_NE(derive_seed(7, {1, 2}), derive_seed(7, {2, 1}));
  EXPECT_NE(derive_seed(7, {1}), derive_seed(8, {1}));
}

TEST(CounterStream, IsStateless) {
  const CounterStream s(123);
  EXPECT_EQ(s.block(5, 1), s.block(5, 1));
  EXPECT_NE(s.block(5, 1), s.block(5, 0));
  EXPECT_NE(s.block(5, 1), CounterStream(124).block(5, 1));
}

TEST(CounterStream, UniformsAreOpenUnitInterval) {
  const CounterStream s(9);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto [a, b] = s.uniforms(static_cast<std::uint64_t>(i), 0);
    ASSERT_GT(a, 0.0);
    ASSERT_LT(a, 1.0);
    ASSERT_GT(b, 0.0);
    ASSERT_LT(b, 1.0);
    sum += a + b;
  }
  const double mean = sum / (2.0 * n);
  EXPECT_NEAR(mean, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / (2.0 * n)));
}

TEST(CounterStream, NormalMoments) {
  const CounterStream s(11);
  const int n = 100000;
  double m1 = 0, m2 = 0, m4 = 0, cross = 0;
  for (int i = 0; i < n; ++i) {
    const auto [a, b] = s.normals(static_cast<std::uint64_t>(i), 3);
    m1 += a;
    m2 += a * a;
    m4 += a * a * a * a;
    cross += a * b;
  }
  m1 /= n;
  m2 /= n;
  m4 /= n;
  cross /= n;
  EXPECT_NEAR(m1, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(m2, 1.0, 4.0 * std::sqrt(2.0 / n));
  EXPECT_NEAR(m4, 3.0, 4.0 * std::sqrt(96.0 / n));
  EXPECT_NEAR(cross, 0.0, 4.0 / std::sqrt(n));
}
