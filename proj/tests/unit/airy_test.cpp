#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/airy.hpp>

#include "rmt/airy.hpp"
#include "rmt/error.hpp"
#include "rmt/quadrature.hpp"

using namespace rmt;

TEST(Airy, ValuesAtZero) {
  // Ai(0) = 3^{-2/3} / Gamma(2/3), Ai'(0) = -3^{-1/3} / Gamma(1/3).
  EXPECT_NEAR(airy(0.0), std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(airy_prime(0.0), -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0), 1e-15);
}

TEST(Airy, AgreesWithBoost) {
  for (double x = -60.0; x <= 40.0; x += 0.173) {
    const AiryValues v = airy_both(x);
    const double ai = boost::math::airy_ai(x), aip = boost::math::airy_ai_prime(x);
    const double scale = x < 0 ? std::pow(std::abs(x), 0.25) : 1.0;
    EXPECT_NEAR(v.ai, ai, 1e-13 * scale + 1e-12 * std::abs(ai)) << x;
    EXPECT_NEAR(v.aip, aip, 1e-12 * scale * std::sqrt(std::abs(x) + 1.0) + 1e-11 * std::abs(aip)) << x;
  }
}

TEST(Airy, OdeResidual) {
  const double h = 1e-3;
  for (double x = -10.0; x <= 5.0; x += 0.25) {
    const double d2 = (airy_prime(x + h) - airy_prime(x - h)) / (2.0 * h);
    EXPECT_NEAR(d2, x * airy(x), 1e-6 * (1.0 + std::abs(x)));
  }
}

TEST(Airy, RangeIsChecked) {
  EXPECT_THROW(airy(101.0), ValidationError);
  EXPECT_THROW(airy(-1001.0), ValidationError);
  EXPECT_EQ(detail::airy_unchecked(200.0).ai, 0.0);
}

TEST(Airy, Integral) {
  EXPECT_NEAR(airy_integral(0.0), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(airy_integral(30.0), 1.0, 1e-12);
  EXPECT_NEAR(airy_integral(-200.0), 0.0, 0.05);
  const double part = integrate_adaptive([](double t) { return airy(t); }, -5.0, 2.0);
  EXPECT_NEAR(airy_integral(2.0) - airy_integral(-5.0), part, 1e-11);
}
