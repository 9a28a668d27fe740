#pragma once

namespace rmt {

struct AiryValues {
  double ai = 0.0;
  double aip = 0.0;
};

/// Supported argument range of the checked entry points.
inline constexpr double kAiryMin = -1000.0;
inline constexpr double kAiryMax = 100.0;

/// Ai and Ai' together. Maclaurin series (extended precision) on [-8, 5],
/// the Laplace-type integral e^{-zeta}/pi int exp(-sqrt(x) t^2) cos(t^3/3) dt
/// on (5, 12), and the large-argument expansions beyond. Throws
/// ValidationError outside [kAiryMin, kAiryMax].
AiryValues airy_both(double x);
double airy(double x);
double airy_prime(double x);

/// int_{-inf}^x Ai(t) dt
double airy_integral(double x);

namespace detail {
/// No range check; returns zeros above the underflow threshold.
AiryValues airy_unchecked(double x);
}  // namespace detail

}  // namespace rmt
