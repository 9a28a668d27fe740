#include "rmt/airy.hpp"

#include <cmath>
#include <numbers>

#include "rmt/error.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {

// Ai(0) and -Ai'(0) to 21 digits.
constexpr long double kC1 = 0.355028053887817239260L;
constexpr long double kC2 = 0.258819403792806798405L;

AiryValues maclaurin(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f = 1.0L, g = x, fp = 0.0L, gp = 1.0L;
  long double a = 1.0L, b = x, d = 0.5L * x * x, e = 1.0L;
  fp = d;
  for (int k = 1; k < 200; ++k) {
    a *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    b *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    e *= x3 / ((3.0L * k) * (3.0L * k - 2.0L));
    f += a;
    g += b;
    gp += e;
    if (k >= 2) {
      d *= x3 / ((3.0L * (k - 1)) * (3.0L * (k - 1) + 2.0L));
      fp += d;
    }
    const long double size = std::fabs(a) + std::fabs(b) + std::fabs(d) + std::fabs(e);
    if (k > 3 && size < 1e-24L) break;
  }
  return {static_cast<double>(kC1 * f - kC2 * g), static_cast<double>(kC1 * fp - kC2 * gp)};
}

AiryValues laplace_integral(double x) {
  static const QuadratureNodes ref = gauss_legendre(16);
  const double rx = std::sqrt(x);
  const double zeta = 2.0 / 3.0 * x * rx;
  const double upper = std::sqrt(40.0 / rx);
  const int panels = 12;
  const double width = upper / panels;
  double ai = 0.0, aip = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double t = mid + 0.5 * width * ref.nodes[i];
      const double w = 0.5 * width * ref.weights[i] * std::exp(-rx * t * t);
      const double c = std::cos(t * t * t / 3.0);
      const double s = std::sin(t * t * t / 3.0);
      ai += w * c;
      aip += w * (-rx * c - t * s);
    }
  }
  const double pre = std::exp(-zeta) / std::numbers::pi;
  return {pre * ai, pre * aip};
}

// u_k and v_k of the large-argument expansions.
struct AsymptoticCoefficients {
  double u[40];
  double v[40];
  AsymptoticCoefficients() {
    u[0] = v[0] = 1.0;
    for (int k = 1; k < 40; ++k) {
      u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
      v[k] = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u[k];
    }
  }
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients c;
  return c;
}

AiryValues asymptotic_positive(double x) {
  const auto& c = coefficients();
  const double rx = std::sqrt(x);
  const double zeta = 2.0 / 3.0 * x * rx;
  if (zeta > 740.0) return {0.0, 0.0};
  double su = 0.0, sv = 0.0, pw = 1.0, last = INFINITY;
  for (int k = 0; k < 40; ++k) {
    const double tu = c.u[k] * pw;
    if (std::abs(tu) > last) break;
    last = std::abs(tu);
    su += tu;
    sv += c.v[k] * pw;
    if (last < 1e-17) break;
    pw *= -1.0 / zeta;
  }
  const double e = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  const double q = std::sqrt(rx);
  return {e / q * su, -e * q * sv};
}

AiryValues asymptotic_negative(double x) {
  const auto& c = coefficients();
  const double z = -x;
  const double rz = std::sqrt(z);
  const double zeta = 2.0 / 3.0 * z * rz;
  // Even and odd parts of the two series.
  double ue = 0.0, uo = 0.0, ve = 0.0, vo = 0.0, last = INFINITY;
  double pw = 1.0;  // zeta^{-k}
  for (int k = 0; k < 40; ++k) {
    const double size = std::abs(c.u[k] * pw);
    if (size > last) break;
    last = size;
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 0) {
      ue += sign * c.u[k] * pw;
      ve += sign * c.v[k] * pw;
    } else {
      uo += sign * c.u[k] * pw;
      vo += sign * c.v[k] * pw;
    }
    if (size < 1e-17) break;
    pw /= zeta;
  }
  const double phase = zeta - 0.25 * std::numbers::pi;
  const double cs = std::cos(phase);
  const double sn = std::sin(phase);
  const double q = std::sqrt(rz);
  const double rp = 1.0 / std::sqrt(std::numbers::pi);
  return {rp / q * (cs * ue + sn * uo), rp * q * (sn * ve - cs * vo)};
}

}  // namespace

namespace detail {

AiryValues airy_unchecked(double x) {
  if (x < -8.0) return asymptotic_negative(x);
  if (x <= 5.0) return maclaurin(x);
  if (x < 12.0) return laplace_integral(x);
  return asymptotic_positive(x);
}

}  // namespace detail

AiryValues airy_both(double x) {
  require(std::isfinite(x) && x >= kAiryMin && x <= kAiryMax, "airy: argument outside [-1000, 100]");
  return detail::airy_unchecked(x);
}

double airy(double x) { return airy_both(x).ai; }
double airy_prime(double x) { return airy_both(x).aip; }

double airy_integral(double x) {
  require(std::isfinite(x) && x >= kAiryMin && x <= kAiryMax, "airy_integral: argument outside [-1000, 100]");
  auto ai = [](double t) { return detail::airy_unchecked(t).ai; };
  // int_{-inf}^0 Ai = 2/3 and int_0^inf Ai = 1/3.
  if (x <= 0.0) return 2.0 / 3.0 - integrate_adaptive(ai, x, 0.0, {1e-14, 1e-12, 40});
  const double tail = x >= 30.0 ? 0.0 : integrate_adaptive(ai, x, 30.0, {1e-15, 1e-12, 40});
  return 1.0 - tail;
}

}  // namespace rmt
