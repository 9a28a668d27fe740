#include "rmt/hermite.hpp"

#include <cmath>
#include <numbers>

#include "rmt/error.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {

constexpr double kBig = 0x1.0p+500;
constexpr double kSmall = 0x1.0p-500;
const double kLogBig = 500.0 * std::numbers::ln2;

// Runs the recurrence up to kmax, calling emit(k, phi_k) for every k.
template <class Emit>
void recurrence(int kmax, double x, Emit&& emit) {
  double log_scale = -0.25 * x * x - 0.25 * std::log(2.0 * std::numbers::pi);
  double scale = std::exp(log_scale);
  double prev = 0.0;
  double cur = 1.0;
  emit(0, cur * scale);
  for (int k = 0; k < kmax; ++k) {
    const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) / std::sqrt(k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      prev *= kSmall;
      cur *= kSmall;
      log_scale += kLogBig;
      scale = std::exp(log_scale);
    }
    emit(k + 1, cur * scale);
  }
}

}  // namespace

double hermite_phi(int k, double x) {
  require(k >= 0, "hermite_phi: degree must be nonnegative");
  double out = 0.0;
  recurrence(k, x, [&](int j, double v) {
    if (j == k) out = v;
  });
  return out;
}

HermiteTop hermite_top(int n, double x) {
  require(n >= 0, "hermite_top: degree must be nonnegative");
  HermiteTop t;
  recurrence(n, x, [&](int j, double v) {
    if (j == n - 2) t.nm2 = v;
    if (j == n - 1) t.nm1 = v;
    if (j == n) t.n = v;
  });
  return t;
}

double hermite_phi_prime(int k, double x) {
  require(k >= 0, "hermite_phi_prime: degree must be nonnegative");
  const HermiteTop t = hermite_top(k, x);
  return -0.5 * x * t.n + std::sqrt(static_cast<double>(k)) * t.nm1;
}

std::vector<double> hermite_functions(int kmax, double x) {
  require(kmax >= 0, "hermite_functions: degree must be nonnegative");
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  recurrence(kmax, x, [&](int j, double v) { out[static_cast<std::size_t>(j)] = v; });
  return out;
}

HermiteBasis::HermiteBasis(int max_degree) : max_degree_(max_degree) {
  require(max_degree >= 0, "HermiteBasis: degree must be nonnegative");
}

double HermiteBasis::operator()(int k, double x) const {
  require(k <= max_degree_, "HermiteBasis: degree above the basis size");
  return hermite_phi(k, x);
}

double hermite_half_integral(int k) {
  require(k >= 0, "hermite_half_integral: degree must be nonnegative");
  if (k % 2 == 0) {
    const double m = 0.5 * k;
    const double log_ratio = std::lgamma(2.0 * m + 1.0) - 2.0 * m * std::numbers::ln2 - 2.0 * std::lgamma(m + 1.0);
    return std::pow(2.0, -0.25) * std::pow(std::numbers::pi, 0.25) * std::exp(0.5 * log_ratio);
  }
  // Odd degrees: phi_j(0) vanishes for odd j, so only even j feed the recurrence.
  const std::vector<double> at_zero = hermite_functions(k, 0.0);
  double odd = 2.0 * std::pow(2.0 * std::numbers::pi, -0.25);  // I_1
  for (int j = 2; j < k; j += 2) odd = (std::sqrt(static_cast<double>(j)) * odd + 2.0 * at_zero[j]) / std::sqrt(j + 1.0);
  return odd;
}

double hermite_partial_integral(int n, double x) {
  require(n >= 0, "hermite_partial_integral: degree must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < 0.0) {
    // phi_n has parity (-1)^n.
    const double v = hermite_partial_integral(n, -x);
    return n % 2 == 0 ? -v : v;
  }
  static const QuadratureNodes ref = gauss_legendre(16);
  const double nd = static_cast<double>(n);
  double total = 0.0;
  double t = 0.0;
  while (t < x) {
    const double gap = 4.0 * nd + 2.0 - t * t;
    double width = gap > 1.0 ? std::numbers::pi / std::sqrt(gap) : 1.0;
    width = std::min(width, 0.5);
    const double b = std::min(x, t + width);
    const double half = 0.5 * (b - t);
    const double mid = 0.5 * (b + t);
    double part = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) part += ref.weights[i] * hermite_phi(n, mid + half * ref.nodes[i]);
    total += half * part;
    t = b;
  }
  return total;
}

}  // namespace rmt
