#include "rmt/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "rmt/error.hpp"

namespace rmt {

QuadratureNodes gauss_legendre(int n) {
  require(n >= 1, "gauss_legendre: order must be positive");
  QuadratureNodes rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = x;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureNodes gauss_legendre(int n, double a, double b) {
  QuadratureNodes rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureNodes HalfLineRule::nodes_for(double s) const {
  require(order >= 2, "HalfLineRule: order must be at least 2");
  require(scale > 0.0, "HalfLineRule: scale must be positive");
  QuadratureNodes rule = gauss_legendre(order);
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double angle = quarter_pi * (rule.nodes[i] + 1.0);
    const double c = std::cos(angle);
    rule.nodes[i] = s + scale * std::tan(angle);
    rule.weights[i] *= scale * quarter_pi / (c * c);
  }
  return rule;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int order) {
  require(panels >= 1, "integrate_panels: need at least one panel");
  const QuadratureNodes ref = gauss_legendre(order);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    double part = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) part += ref.weights[i] * f(mid + 0.5 * width * ref.nodes[i]);
    total += 0.5 * width * part;
  }
  return total;
}

namespace {

// Kronrod 15-point abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk15 {
  double value;
  double error;
};

Gk15 gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * half, std::abs((resk - resg) * half)};
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double tol,
                     int depth, const AdaptiveOptions& opt) {
  const Gk15 whole = gk15(f, a, b);
  if (whole.error <= tol || std::abs(b - a) < 1e-15 * (std::abs(a) + std::abs(b))) return whole.value;
  if (depth >= opt.max_depth)
    throw ConvergenceError("integrate_adaptive: depth limit reached before tolerance");
  const double mid = 0.5 * (a + b);
  return adaptive_step(f, a, mid, 0.5 * tol, depth + 1, opt) +
         adaptive_step(f, mid, b, 0.5 * tol, depth + 1, opt);
}

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw ConvergenceError("integrate_simpson: depth limit reached before tolerance");
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const AdaptiveOptions& options) {
  if (a == b) return 0.0;
  // First pass fixes the absolute target from a rough magnitude estimate.
  const Gk15 rough = gk15(f, a, b);
  const double tol = std::max(options.abs_tol, options.rel_tol * std::abs(rough.value));
  return adaptive_step(f, a, b, tol, 0, options);
}

double integrate_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                         int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace rmt
