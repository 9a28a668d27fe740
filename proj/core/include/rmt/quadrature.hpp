#pragma once

#include <functional>
#include <vector>

namespace rmt {

/// Nodes and weights on a reference or mapped interval.
struct QuadratureNodes {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureNodes gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
QuadratureNodes gauss_legendre(int n, double a, double b);

/// Rule on the half line (s, inf): Gauss-Legendre in u on (-1, 1) pushed
/// through x = s + scale * tan(pi (u + 1) / 4). Weights carry the Jacobian.
struct HalfLineRule {
  int order = 64;
  double scale = 10.0;

  QuadratureNodes nodes_for(double s) const;
};

/// Fixed composite Gauss-Legendre: `panels` equal panels of `order` points.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int order = 10);

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;
};

/// Adaptive Gauss-Kronrod (7/15) with interval bisection. Throws
/// ConvergenceError when the depth limit is hit before the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const AdaptiveOptions& options = {});

/// Adaptive Simpson with Richardson correction.
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double tol, int max_depth = 50);

}  // namespace rmt
