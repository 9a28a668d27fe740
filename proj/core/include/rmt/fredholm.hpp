#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rmt/kernels.hpp"
#include "rmt/matrix.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

/// Half-line Nystrom rule: Gauss-Legendre in u on (-1, 1) mapped by
/// x = s + scale tan(pi (u + 1) / 4).
using QuadratureRule = HalfLineRule;

/// det(I - W^{1/2} K W^{1/2}) on (s, inf) at the rule's order.
double fredholm_det(const KernelOperator& kernel, double s, const QuadratureRule& rule = {});

struct FredholmResult {
  double value = 0.0;  ///< determinant at 2 * order
  double drift = 0.0;  ///< |det(order) - det(2 order)|
  int order = 0;
};

/// Evaluates at the rule's order and at twice the order; throws
/// ConvergenceError when the two differ by more than `tolerance`.
FredholmResult fredholm_det_checked(const KernelOperator& kernel, double s, const QuadratureRule& rule = {},
                                    double tolerance = 1e-8);

enum class Provenance { FredholmAiry, FredholmFiniteN, Empirical };
std::string to_string(Provenance p);

/// A CDF sampled on an ascending grid.
struct DistributionCurve {
  std::vector<double> grid;
  std::vector<double> cdf;
  Provenance provenance = Provenance::FredholmAiry;
  Beta beta = Beta::Complex;
  std::size_t n_samples = 0;  ///< empirical curves only
  int n = 0;                  ///< finite-N curves only
  std::size_t below_cutoff = 0;  ///< grid points answered by the left-tail cutoff

  /// Right-continuous step interpolation for empirical curves, linear
  /// otherwise; clamps outside the grid.
  double at(double r) const;
  /// Smallest r on the linear interpolant with cdf(r) >= p.
  double quantile(double p) const;
  bool is_monotone(double slack = 1e-9) const;
};

/// Left end of the supported range; tw*_cdf return 0 below and set the flag.
inline constexpr double kTwLeftCutoff = -12.0;

struct CdfPoint {
  double value = 0.0;
  bool below_cutoff = false;
};

/// TW_2(r) = det(I - K_airy) on (r, inf).
CdfPoint tw2_cdf_flagged(double r, const QuadratureRule& rule = {});
double tw2_cdf(double r, const QuadratureRule& rule = {});

/// TW_1(r) = det(I - K) on (r, inf) with K(x, y) = Ai((x + y)/2) / 2.
CdfPoint tw1_cdf_flagged(double r, const QuadratureRule& rule = {});
double tw1_cdf(double r, const QuadratureRule& rule = {});

/// TW_beta on a grid, points evaluated in parallel.
DistributionCurve tw_curve(Beta beta, const std::vector<double>& grid, const QuadratureRule& rule = {},
                           unsigned threads = 1);

/// Largest point of the unscaled N-point GUE process on the edge scale:
/// P(N^{2/3}(lambda_N - 2) <= r) = det(I - K_N^edge) on (r, inf).
inline constexpr int kFiniteNGuard = 400;
double finite_n_gue_cdf(int n, double r, const QuadratureRule& rule = {});
DistributionCurve finite_n_gue_curve(int n, const std::vector<double>& grid, const QuadratureRule& rule = {},
                                     unsigned threads = 1);

/// r_min, r_min + step, ... up to r_max (inclusive within step/2).
std::vector<double> make_grid(double r_min, double r_max, double step);

}  // namespace rmt
