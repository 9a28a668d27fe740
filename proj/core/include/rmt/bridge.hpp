#pragma once

#include <functional>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/spectral.hpp"

namespace rmt {

/// Scale ladder near the upper edge:
///   E_L = 2 + 4 N^{-2/3+eps}, eta = N^{-1+eps}, l1 = N^{3 eps} eta, l = N^{3 eps} l1.
struct BridgeParams {
  double epsilon = 0.05;
  double E = 2.0;
  double E_L = 0.0;
  double eta = 0.0;
  double l1 = 0.0;
  double l = 0.0;
  Index n = 0;

  static BridgeParams make(Index n, double epsilon, double E);
  /// 1/N << eta << l1 << l << E_L - E, each step by at least N^{eps/2}.
  void validate() const;
};

/// Poisson kernel eta / (pi (x^2 + eta^2)).
double theta_eta(double x, double eta);

/// Tr chi_E * theta_eta(H) for chi_E the indicator of [E, E_L], as the
/// closed-form arctan sum over eigenvalues.
double smoothed_count(const SpectralSample& sample, const BridgeParams& p);
/// Same quantity as (N/pi) int_E^{E_L} Im m_N(x + i eta) dx by adaptive Simpson.
double smoothed_count_quadrature(const SpectralSample& sample, const BridgeParams& p, double tol = 1e-12);

/// Smooth cutoff: 1 on |x| <= 1/9, 0 on |x| >= 2/9, built from exp(-1/u).
double smooth_cutoff(double x);
double smooth_cutoff_derivative(double x);

/// X = N int_{kappa1}^{kappa2} Im m_N(2 + x + i eta) dx.
struct ObservableX {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double eta = 0.0;
  double c0 = 4.0;

  void validate(Index n, double epsilon) const;
};

/// Exact antiderivative: sum_j [atan((2+k2-l_j)/eta) - atan((2+k1-l_j)/eta)].
double observable_X(const SpectralSample& sample, const ObservableX& obs);

/// Im~ P(z) = (P(z) - P(conj z)) / 2i, and its difference between two points.
cplx tilde_im(const std::function<cplx(cplx)>& p, cplx z);
cplx delta_im(const std::function<cplx(cplx)>& p, cplx z1, cplx z2);

struct SandwichResult {
  // |Tr chi_E - Tr chi_E * theta| <= C (N(E-l1, E+l1) + (eta/l1) N^{2 eps})
  double smoothing_lhs = 0.0;
  double smoothing_bracket = 0.0;  ///< N(E-l1,E+l1) + (eta/l1) N^{2 eps}
  double smoothing_c_needed = 0.0;  ///< lhs / bracket
  bool smoothing_ok = false;
  // Tr chi_{E+l} * theta - N^{-eps} <= N(E, inf) <= Tr chi_{E-l} * theta + N^{-eps}
  double lower = 0.0;
  Index count = 0;
  double upper = 0.0;
  bool sandwich_ok = false;
  double slack = 0.0;  ///< min distance of the count from the sandwich bounds
};

SandwichResult sandwich_check(const SpectralSample& sample, const BridgeParams& p, double c = 10.0);

struct BridgeRecord {
  Seed seed = 0;
  double smoothed = 0.0;    ///< closed form
  double quadrature = 0.0;  ///< Simpson path
  double identity_rel = 0.0;  ///< |smoothed - quadrature| / |smoothed|
  SandwichResult sandwich;
};

struct BridgeSummary {
  std::vector<BridgeRecord> records;
  double max_identity_rel = 0.0;
  double sandwich_fraction = 0.0;
  double smoothing_fraction = 0.0;
  double fitted_c = 0.0;  ///< 99% quantile of smoothing_c_needed over seeds
};

/// Runs both checks on `seeds` independent matrices, seed_k = derive_seed(seed, {N, k}).
BridgeSummary run_bridge_check(const EnsembleSpec& spec, double epsilon, double E, std::size_t seeds, Seed seed,
                               double c = 10.0, unsigned threads = 1);

}  // namespace rmt
