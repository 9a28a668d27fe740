#pragma once

#include <vector>

namespace rmt {

/// Normalised Hermite functions
///   phi_k(x) = e^{-x^2/4} q_k(x) / sqrt(sqrt(2 pi) k!)
/// with q_k the monic (probabilists') Hermite polynomials, so that
/// int phi_j phi_k = delta_jk. Evaluated by the three-term recurrence on
/// phi itself with a running power-of-two scale, never on q_k and the
/// Gaussian separately.
double hermite_phi(int k, double x);

/// phi'_k = -(x/2) phi_k + sqrt(k) phi_{k-1}
double hermite_phi_prime(int k, double x);

/// phi_0(x) .. phi_kmax(x)
std::vector<double> hermite_functions(int kmax, double x);

/// phi_{n-2}, phi_{n-1}, phi_n at one point (entries with negative index are 0).
struct HermiteTop {
  double nm2 = 0.0;
  double nm1 = 0.0;
  double n = 0.0;
};
HermiteTop hermite_top(int n, double x);

/// Fixed-degree basis wrapper.
class HermiteBasis {
 public:
  explicit HermiteBasis(int max_degree);
  int max_degree() const { return max_degree_; }
  std::vector<double> values(double x) const { return hermite_functions(max_degree_, x); }
  double operator()(int k, double x) const;

 private:
  int max_degree_;
};

/// I_k = int_0^inf phi_k. Even k by the closed form
/// 2^{-1/4} pi^{1/4} sqrt((2m)! / (4^m (m!)^2)) through log-Gamma,
/// odd k by the recurrence I_{k+1} = (sqrt(k) I_{k-1} + 2 phi_k(0)) / sqrt(k+1).
double hermite_half_integral(int k);

/// int_0^x phi_n(t) dt by Gauss-Legendre panels about one local
/// oscillation wide (pi / sqrt(4n + 2 - t^2) inside the turning points).
double hermite_partial_integral(int n, double x);

}  // namespace rmt
