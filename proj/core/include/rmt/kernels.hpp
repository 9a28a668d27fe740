#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rmt {

/// Christoffel-Darboux kernel K_N(x, y) = sum_{k<N} phi_k(x) phi_k(y).
double hermite_kernel(int n, double x, double y);
/// K_N(x, x) = sqrt(N) (sqrt(N) phi_{N-1}^2 - sqrt(N-1) phi_{N-2} phi_N)
double hermite_kernel_diag(int n, double x);

/// sqrt(N) K_N(sqrt(N) x, sqrt(N) y)
double rescaled_kernel(int n, double x, double y);

/// Edge point 2 sqrt(N) + x N^{-1/6} in unscaled coordinates.
double edge_point(int n, double x);
/// N^{-1/6} K_N(edge_point(x), edge_point(y))
double edge_kernel(int n, double x, double y);
double edge_kernel_diag(int n, double x);

/// (Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y)
double airy_kernel(double x, double y);
/// Ai'(x)^2 - x Ai(x)^2
double airy_kernel_diag(double x);

/// d/dx K_N(x, x) = -sqrt(N) phi_{N-1}(x) phi_N(x)
double kernel_diag_derivative(int n, double x);
/// d/dx K_N^edge(x, x) = N^{-1/3} K_N'(edge_point(x))
double edge_kernel_diag_derivative(int n, double x);

/// GOE one-point function K_{N,1}(x, x).
double goe_kernel(int n, double x);
/// N^{-1/6} K_{N,1} at the edge point.
double goe_edge_kernel(int n, double x);
/// K_airy(x, x) + Ai(x)/2 int_{-inf}^x Ai
double goe_edge_limit(double x);

/// |d^a/dx^a d^b/dy^b (K_N^edge - K_airy)(x, y)| with a, b in {0, 1}.
/// Derivatives by central differences. Requires x, y >= lower.
double edge_kernel_gap(int n, double x, double y, int a, int b, double lower = -6.0);

enum class KernelKind {
  HermiteN,
  RescaledN,
  EdgeN,
  Airy,
  GoeOnePointN,
  GoeEdgeN,
  /// Ai((x + y)/2) / 2, the scalar kernel behind the beta = 1 edge law.
  AiryHalfSum,
  /// User-supplied symmetric kernel (tests, rank-one checks).
  Custom,
};

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& name);

/// A symmetric kernel evaluable pointwise. The GOE kinds are one-point
/// functions and are defined on the diagonal only.
class KernelOperator {
 public:

  KernelOperator(KernelKind kind, int n = 0);
  /// Custom kernel; `fn` must be symmetric.
  static KernelOperator custom(std::function<double(double, double)> fn);

  KernelKind kind() const { return kind_; }
  int n() const { return n_; }
  bool diagonal_only() const { return kind_ == KernelKind::GoeOnePointN || kind_ == KernelKind::GoeEdgeN; }

  double operator()(double x, double y) const;
  double diagonal(double x) const;

  /// [K(x_i, x_j)] with basis values cached per node.
  Eigen::MatrixXd matrix(const std::vector<double>& nodes) const;

 private:
  KernelKind kind_;
  int n_;
  std::function<double(double, double)> custom_;
};

/// Diagonal-switch rule shared by all kernels.
inline bool near_diagonal(double x, double y) { return std::abs(x - y) < 1e-6 * (1.0 + std::abs(x)); }

}  // namespace rmt
