#include "rmt/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/airy.hpp"
#include "rmt/error.hpp"
#include "rmt/hermite.hpp"

namespace rmt {

namespace {

void check_n(int n) { require(n >= 1, "kernel: N must be at least 1"); }

double cd_diag(int n, const HermiteTop& t) {
  const double rn = std::sqrt(static_cast<double>(n));
  return rn * (rn * t.nm1 * t.nm1 - std::sqrt(n - 1.0) * t.nm2 * t.n);
}

double cd_offdiag(int n, double x, double y, const HermiteTop& tx, const HermiteTop& ty) {
  return std::sqrt(static_cast<double>(n)) * (tx.n * ty.nm1 - tx.nm1 * ty.n) / (x - y);
}

double cd(int n, double x, double y) {
  return cd_offdiag(n, x, y, hermite_top(n, x), hermite_top(n, y));
}

double airy_offdiag(double x, double y, const AiryValues& ax, const AiryValues& ay) {
  return (ax.ai * ay.aip - ax.aip * ay.ai) / (x - y);
}

double airy_diag(const AiryValues& a, double x) { return a.aip * a.aip - x * a.ai * a.ai; }

double edge_scale(int n) { return std::pow(static_cast<double>(n), -1.0 / 6.0); }

}  // namespace

double hermite_kernel_diag(int n, double x) {
  check_n(n);
  return cd_diag(n, hermite_top(n, x));
}

double hermite_kernel(int n, double x, double y) {
  check_n(n);
  if (near_diagonal(x, y)) return hermite_kernel_diag(n, 0.5 * (x + y));
  return cd(n, x, y);
}

double rescaled_kernel(int n, double x, double y) {
  check_n(n);
  const double rn = std::sqrt(static_cast<double>(n));
  if (near_diagonal(x, y)) return rn * hermite_kernel_diag(n, rn * 0.5 * (x + y));
  return rn * cd(n, rn * x, rn * y);
}

double edge_point(int n, double x) { return 2.0 * std::sqrt(static_cast<double>(n)) + x * edge_scale(n); }

double edge_kernel_diag(int n, double x) {
  check_n(n);
  return edge_scale(n) * hermite_kernel_diag(n, edge_point(n, x));
}

double edge_kernel(int n, double x, double y) {
  check_n(n);
  if (near_diagonal(x, y)) return edge_kernel_diag(n, 0.5 * (x + y));
  return edge_scale(n) * cd(n, edge_point(n, x), edge_point(n, y));
}

double airy_kernel_diag(double x) { return airy_diag(airy_both(x), x); }

double airy_kernel(double x, double y) {
  if (near_diagonal(x, y)) return airy_kernel_diag(0.5 * (x + y));
  return airy_offdiag(x, y, airy_both(x), airy_both(y));
}

double kernel_diag_derivative(int n, double x) {
  check_n(n);
  const HermiteTop t = hermite_top(n, x);
  return -std::sqrt(static_cast<double>(n)) * t.nm1 * t.n;
}

double edge_kernel_diag_derivative(int n, double x) {
  check_n(n);
  return edge_scale(n) * edge_scale(n) * kernel_diag_derivative(n, edge_point(n, x));
}

double goe_kernel(int n, double x) {
  require(n >= 2, "goe_kernel: N must be at least 2");
  const HermiteTop t = hermite_top(n, x);
  const bool odd = n % 2 == 1;
  // int sgn(x - t) phi_N(t) dt reduced by parity to integrals from 0.
  double sign_integral = 2.0 * hermite_partial_integral(n, x);
  if (odd) sign_integral -= 2.0 * hermite_half_integral(n);
  double k1 = cd_diag(n, t) + 0.25 * std::sqrt(static_cast<double>(n)) * t.nm1 * sign_integral;
  if (odd) k1 += t.nm1 / (2.0 * hermite_half_integral(n - 1));
  return k1;
}

double goe_edge_kernel(int n, double x) { return edge_scale(n) * goe_kernel(n, edge_point(n, x)); }

double goe_edge_limit(double x) { return airy_kernel_diag(x) + 0.5 * airy(x) * airy_integral(x); }

double edge_kernel_gap(int n, double x, double y, int a, int b, double lower) {
  check_n(n);
  require((a == 0 || a == 1) && (b == 0 || b == 1), "edge_kernel_gap: derivative orders must be 0 or 1");
  require(x >= lower && y >= lower, "edge_kernel_gap: points below the lower cutoff");
  auto f = [n](double u, double v) { return edge_kernel(n, u, v) - airy_kernel(u, v); };
  // Oscillation length of the Airy functions is ~ |x|^{-1/2} on the left.
  const double h = 1e-3 / std::sqrt(1.0 + std::max(0.0, -std::min(x, y)));
  double value = 0.0;
  if (a == 0 && b == 0)
    value = f(x, y);
  else if (a == 1 && b == 0)
    value = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
  else if (a == 0 && b == 1)
    value = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
  else
    value = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h);
  return std::abs(value);
}

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::HermiteN: return "hermite_N";
    case KernelKind::RescaledN: return "rescaled_N";
    case KernelKind::EdgeN: return "edge_N";
    case KernelKind::Airy: return "airy";
    case KernelKind::GoeOnePointN: return "goe_one_point_N";
    case KernelKind::GoeEdgeN: return "goe_edge_N";
    case KernelKind::AiryHalfSum: return "airy_half_sum";
    case KernelKind::Custom: return "custom";
  }
  return "unknown";
}

KernelKind kernel_kind_from_string(const std::string& name) {
  for (KernelKind k : {KernelKind::HermiteN, KernelKind::RescaledN, KernelKind::EdgeN, KernelKind::Airy,
                       KernelKind::GoeOnePointN, KernelKind::GoeEdgeN, KernelKind::AiryHalfSum})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown kernel kind '" + name + "'");
}

KernelOperator::KernelOperator(KernelKind kind, int n) : kind_(kind), n_(n) {
  switch (kind) {
    case KernelKind::Airy:
    case KernelKind::AiryHalfSum:
      break;
    case KernelKind::GoeOnePointN:
    case KernelKind::GoeEdgeN:
      require(n >= 2, "kernel: GOE kernels need N >= 2");
      break;
    case KernelKind::Custom:
      throw ValidationError("kernel: use KernelOperator::custom for custom kernels");
    default:
      require(n >= 1, "kernel: N must be at least 1");
  }
}

KernelOperator KernelOperator::custom(std::function<double(double, double)> fn) {
  require(static_cast<bool>(fn), "kernel: empty custom function");
  KernelOperator op(KernelKind::Airy);
  op.kind_ = KernelKind::Custom;
  op.custom_ = std::move(fn);
  return op;
}

double KernelOperator::diagonal(double x) const {
  switch (kind_) {
    case KernelKind::HermiteN: return hermite_kernel_diag(n_, x);
    case KernelKind::RescaledN: {
      const double rn = std::sqrt(static_cast<double>(n_));
      return rn * hermite_kernel_diag(n_, rn * x);
    }
    case KernelKind::EdgeN: return edge_kernel_diag(n_, x);
    case KernelKind::Airy: return airy_kernel_diag(x);
    case KernelKind::GoeOnePointN: return goe_kernel(n_, x);
    case KernelKind::GoeEdgeN: return goe_edge_kernel(n_, x);
    case KernelKind::AiryHalfSum: return 0.5 * detail::airy_unchecked(x).ai;
    case KernelKind::Custom: return custom_(x, x);
  }
  throw ValidationError("kernel: unknown kind");
}

double KernelOperator::operator()(double x, double y) const {
  switch (kind_) {
    case KernelKind::HermiteN: return hermite_kernel(n_, x, y);
    case KernelKind::RescaledN: return rescaled_kernel(n_, x, y);
    case KernelKind::EdgeN: return edge_kernel(n_, x, y);
    case KernelKind::Airy: return airy_kernel(x, y);
    case KernelKind::AiryHalfSum: return 0.5 * detail::airy_unchecked(0.5 * (x + y)).ai;
    case KernelKind::Custom: return custom_(x, y);
    case KernelKind::GoeOnePointN:
    case KernelKind::GoeEdgeN:
      require(x == y, "kernel: GOE one-point kernels are defined on the diagonal only");
      return diagonal(x);
  }
  throw ValidationError("kernel: unknown kind");
}

Eigen::MatrixXd KernelOperator::matrix(const std::vector<double>& nodes) const {
  require(!diagonal_only(), "kernel: GOE one-point kernels have no operator matrix");
  const auto m = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd k(m, m);
  switch (kind_) {
    case KernelKind::HermiteN:
    case KernelKind::RescaledN:
    case KernelKind::EdgeN: {
      // Map to unscaled coordinates X = a + b x; the kernel is c K_N(X, Y).
      double a = 0.0, b = 1.0, c = 1.0;
      if (kind_ == KernelKind::RescaledN) b = c = std::sqrt(static_cast<double>(n_));
      if (kind_ == KernelKind::EdgeN) {
        a = 2.0 * std::sqrt(static_cast<double>(n_));
        b = c = edge_scale(n_);
      }
      std::vector<HermiteTop> top(nodes.size());
      std::vector<double> big(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        big[i] = a + b * nodes[i];
        top[i] = hermite_top(n_, big[i]);
      }
      for (Eigen::Index i = 0; i < m; ++i) {
        k(i, i) = c * cd_diag(n_, top[i]);
        for (Eigen::Index j = i + 1; j < m; ++j) {
          const double v = near_diagonal(nodes[i], nodes[j])
                               ? (*this)(nodes[i], nodes[j])
                               : c * cd_offdiag(n_, big[i], big[j], top[i], top[j]);
          k(i, j) = k(j, i) = v;
        }
      }
      return k;
    }
    case KernelKind::Airy: {
      std::vector<AiryValues> av(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) av[i] = detail::airy_unchecked(nodes[i]);
      for (Eigen::Index i = 0; i < m; ++i) {
        k(i, i) = airy_diag(av[i], nodes[i]);
        for (Eigen::Index j = i + 1; j < m; ++j) {
          const double mid = 0.5 * (nodes[i] + nodes[j]);
          const double v = near_diagonal(nodes[i], nodes[j]) ? airy_diag(detail::airy_unchecked(mid), mid)
                                                             : airy_offdiag(nodes[i], nodes[j], av[i], av[j]);
          k(i, j) = k(j, i) = v;
        }
      }
      return k;
    }
    default:
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i; j < m; ++j) k(i, j) = k(j, i) = (*this)(nodes[i], nodes[j]);
      return k;
  }
}

}  // namespace rmt
