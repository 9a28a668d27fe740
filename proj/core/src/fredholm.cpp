#include "rmt/fredholm.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"

namespace rmt {

double fredholm_det(const KernelOperator& kernel, double s, const QuadratureRule& rule) {
  require(std::isfinite(s), "fredholm_det: s must be finite");
  const QuadratureNodes q = rule.nodes_for(s);
  const Eigen::MatrixXd k = kernel.matrix(q.nodes);
  const auto m = static_cast<Eigen::Index>(q.size());
  Eigen::VectorXd w(m);
  for (Eigen::Index i = 0; i < m; ++i) w[i] = std::sqrt(q.weights[i]);
  Eigen::MatrixXd a = -(w.asDiagonal() * k * w.asDiagonal());
  a.diagonal().array() += 1.0;
  return a.partialPivLu().determinant();
}

FredholmResult fredholm_det_checked(const KernelOperator& kernel, double s, const QuadratureRule& rule,
                                    double tolerance) {
  QuadratureRule fine = rule;
  fine.order = 2 * rule.order;
  const double coarse = fredholm_det(kernel, s, rule);
  const double value = fredholm_det(kernel, s, fine);
  FredholmResult r{value, std::abs(value - coarse), fine.order};
  if (!(r.drift <= tolerance))
    throw ConvergenceError("fredholm_det: order doubling changed the determinant by " + std::to_string(r.drift) +
                           " at s = " + std::to_string(s));
  return r;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::FredholmAiry: return "fredholm_airy";
    case Provenance::FredholmFiniteN: return "fredholm_finite_N";
    case Provenance::Empirical: return "empirical";
  }
  return "unknown";
}

double DistributionCurve::at(double r) const {
  require(!grid.empty() && grid.size() == cdf.size(), "DistributionCurve: empty or inconsistent curve");
  if (r < grid.front()) return provenance == Provenance::Empirical ? 0.0 : cdf.front();
  if (r >= grid.back()) return cdf.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
  if (provenance == Provenance::Empirical) return cdf[i];
  const double f = (r - grid[i]) / (grid[i + 1] - grid[i]);
  return cdf[i] + f * (cdf[i + 1] - cdf[i]);
}

double DistributionCurve::quantile(double p) const {
  require(!grid.empty() && grid.size() == cdf.size(), "DistributionCurve: empty or inconsistent curve");
  if (p <= cdf.front()) return grid.front();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (cdf[i] >= p) {
      const double span = cdf[i] - cdf[i - 1];
      if (span <= 0.0) return grid[i];
      return grid[i - 1] + (p - cdf[i - 1]) / span * (grid[i] - grid[i - 1]);
    }
  }
  return grid.back();
}

bool DistributionCurve::is_monotone(double slack) const {
  for (std::size_t i = 1; i < cdf.size(); ++i)
    if (cdf[i] < cdf[i - 1] - slack) return false;
  return true;
}

namespace {

CdfPoint clamp_cdf(double v) { return {std::clamp(v, 0.0, 1.0), false}; }

}  // namespace

CdfPoint tw2_cdf_flagged(double r, const QuadratureRule& rule) {
  require(std::isfinite(r), "tw2_cdf: r must be finite");
  if (r < kTwLeftCutoff) return {0.0, true};
  static const KernelOperator airy(KernelKind::Airy);
  return clamp_cdf(fredholm_det_checked(airy, r, rule).value);
}

double tw2_cdf(double r, const QuadratureRule& rule) { return tw2_cdf_flagged(r, rule).value; }

CdfPoint tw1_cdf_flagged(double r, const QuadratureRule& rule) {
  require(std::isfinite(r), "tw1_cdf: r must be finite");
  if (r < kTwLeftCutoff) return {0.0, true};
  static const KernelOperator half(KernelKind::AiryHalfSum);
  return clamp_cdf(fredholm_det_checked(half, r, rule).value);
}

double tw1_cdf(double r, const QuadratureRule& rule) { return tw1_cdf_flagged(r, rule).value; }

DistributionCurve tw_curve(Beta beta, const std::vector<double>& grid, const QuadratureRule& rule, unsigned threads) {
  require(!grid.empty(), "tw_curve: empty grid");
  require(std::is_sorted(grid.begin(), grid.end()), "tw_curve: grid must be ascending");
  DistributionCurve c;
  c.grid = grid;
  c.cdf.assign(grid.size(), 0.0);
  c.beta = beta;
  c.provenance = Provenance::FredholmAiry;
  std::vector<char> flags(grid.size(), 0);
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const CdfPoint p = beta == Beta::Complex ? tw2_cdf_flagged(grid[i], rule) : tw1_cdf_flagged(grid[i], rule);
    c.cdf[i] = p.value;
    flags[i] = p.below_cutoff;
  });
  c.below_cutoff = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1));
  return c;
}

double finite_n_gue_cdf(int n, double r, const QuadratureRule& rule) {
  require(n >= 1, "finite_n_gue_cdf: N must be positive");
  require(n <= kFiniteNGuard, "finite_n_gue_cdf: N above the cost guard of 400");
  require(std::isfinite(r), "finite_n_gue_cdf: r must be finite");
  const KernelOperator edge(KernelKind::EdgeN, n);
  return std::clamp(fredholm_det_checked(edge, r, rule).value, 0.0, 1.0);
}

DistributionCurve finite_n_gue_curve(int n, const std::vector<double>& grid, const QuadratureRule& rule,
                                     unsigned threads) {
  require(!grid.empty(), "finite_n_gue_curve: empty grid");
  require(std::is_sorted(grid.begin(), grid.end()), "finite_n_gue_curve: grid must be ascending");
  DistributionCurve c;
  c.grid = grid;
  c.cdf.assign(grid.size(), 0.0);
  c.beta = Beta::Complex;
  c.provenance = Provenance::FredholmFiniteN;
  c.n = n;
  parallel_for(grid.size(), threads, [&](std::size_t i) { c.cdf[i] = finite_n_gue_cdf(n, grid[i], rule); });
  return c;
}

std::vector<double> make_grid(double r_min, double r_max, double step) {
  require(std::isfinite(r_min) && std::isfinite(r_max) && r_min <= r_max, "grid: need r_min <= r_max");
  require(step > 0.0, "grid: step must be positive");
  const auto count = static_cast<std::size_t>(std::floor((r_max - r_min) / step + 0.5)) + 1;
  require(count <= 1000000, "grid: too many points");
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) g[i] = r_min + static_cast<double>(i) * step;
  return g;
}

}  // namespace rmt
