#include "rmt/stats.hpp"

#include <cmath>

#include "rmt/error.hpp"

namespace rmt {

MeanSe mean_se(const std::vector<double>& values) {
  MeanSe r;
  r.count = values.size();
  if (values.empty()) return r;
  double sum = 0.0;
  for (double v : values) sum += v;
  r.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return r;
  double ss = 0.0;
  for (double v : values) ss += (v - r.mean) * (v - r.mean);
  const double n = static_cast<double>(values.size());
  r.se = std::sqrt(ss / (n - 1.0) / n);
  return r;
}

LineFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size(), "ols: size mismatch");
  require(x.size() >= 2, "ols: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  require(sxx > 0.0, "ols: x values are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - f.intercept - f.slope * x[i];
    rss += e * e;
  }
  f.residual = std::sqrt(rss / n);
  return f;
}

LineFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size(), "loglog_fit: size mismatch");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, "loglog_fit: values must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return ols(lx, ly);
}

}  // namespace rmt
