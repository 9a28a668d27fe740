#pragma once

#include <cstddef>
#include <vector>

namespace rmt {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
  std::size_t count = 0;
};

/// Sample mean and standard error (n-1 denominator). Summation is in index
/// order so results do not depend on how the values were produced.
MeanSe mean_se(const std::vector<double>& values);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< root mean square residual
};

/// Ordinary least squares y = intercept + slope * x.
LineFit ols(const std::vector<double>& x, const std::vector<double>& y);
/// OLS on (log x, log y); all inputs must be positive.
LineFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rmt
