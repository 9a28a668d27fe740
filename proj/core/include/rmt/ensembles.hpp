#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rmt/matrix.hpp"
#include "rmt/random.hpp"

namespace rmt {

enum class LawName { Gaussian, Rademacher, Uniform, ShiftedBernoulli, Custom };

std::string to_string(LawName name);
LawName law_name_from_string(const std::string& name);

/// Law of the scaled entries sqrt(N) H_ij. The stored real variable X has
/// mean 0 and variance 1; a complex off-diagonal entry is (X + iY)/sqrt(2)
/// with X, Y independent copies.
struct EntryLaw {
  LawName name = LawName::Gaussian;
  std::vector<double> parameters;
  /// Variance of sqrt(N) H_ii. Defaults to 2/beta when unset.
  std::optional<double> diag_variance;
  /// E[X^k] for k = 1..kMaxMomentOrder.
  std::map<int, double> offdiag_moments;
  bool complex_capable = true;

  static constexpr int kMaxMomentOrder = 8;

  static EntryLaw gaussian();
  static EntryLaw rademacher();
  /// Centered uniform on [-sqrt 3, sqrt 3].
  static EntryLaw uniform();
  /// Two-point law: value sqrt((1-p)/p) with probability p, -sqrt(p/(1-p))
  /// otherwise. Third cumulant (1-2p)/sqrt(p(1-p)).
  static EntryLaw shifted_bernoulli(double p);
  /// Piecewise-linear inverse CDF through `quantiles` at equally spaced
  /// probabilities 0, 1/(n-1), ..., 1. Standardised to mean 0, variance 1.
  static EntryLaw custom(std::vector<double> quantiles, bool complex_capable = false);

  /// One draw of X addressed by (index, lane) in `stream`.
  double draw(const CounterStream& stream, std::uint64_t index, std::uint64_t lane) const;

  /// Inverse CDF of X for the non-Gaussian laws.
  double quantile(double u) const;

  double diagonal_variance(Beta beta) const;

  /// Raw quantile table for custom laws, after standardisation.
  const std::vector<double>& table() const { return table_; }

 private:
  std::vector<double> table_;
};

EntryLaw entry_law_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EntryLaw& law);

struct EnsembleSpec {
  Beta beta = Beta::Complex;
  Index dim = 2;
  EntryLaw law = EntryLaw::gaussian();

  /// Throws ValidationError when the invariants fail.
  void validate() const;
};

/// Draws one matrix. Entry (i, j), i <= j, uses counter index i*N + j of a
/// stream keyed by `seed`; lane 0 feeds the real part and lane 1 the
/// imaginary part. The result is therefore independent of evaluation order.
HermitianMatrix sample_wigner(const EnsembleSpec& spec, Seed seed);

/// GOE (beta=1) or GUE (beta=2).
HermitianMatrix sample_gaussian(Beta beta, Index dim, Seed seed);

/// Time point on the Ornstein-Uhlenbeck interpolation.
struct FlowPoint {
  double t = 0.0;
  Seed base_seed = 0;
  Seed gaussian_seed = 0;
};

/// The Gaussian endpoint G used by every time on a trajectory.
HermitianMatrix flow_gaussian(Beta beta, Index dim, Seed gaussian_seed);

/// H(t) = e^{-t/2} H0 + sqrt(1 - e^{-t}) G with G = flow_gaussian(...).
HermitianMatrix interpolate_flow(const HermitianMatrix& h0, const FlowPoint& point);

/// Same with a precomputed Gaussian endpoint. t = 0 returns h0 unchanged.
HermitianMatrix interpolate_flow(const HermitianMatrix& h0, const HermitianMatrix& g, double t);

enum class CumulantSource { Analytic, Sample };

/// Cumulants of the scaled off-diagonal entry. Real laws fill `real`
/// (index k); complex laws fill `complex` (index (p, q)).
struct CumulantTable {
  Beta beta = Beta::Real;
  std::map<int, double> real;
  std::map<std::pair<int, int>, std::complex<double>> complex;
  CumulantSource source = CumulantSource::Analytic;
  std::size_t sample_count = 0;

  /// c^(k) for real tables or c^(p,q) for complex ones.
  double order_k(int k) const;
  std::complex<double> pq(int p, int q) const;
};

/// Analytic cumulants up to `max_order` from the stored moments.
CumulantTable cumulants(const EntryLaw& law, Beta beta, int max_order);

/// Cumulants of the flowed entry e^{-t/2} h + sqrt(1-e^{-t}) g: order-k
/// entries scale by e^{-k t/2} for k >= 3, second order is unchanged.
CumulantTable flow_cumulants(const CumulantTable& table, double t);

/// Joint cumulant kappa(x_1, ..., x_n) from a moment oracle, summed over set
/// partitions. `moment(mask)` must return E[prod_{i in mask} x_i].
template <class Scalar, class MomentFn>
Scalar joint_cumulant(int n, MomentFn&& moment);

/// Sample cumulants of real draws, orders 1..max_order.
CumulantTable sample_cumulants(const std::vector<double>& draws, int max_order);

/// Sample (p, q) cumulants of complex draws with p + q <= max_order.
CumulantTable sample_cumulants(const std::vector<std::complex<double>>& draws, int max_order);

}  // namespace rmt

#include "rmt/detail/partitions.hpp"
