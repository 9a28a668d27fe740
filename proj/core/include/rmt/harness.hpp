#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmt/ensembles.hpp"
#include "rmt/fredholm.hpp"

namespace rmt {

enum class EdgeMode { Standard, GoeRefined };
std::string to_string(EdgeMode m);
EdgeMode edge_mode_from_string(const std::string& name);

/// standard: N^{2/3} (lambda - 2)
/// goe_refined: (N-1)^{1/6} sqrt(N) (lambda - sqrt(4 - 2/N)), beta = 1 only.
double edge_rescale(double lambda_max, Index n, Beta beta, EdgeMode mode = EdgeMode::Standard);

/// cdf[i] = #{v <= grid[i]} / n. Values outside the grid are expected to be
/// clamped by the caller if total mass 1 on the grid is wanted.
DistributionCurve empirical_cdf(const std::vector<double>& values, const std::vector<double>& grid);

/// sup |a(r) - b(r)| over the grid points of either curve with r > r0 lying
/// in the common range. Throws if the grids do not overlap above r0.
double ks_distance(const DistributionCurve& a, const DistributionCurve& b, double r0);

/// Exact sup over r > r0 between the empirical CDF of `values` and a curve,
/// checking both sides of every jump.
double ks_distance_samples(std::vector<double> values, const DistributionCurve& curve, double r0);

/// sqrt(ln(2/alpha) / (2 n))
double dkw_radius(std::size_t n, double alpha = 0.01);

struct RateFit {
  std::vector<double> n_values;
  std::vector<double> distances;
  std::vector<double> radii;  ///< DKW radius per point, 0 for deterministic channels
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  double half_width = 0.0;  ///< 95% residual-bootstrap half width of the exponent
  bool refused = false;     ///< all pairwise differences lie inside the DKW radii
};

/// OLS on (log N, log d) with a 200-resample residual bootstrap. With
/// nonzero radii the fit is refused (exponent NaN) when every pair of
/// distances is within the sum of its radii.
RateFit rate_fit(const std::vector<double>& n_values, const std::vector<double>& distances,
                 const std::vector<double>& radii = {}, Seed seed = 0, int resamples = 200);

struct NamedEnsemble {
  std::string name;
  EnsembleSpec spec;  ///< dim is overwritten per N
};

struct ExperimentConfig {
  std::vector<NamedEnsemble> ensembles;
  std::vector<Index> n_list;
  std::size_t replicas = 1000;
  double r_min = -6.0;
  double r_max = 4.0;
  double step = 0.02;
  double r0 = -3.5;
  Seed seed = 0;
  unsigned threads = 1;
  std::string out_dir = ".";
  std::vector<std::string> channels{"mc"};
  EdgeMode mode = EdgeMode::Standard;
  int quad_order = 64;

  void validate() const;
  std::vector<double> grid() const { return make_grid(r_min, r_max, step); }
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);

struct RateRow {
  std::string ensemble;
  int beta = 2;
  Index n = 0;
  std::size_t replicas = 0;
  double ks = 0.0;
  double dkw_radius = 0.0;
  std::string channel;
  std::size_t clamped_low = 0;
  std::size_t clamped_high = 0;
};

struct RateScanResult {
  std::vector<RateRow> rows;
  struct Fit {
    std::string ensemble;
    std::string channel;
    RateFit fit;
  };
  std::vector<Fit> fits;
};

/// mc channel: per N, `replicas` matrices with seeds derive_seed(seed, {N, r}),
/// rescaled largest eigenvalue clamped to the grid, KS against TW_beta.
/// fredholm channel (GUE only): KS between finite_n_gue_cdf(N, .) and TW_2.
RateScanResult rate_scan(const ExperimentConfig& config);

/// Columns ensemble,beta,N,replicas,ks,dkw_radius,channel.
void write_rate_scan_csv(std::ostream& os, const RateScanResult& result);

}  // namespace rmt
