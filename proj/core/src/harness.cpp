#include "rmt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"
#include "rmt/spectral.hpp"
#include "rmt/stats.hpp"

namespace rmt {

std::string to_string(EdgeMode m) { return m == EdgeMode::Standard ? "standard" : "goe_refined"; }

EdgeMode edge_mode_from_string(const std::string& name) {
  if (name == "standard") return EdgeMode::Standard;
  if (name == "goe_refined") return EdgeMode::GoeRefined;
  throw ValidationError("unknown edge mode '" + name + "' (expected standard or goe_refined)");
}

double edge_rescale(double lambda_max, Index n, Beta beta, EdgeMode mode) {
  require(n >= 2, "edge_rescale: N must be at least 2");
  const double nd = static_cast<double>(n);
  if (mode == EdgeMode::Standard) return std::pow(nd, 2.0 / 3.0) * (lambda_max - 2.0);
  require(beta == Beta::Real, "edge_rescale: goe_refined mode requires beta = 1");
  return std::pow(nd - 1.0, 1.0 / 6.0) * std::sqrt(nd) * (lambda_max - std::sqrt(4.0 - 2.0 / nd));
}

DistributionCurve empirical_cdf(const std::vector<double>& values, const std::vector<double>& grid) {
  require(!values.empty(), "empirical_cdf: no values");
  require(!grid.empty(), "empirical_cdf: empty grid");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  DistributionCurve c;
  c.grid = grid;
  c.cdf.resize(grid.size());
  c.provenance = Provenance::Empirical;
  c.n_samples = values.size();
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) require(grid[i] > grid[i - 1], "empirical_cdf: grid must be strictly ascending");
    const auto k = std::upper_bound(sorted.begin(), sorted.end(), grid[i]) - sorted.begin();
    c.cdf[i] = static_cast<double>(k) / n;
  }
  return c;
}

double ks_distance(const DistributionCurve& a, const DistributionCurve& b, double r0) {
  require(!a.grid.empty() && !b.grid.empty(), "ks_distance: empty curve");
  const double lo = std::max(a.grid.front(), b.grid.front());
  const double hi = std::min(a.grid.back(), b.grid.back());
  double worst = 0.0;
  bool any = false;
  for (const auto* g : {&a.grid, &b.grid})
    for (double r : *g) {
      if (r <= r0 || r < lo || r > hi) continue;
      any = true;
      worst = std::max(worst, std::abs(a.at(r) - b.at(r)));
    }
  require(any, "ks_distance: grids do not overlap above r0");
  return worst;
}

double ks_distance_samples(std::vector<double> values, const DistributionCurve& curve, double r0) {
  require(!values.empty(), "ks_distance_samples: no values");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  const auto first = std::upper_bound(values.begin(), values.end(), r0);
  // Just above r0 the empirical CDF equals its value at r0.
  double worst = std::abs(static_cast<double>(first - values.begin()) / n - curve.at(r0));
  for (auto it = first; it != values.end(); ++it) {
    const double f = curve.at(*it);
    const auto i = static_cast<double>(it - values.begin());
    worst = std::max({worst, std::abs(i / n - f), std::abs((i + 1.0) / n - f)});
  }
  return worst;
}

double dkw_radius(std::size_t n, double alpha) {
  require(n >= 1, "dkw_radius: n must be positive");
  require(alpha > 0.0 && alpha < 1.0, "dkw_radius: alpha must lie in (0, 1)");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

RateFit rate_fit(const std::vector<double>& n_values, const std::vector<double>& distances,
                 const std::vector<double>& radii, Seed seed, int resamples) {
  require(n_values.size() == distances.size(), "rate_fit: size mismatch");
  require(n_values.size() >= 3, "rate_fit: need at least three points");
  require(radii.empty() || radii.size() == distances.size(), "rate_fit: radii size mismatch");
  RateFit f;
  f.n_values = n_values;
  f.distances = distances;
  f.radii = radii.empty() ? std::vector<double>(distances.size(), 0.0) : radii;

  if (!radii.empty()) {
    bool all_inside = true;
    for (std::size_t i = 0; i < distances.size() && all_inside; ++i)
      for (std::size_t j = i + 1; j < distances.size(); ++j)
        if (std::abs(distances[i] - distances[j]) > f.radii[i] + f.radii[j]) {
          all_inside = false;
          break;
        }
    if (all_inside) {
      f.refused = true;
      f.exponent = std::numeric_limits<double>::quiet_NaN();
      f.intercept = std::numeric_limits<double>::quiet_NaN();
      f.half_width = std::numeric_limits<double>::quiet_NaN();
      return f;
    }
  }

  const LineFit base = loglog_fit(n_values, distances);
  f.exponent = base.slope;
  f.intercept = base.intercept;
  f.residual = base.residual;

  const std::size_t m = n_values.size();
  std::vector<double> lx(m), fitted(m), resid(m);
  for (std::size_t i = 0; i < m; ++i) {
    lx[i] = std::log(n_values[i]);
    fitted[i] = base.intercept + base.slope * lx[i];
    resid[i] = std::log(distances[i]) - fitted[i];
  }
  const CounterStream stream(derive_seed(seed, {0x424F4F54}));  // "BOOT"
  std::vector<double> slopes(static_cast<std::size_t>(resamples));
  std::vector<double> ly(m);
  for (int b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < m; ++i) {
      const double u = stream.uniforms(static_cast<std::uint64_t>(b), i).first;
      const auto pick = std::min(m - 1, static_cast<std::size_t>(u * static_cast<double>(m)));
      ly[i] = fitted[i] + resid[pick];
    }
    slopes[static_cast<std::size_t>(b)] = ols(lx, ly).slope;
  }
  std::sort(slopes.begin(), slopes.end());
  auto q = [&](double p) {
    const double pos = p * static_cast<double>(slopes.size() - 1);
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return i + 1 < slopes.size() ? slopes[i] * (1.0 - frac) + slopes[i + 1] * frac : slopes[i];
  };
  f.half_width = 0.5 * (q(0.975) - q(0.025));
  return f;
}

void ExperimentConfig::validate() const {
  require(!ensembles.empty(), "config: at least one ensemble is required");
  require(n_list.size() >= 3, "config: N_list needs at least three values");
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    require(n_list[k] >= 2, "config: every N must be at least 2");
    if (k > 0) require(n_list[k] > n_list[k - 1], "config: N_list must be strictly ascending");
  }
  require(replicas >= 100, "config: replicas must be at least 100");
  require(step > 0.0 && r_max > r_min, "config: need r_min < r_max and step > 0");
  require(r_min >= kTwLeftCutoff, "config: r_min below the supported range");
  require(r0 >= r_min && r0 < r_max, "config: r0 must lie within the grid");
  require(quad_order >= 8, "config: quad_order must be at least 8");
  require(!channels.empty(), "config: at least one channel is required");
  for (const auto& ch : channels) require(ch == "mc" || ch == "fredholm", "config: unknown channel '" + ch + "'");
  for (const auto& e : ensembles) {
    require(!e.name.empty(), "config: ensemble name must be nonempty");
    EnsembleSpec s = e.spec;
    s.dim = n_list.front();
    s.validate();
    if (mode == EdgeMode::GoeRefined) require(s.beta == Beta::Real, "config: goe_refined mode requires beta = 1");
    for (const auto& ch : channels)
      if (ch == "fredholm") {
        require(s.beta == Beta::Complex && s.law.name == LawName::Gaussian,
                "config: the fredholm channel is only available for GUE");
        require(n_list.back() <= kFiniteNGuard, "config: fredholm channel needs N <= 400");
      }
  }
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  require(j.is_object(), "config: expected a JSON object");
  ExperimentConfig c;
  try {
    const auto& ens = j.at("ensembles");
    require(ens.is_array(), "config: 'ensembles' must be an array");
    for (const auto& e : ens) {
      NamedEnsemble ne;
      ne.spec.beta = beta_from_int(e.at("beta").get<int>());
      ne.spec.law = e.contains("law") ? entry_law_from_json(e.at("law")) : EntryLaw::gaussian();
      ne.name = e.value("name", to_string(ne.spec.law.name));
      c.ensembles.push_back(ne);
    }
    c.n_list = j.at("N_list").get<std::vector<Index>>();
    c.replicas = j.value("replicas", c.replicas);
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      c.r_min = g.value("r_min", c.r_min);
      c.r_max = g.value("r_max", c.r_max);
      c.step = g.value("step", c.step);
    }
    c.r0 = j.value("r0", c.r0);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    c.out_dir = j.value("out_dir", c.out_dir);
    if (j.contains("channels")) c.channels = j.at("channels").get<std::vector<std::string>>();
    if (j.contains("mode")) c.mode = edge_mode_from_string(j.at("mode").get<std::string>());
    c.quad_order = j.value("quad_order", c.quad_order);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  return c;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json ens = nlohmann::json::array();
  for (const auto& e : c.ensembles) ens.push_back({{"name", e.name}, {"beta", as_int(e.spec.beta)}, {"law", to_json(e.spec.law)}});
  return {{"ensembles", ens},
          {"N_list", c.n_list},
          {"replicas", c.replicas},
          {"grid", {{"r_min", c.r_min}, {"r_max", c.r_max}, {"step", c.step}}},
          {"r0", c.r0},
          {"seed", c.seed},
          {"threads", c.threads},
          {"out_dir", c.out_dir},
          {"channels", c.channels},
          {"mode", to_string(c.mode)},
          {"quad_order", c.quad_order}};
}

RateScanResult rate_scan(const ExperimentConfig& config) {
  config.validate();
  const std::vector<double> grid = config.grid();
  const QuadratureRule rule{config.quad_order, 10.0};
  std::optional<DistributionCurve> tw[3];
  auto tw_for = [&](Beta b) -> const DistributionCurve& {
    auto& slot = tw[as_int(b)];
    if (!slot) slot = tw_curve(b, grid, rule, config.threads);
    return *slot;
  };

  RateScanResult result;
  for (const auto& ens : config.ensembles) {
    for (const auto& channel : config.channels) {
      std::vector<double> ns, ds, rs;
      for (Index n : config.n_list) {
        EnsembleSpec spec = ens.spec;
        spec.dim = n;
        RateRow row;
        row.ensemble = ens.name;
        row.beta = as_int(spec.beta);
        row.n = n;
        row.channel = channel;
        if (channel == "mc") {
          std::vector<double> values(config.replicas);
          parallel_for(config.replicas, config.threads, [&](std::size_t r) {
            const Seed s = derive_seed(config.seed, {static_cast<std::uint64_t>(n), r});
            const SpectralSample sample = eigen_decompose(sample_wigner(spec, s), false, s);
            values[r] = edge_rescale(sample.largest(), n, spec.beta, config.mode);
          });
          for (double& v : values) {
            if (v < grid.front()) {
              v = grid.front();
              ++row.clamped_low;
            } else if (v > grid.back()) {
              v = grid.back();
              ++row.clamped_high;
            }
          }
          row.replicas = config.replicas;
          row.ks = ks_distance(empirical_cdf(values, grid), tw_for(spec.beta), config.r0);
          row.dkw_radius = dkw_radius(config.replicas);
        } else {
          const DistributionCurve finite = finite_n_gue_curve(static_cast<int>(n), grid, rule, config.threads);
          row.replicas = 0;
          row.ks = ks_distance(finite, tw_for(Beta::Complex), config.r0);
          row.dkw_radius = 0.0;
        }
        ns.push_back(static_cast<double>(n));
        ds.push_back(row.ks);
        rs.push_back(row.dkw_radius);
        result.rows.push_back(row);
      }
      RateScanResult::Fit fit{ens.name, channel, {}};
      const bool positive = std::all_of(ds.begin(), ds.end(), [](double d) { return d > 0.0; });
      if (positive) {
        fit.fit = rate_fit(ns, ds, channel == "mc" ? rs : std::vector<double>{}, config.seed);
      } else {
        fit.fit.n_values = ns;
        fit.fit.distances = ds;
        fit.fit.radii = rs;
        fit.fit.refused = true;
        fit.fit.exponent = std::numeric_limits<double>::quiet_NaN();
      }
      result.fits.push_back(fit);
    }
  }
  return result;
}

void write_rate_scan_csv(std::ostream& os, const RateScanResult& result) {
  os << "ensemble,beta,N,replicas,ks,dkw_radius,channel\n";
  char buf[256];
  for (const auto& r : result.rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%lld,%zu,%.17g,%.17g,%s\n", r.ensemble.c_str(), r.beta,
                  static_cast<long long>(r.n), r.replicas, r.ks, r.dkw_radius, r.channel.c_str());
    os << buf;
  }
}

}  // namespace rmt
