#include "rmt/flow_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/bridge.hpp"
#include "rmt/error.hpp"
#include "rmt/kernels.hpp"
#include "rmt/parallel.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/stats.hpp"

namespace rmt {

std::string to_string(FlowObservable o) {
  switch (o) {
    case FlowObservable::ImMN:
      return "im_mN";
    case FlowObservable::FOfX:
      return "F_of_X";
    case FlowObservable::Type0Trace:
      return "type0_trace";
  }
  return "?";
}

FlowObservable flow_observable_from_string(const std::string& name) {
  for (auto o : {FlowObservable::ImMN, FlowObservable::FOfX, FlowObservable::Type0Trace})
    if (to_string(o) == name) return o;
  throw ValidationError("unknown flow observable '" + name + "' (expected im_mN, F_of_X or type0_trace)");
}

std::vector<double> FlowScan::default_t_grid(Index n, int points) {
  require(points >= 2, "default_t_grid: need at least two points");
  const double terminal = 8.0 * std::log(static_cast<double>(n));
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = terminal * k / (points - 1);
  grid.back() = terminal;
  return grid;
}

void FlowScan::validate(Index n) const {
  require(!t_grid.empty(), "flow scan: empty t grid");
  require(t_grid.front() == 0.0, "flow scan: t grid must start at 0");
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    require(t_grid[k] > t_grid[k - 1], "flow scan: t grid must be strictly ascending");
  const double terminal = 8.0 * std::log(static_cast<double>(n));
  require(std::abs(t_grid.back() - terminal) <= 1e-9 * terminal, "flow scan: t grid must end at 8 log N");
  require(replicas >= 100, "flow scan: need at least 100 replicas");
  require(!z_list.empty(), "flow scan: empty z list");
  const SpectralDomain edge{DomainKind::SEdge, epsilon, c0};
  for (const auto& z : z_list) require(edge.contains(z, n), "flow scan: z outside S_edge");
}

double flow_observable(FlowObservable o, const SpectralSample& sample, cplx z, double epsilon) {
  const Index n = sample.dim();
  const double nd = static_cast<double>(n);
  switch (o) {
    case FlowObservable::ImMN:
      return m_N(sample, z).imag();
    case FlowObservable::FOfX: {
      ObservableX obs;
      obs.kappa1 = z.real() - 2.0;
      obs.kappa2 = 4.0 * std::pow(nd, -2.0 / 3.0 + epsilon);
      obs.eta = z.imag();
      return smooth_cutoff(observable_X(sample, obs) / std::numbers::pi);
    }
    case FlowObservable::Type0Trace: {
      cplx sum = 0.0;
      for (Index j = 0; j < n; ++j) {
        const cplx d = 1.0 / (sample.eigenvalues[j] - z);
        sum += d * d;
      }
      return (sum / (nd * nd)).imag();
    }
  }
  return 0.0;
}

FlowTable flow_scan(const EnsembleSpec& spec, const FlowScan& scan, FlowObservable observable, unsigned threads) {
  spec.validate();
  scan.validate(spec.dim);
  const std::size_t nt = scan.t_grid.size();
  const std::size_t nz = scan.z_list.size();
  // values[r][k * nz + z]
  std::vector<std::vector<double>> values(scan.replicas, std::vector<double>(nt * nz));
  parallel_for(scan.replicas, threads, [&](std::size_t r) {
    const Seed sr = derive_seed(scan.seed, {static_cast<std::uint64_t>(spec.dim), r});
    const HermitianMatrix h0 = sample_wigner(spec, derive_seed(sr, {1}));
    const HermitianMatrix g = flow_gaussian(spec.beta, spec.dim, derive_seed(sr, {2}));
    for (std::size_t k = 0; k < nt; ++k) {
      const SpectralSample s = eigen_decompose(interpolate_flow(h0, g, scan.t_grid[k]), false);
      for (std::size_t iz = 0; iz < nz; ++iz)
        values[r][k * nz + iz] = flow_observable(observable, s, scan.z_list[iz], scan.epsilon);
    }
  });

  FlowTable table;
  table.observable = observable;
  table.n = spec.dim;
  table.flatness.assign(nz, 0.0);
  table.excess.assign(nz, -std::numeric_limits<double>::infinity());
  std::vector<double> col(scan.replicas), diff(scan.replicas);
  for (std::size_t iz = 0; iz < nz; ++iz) {
    for (std::size_t r = 0; r < scan.replicas; ++r) col[r] = values[r][iz];
    const MeanSe base = mean_se(col);
    for (std::size_t k = 0; k < nt; ++k) {
      for (std::size_t r = 0; r < scan.replicas; ++r) {
        col[r] = values[r][k * nz + iz];
        diff[r] = col[r] - values[r][iz];
      }
      const MeanSe cur = mean_se(col);
      const MeanSe d = mean_se(diff);
      FlowRow row;
      row.t = scan.t_grid[k];
      row.z = scan.z_list[iz];
      row.mean = cur.mean;
      row.se = cur.se;
      row.diff = d.mean;
      row.diff_se_coupled = d.se;
      row.diff_se_uncoupled = std::hypot(cur.se, base.se);
      table.rows.push_back(row);
      table.flatness[iz] = std::max(table.flatness[iz], std::abs(d.mean));
      table.excess[iz] = std::max(table.excess[iz], std::abs(d.mean) - 3.0 * d.se);
    }
  }
  return table;
}

double gue_edge_trace(Index n, cplx z, const EdgeTraceOptions& options) {
  require(n >= 2, "gue_edge_trace: N must be at least 2");
  require(z.imag() > 0.0, "gue_edge_trace: Im z must be positive");
  require(options.resolution >= 1.0, "gue_edge_trace: resolution must be at least 1");
  require(options.lower_split < options.upper, "gue_edge_trace: need L0 < upper cutoff");
  const int ni = static_cast<int>(n);
  const double nd = static_cast<double>(n);
  const double n23 = std::pow(nd, 2.0 / 3.0);
  const double kt = n23 * (z.real() - 2.0);
  const double et = n23 * z.imag();
  auto lorentz = [&](double x) { return n23 * et / ((x - kt) * (x - kt) + et * et); };

  // Bulk: mu in [-2 sqrt(N) - 12, mu(L0)], where mu = 2 sqrt(N) + x N^{-1/6}
  // and K_N(mu, mu) d mu = K^edge(x) dx.
  const double n16 = std::pow(nd, -1.0 / 6.0);
  const double mu_split = edge_point(ni, options.lower_split);
  const double mu_lo = -2.0 * std::sqrt(nd) - 12.0;
  static const QuadratureNodes ref = gauss_legendre(16);
  double bulk = 0.0;
  for (double a = mu_lo; a < mu_split;) {
    const double gap = 4.0 * nd + 2.0 - a * a;
    double width = gap > 1.0 ? std::numbers::pi / std::sqrt(gap) : 1.0;
    width = std::min(width, 0.5) / options.resolution;
    const double b = std::min(mu_split, a + width);
    const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    double part = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double mu = mid + half * ref.nodes[i];
      const double x = (mu - 2.0 * std::sqrt(nd)) / n16;
      part += ref.weights[i] * hermite_kernel_diag(ni, mu) * lorentz(x);
    }
    bulk += half * part;
    a = b;
  }

  // Edge: x in [L0, upper], split at the Lorentzian centre.
  std::vector<double> cuts{options.lower_split};
  if (kt > options.lower_split && kt < options.upper) cuts.push_back(kt);
  cuts.push_back(options.upper);
  AdaptiveOptions ao;
  ao.abs_tol = 1e-13 / options.resolution;
  ao.rel_tol = 1e-11 / options.resolution;
  double edge = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    edge += integrate_adaptive([&](double x) { return edge_kernel_diag(ni, x) * lorentz(x); }, cuts[k], cuts[k + 1],
                               ao);
  // (1/N) E[Im Tr G]
  return (bulk + edge) / nd;
}

UnmatchedResult unmatched_probe(const EnsembleSpec& spec, const std::vector<Index>& n_list,
                                const UnmatchedOptions& options, unsigned threads) {
  require(n_list.size() >= 2, "unmatched: need at least two values of N");
  require(options.replicas >= 500, "unmatched: need at least 500 replicas");
  for (std::size_t k = 1; k < n_list.size(); ++k)
    require(n_list[k] > n_list[k - 1], "unmatched: N list must be ascending");
  UnmatchedResult result;
  std::vector<double> ns, mags, psis, rel;
  for (Index n : n_list) {
    EnsembleSpec s = spec;
    s.dim = n;
    s.validate();
    const double nd = static_cast<double>(n);
    const cplx z(options.E, std::pow(nd, -options.eta_exponent));
    const SpectralDomain domain{DomainKind::S, 0.0, 4.0};
    require(domain.contains(z, n), "unmatched: z outside S");
    std::vector<cplx> q(options.replicas), d(options.replicas);
    parallel_for(options.replicas, threads, [&](std::size_t r) {
      const Seed seed = derive_seed(options.seed, {static_cast<std::uint64_t>(n), r});
      const Eigen::MatrixXcd g = green_matrix_direct(sample_wigner(s, seed), z);
      cplx acc = 0.0;
      for (Index b = 0; b < n; ++b)
        for (Index a = 0; a < n; ++a) acc += g(a, b) * g(a, b) * g(b, a);
      cplx diag2 = 0.0, diag1 = 0.0;
      for (Index a = 0; a < n; ++a) {
        diag2 += g(a, a) * g(a, a);
        diag1 += g(a, a);
      }
      q[r] = acc / (nd * nd);
      d[r] = diag2 * diag1 / (nd * nd);
    });
    auto summarize = [](const std::vector<cplx>& v, cplx& mean, double& se) {
      std::vector<double> re(v.size()), im(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        re[i] = v[i].real();
        im[i] = v[i].imag();
      }
      const MeanSe a = mean_se(re), b = mean_se(im);
      mean = {a.mean, b.mean};
      se = std::hypot(a.se, b.se);
    };
    UnmatchedRow row;
    row.n = n;
    row.z = z;
    summarize(q, row.estimate, row.se);
    summarize(d, row.diagonal, row.diagonal_se);
    row.naive_psi3 = std::pow(psi(z, n), 3.0);
    result.rows.push_back(row);
    ns.push_back(nd);
    mags.push_back(std::abs(row.estimate));
    psis.push_back(row.naive_psi3);
    rel.push_back(row.se / std::abs(row.estimate));
  }
  const LineFit fit = loglog_fit(ns, mags);
  result.exponent = fit.slope;
  result.psi3_exponent = loglog_fit(ns, psis).slope;
  double mx = 0.0;
  for (double v : ns) mx += std::log(v);
  mx /= static_cast<double>(ns.size());
  double sxx = 0.0;
  for (double v : ns) sxx += (std::log(v) - mx) * (std::log(v) - mx);
  double var = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double w = (std::log(ns[i]) - mx) / sxx;
    var += w * w * rel[i] * rel[i];
  }
  result.exponent_se = std::sqrt(var);
  return result;
}

}  // namespace rmt
