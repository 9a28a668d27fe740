#include "rmt/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

BridgeParams BridgeParams::make(Index n, double epsilon, double E) {
  require(n >= 2, "bridge: N must be at least 2");
  require(epsilon > 0.0 && epsilon < 1.0 / 6.0, "bridge: epsilon must lie in (0, 1/6)");
  const double nd = static_cast<double>(n);
  BridgeParams p;
  p.epsilon = epsilon;
  p.E = E;
  p.n = n;
  p.E_L = 2.0 + 4.0 * std::pow(nd, -2.0 / 3.0 + epsilon);
  p.eta = std::pow(nd, -1.0 + epsilon);
  p.l1 = std::pow(nd, 3.0 * epsilon) * p.eta;
  p.l = std::pow(nd, 3.0 * epsilon) * p.l1;
  return p;
}

void BridgeParams::validate() const {
  require(n >= 2, "bridge: N must be at least 2");
  const double gap = std::pow(static_cast<double>(n), 0.5 * epsilon);
  require(gap / static_cast<double>(n) <= eta, "bridge: need 1/N << eta");
  require(gap * eta <= l1, "bridge: need eta << l1");
  require(gap * l1 <= l, "bridge: need l1 << l");
  require(gap * l <= E_L - E, "bridge: need l << E_L - E");
}

double theta_eta(double x, double eta) {
  require(eta > 0.0, "theta_eta: eta must be positive");
  return eta / (std::numbers::pi * (x * x + eta * eta));
}

namespace {

double arctan_count(const SpectralSample& sample, double lo, double hi, double eta) {
  double s = 0.0;
  for (Index j = 0; j < sample.dim(); ++j) {
    const double lambda = sample.eigenvalues[j];
    s += std::atan((hi - lambda) / eta) - std::atan((lo - lambda) / eta);
  }
  return s;
}

}  // namespace

double smoothed_count(const SpectralSample& sample, const BridgeParams& p) {
  require(p.eta > 0.0 && p.E < p.E_L, "smoothed_count: invalid parameters");
  return arctan_count(sample, p.E, p.E_L, p.eta) / std::numbers::pi;
}

double smoothed_count_quadrature(const SpectralSample& sample, const BridgeParams& p, double tol) {
  require(p.eta > 0.0 && p.E < p.E_L, "smoothed_count: invalid parameters");
  auto im_m = [&](double x) { return m_N(sample, cplx(x, p.eta)).imag(); };
  // Breakpoints at eigenvalues inside the window keep the Simpson panels
  // aligned with the peaks of width eta.
  std::vector<double> cuts = {p.E};
  for (Index j = 0; j < sample.dim(); ++j) {
    const double lambda = sample.eigenvalues[j];
    if (lambda > p.E && lambda < p.E_L) cuts.push_back(lambda);
  }
  cuts.push_back(p.E_L);
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) integral += integrate_simpson(im_m, cuts[i], cuts[i + 1], tol, 60);
  return static_cast<double>(sample.dim()) / std::numbers::pi * integral;
}

namespace {

double psi_bump(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

// Smooth step: 0 for u <= 0, 1 for u >= 1.
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = psi_bump(u);
  const double b = psi_bump(1.0 - u);
  return a / (a + b);
}

double smooth_step_derivative(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double a = psi_bump(u);
  const double b = psi_bump(1.0 - u);
  const double da = a / (u * u);
  const double db = b / ((1.0 - u) * (1.0 - u));
  // d/du a/(a+b) with b = psi(1-u), b' = -db.
  return (da * b + a * db) / ((a + b) * (a + b));
}

}  // namespace

double smooth_cutoff(double x) { return smooth_step((2.0 / 9.0 - std::abs(x)) * 9.0); }

double smooth_cutoff_derivative(double x) {
  if (x == 0.0) return 0.0;
  const double sign = x > 0.0 ? 1.0 : -1.0;
  return -9.0 * sign * smooth_step_derivative((2.0 / 9.0 - std::abs(x)) * 9.0);
}

void ObservableX::validate(Index n, double epsilon) const {
  require(eta > 0.0, "observable X: eta must be positive");
  require(kappa1 <= kappa2, "observable X: need kappa1 <= kappa2");
  const double bound = c0 * std::pow(static_cast<double>(n), -2.0 / 3.0 + epsilon);
  require(std::abs(kappa1) <= bound && std::abs(kappa2) <= bound,
          "observable X: offsets exceed C0 N^{-2/3+eps}");
}

double observable_X(const SpectralSample& sample, const ObservableX& obs) {
  require(obs.eta > 0.0, "observable X: eta must be positive");
  require(obs.kappa1 <= obs.kappa2, "observable X: need kappa1 <= kappa2");
  if (obs.kappa1 == obs.kappa2) return 0.0;
  return arctan_count(sample, 2.0 + obs.kappa1, 2.0 + obs.kappa2, obs.eta);
}

cplx tilde_im(const std::function<cplx(cplx)>& p, cplx z) {
  return (p(z) - p(std::conj(z))) / cplx(0.0, 2.0);
}

cplx delta_im(const std::function<cplx(cplx)>& p, cplx z1, cplx z2) { return tilde_im(p, z2) - tilde_im(p, z1); }

SandwichResult sandwich_check(const SpectralSample& sample, const BridgeParams& p, double c) {
  p.validate();
  const double nd = static_cast<double>(p.n);
  const double inf = std::numeric_limits<double>::infinity();
  SandwichResult r;

  const double exact = static_cast<double>(counting(sample, p.E, p.E_L));
  r.smoothing_lhs = std::abs(exact - smoothed_count(sample, p));
  r.smoothing_bracket = static_cast<double>(counting(sample, p.E - p.l1, p.E + p.l1)) +
                        p.eta / p.l1 * std::pow(nd, 2.0 * p.epsilon);
  r.smoothing_c_needed = r.smoothing_lhs / r.smoothing_bracket;
  r.smoothing_ok = r.smoothing_lhs <= c * r.smoothing_bracket;

  BridgeParams up = p;
  up.E = p.E + p.l;
  BridgeParams down = p;
  down.E = p.E - p.l;
  const double tail = std::pow(nd, -p.epsilon);
  r.lower = smoothed_count(sample, up) - tail;
  r.upper = smoothed_count(sample, down) + tail;
  r.count = counting(sample, p.E, inf);
  const double cnt = static_cast<double>(r.count);
  r.sandwich_ok = r.lower <= cnt && cnt <= r.upper;
  r.slack = std::min(cnt - r.lower, r.upper - cnt);
  return r;
}

BridgeSummary run_bridge_check(const EnsembleSpec& spec, double epsilon, double E, std::size_t seeds, Seed seed,
                               double c, unsigned threads) {
  spec.validate();
  require(seeds >= 1, "bridge check: need at least one seed");
  const BridgeParams p = BridgeParams::make(spec.dim, epsilon, E);
  p.validate();
  BridgeSummary out;
  out.records.resize(seeds);
  parallel_for(seeds, threads, [&](std::size_t k) {
    const Seed s = derive_seed(seed, {static_cast<std::uint64_t>(spec.dim), k});
    const SpectralSample sample = eigen_decompose(sample_wigner(spec, s), false, s);
    BridgeRecord& r = out.records[k];
    r.seed = s;
    r.smoothed = smoothed_count(sample, p);
    r.quadrature = smoothed_count_quadrature(sample, p);
    r.identity_rel = std::abs(r.smoothed - r.quadrature) / std::max(std::abs(r.smoothed), 1e-300);
    r.sandwich = sandwich_check(sample, p, c);
  });
  std::vector<double> needed;
  std::size_t sandwich_ok = 0, smoothing_ok = 0;
  for (const auto& r : out.records) {
    out.max_identity_rel = std::max(out.max_identity_rel, r.identity_rel);
    sandwich_ok += r.sandwich.sandwich_ok;
    smoothing_ok += r.sandwich.smoothing_ok;
    needed.push_back(r.sandwich.smoothing_c_needed);
  }
  out.sandwich_fraction = static_cast<double>(sandwich_ok) / static_cast<double>(seeds);
  out.smoothing_fraction = static_cast<double>(smoothing_ok) / static_cast<double>(seeds);
  std::sort(needed.begin(), needed.end());
  const auto idx = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(needed.size()))) - 1;
  out.fitted_c = needed[std::min(idx, needed.size() - 1)];
  return out;
}

}  // namespace rmt
