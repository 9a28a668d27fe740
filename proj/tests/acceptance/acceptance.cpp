// Acceptance runner: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rmt/airy.hpp"
#include "rmt/bridge.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/error.hpp"
#include "rmt/flow_lab.hpp"
#include "rmt/fredholm.hpp"
#include "rmt/harness.hpp"
#include "rmt/hermite.hpp"
#include "rmt/kernels.hpp"
#include "rmt/parallel.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/spectral.hpp"
#include "rmt/stats.hpp"
#include "rmt/weingarten.hpp"

using namespace rmt;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  unsigned threads = 1;
  Seed seed = 20240601;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

std::string join(const std::vector<double>& v, const char* f = "%.4g") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(f, v[i]);
  return s;
}

// Composite Gauss-Legendre nodes on [a, b].
QuadratureNodes panel_rule(double a, double b, int panels, int order) {
  QuadratureNodes out;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const QuadratureNodes q = gauss_legendre(order, a + p * w, a + (p + 1) * w);
    out.nodes.insert(out.nodes.end(), q.nodes.begin(), q.nodes.end());
    out.weights.insert(out.weights.end(), q.weights.begin(), q.weights.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome c01(const Context&) {
  double worst = 0.0;
  double min_im = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const double E = -5.0 + 10.0 * i / 99.0;
    for (int k = 0; k < 100; ++k) {
      const double eta = std::pow(10.0, -8.0 + 9.0 * k / 99.0);  // 1e-8 .. 10
      const cplx z(E, eta);
      const cplx m = m_sc(z);
      worst = std::max(worst, std::abs(1.0 + z * m + m * m));
      min_im = std::min(min_im, m.imag());
    }
  }
  return {worst <= 1e-13 && min_im > 0.0, fmt("max residual %.3g, min Im m %.3g", worst, min_im)};
}

Outcome c02(const Context& ctx) {
  // sum_j |G_ij|^2 = Im G_ii / eta for every row.
  const cplx zs[] = {{0.3, 0.01}, {-1.5, 0.002}, {2.0, 0.05}};
  double worst = 0.0;
  for (Beta b : {Beta::Real, Beta::Complex}) {
    std::vector<double> per(50, 0.0);
    parallel_for(50, ctx.threads, [&](std::size_t s) {
      const SpectralSample sample =
          eigen_decompose(sample_gaussian(b, 200, derive_seed(ctx.seed, {2, static_cast<std::uint64_t>(b), s})), true);
      for (const cplx& z : zs) {
        const Eigen::MatrixXcd g = green_matrix(sample, z);
        for (Index i = 0; i < g.rows(); ++i) {
          const double lhs = g.row(i).cwiseAbs2().sum();
          const double rhs = g(i, i).imag() / z.imag();
          per[s] = std::max(per[s], std::abs(lhs - rhs) / std::abs(rhs));
        }
      }
    });
    worst = std::max(worst, max_of(per));
  }
  return {worst <= 1e-10, fmt("max relative Ward defect %.3g over 2x50 matrices, N=200", worst)};
}

Outcome c03(const Context&) {
  const QuadratureNodes q = panel_rule(-20.0, 20.0, 80, 20);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(31, 31);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::vector<double> phi = hermite_functions(30, q.nodes[i]);
    for (int j = 0; j <= 30; ++j)
      for (int k = 0; k <= 30; ++k) gram(j, k) += q.weights[i] * phi[j] * phi[k];
  }
  const double ortho = (gram - Eigen::MatrixXd::Identity(31, 31)).cwiseAbs().maxCoeff();

  double trace = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const double L = 2.0 * std::sqrt(n) + 14.0;
    const double v = integrate_panels([n](double x) { return hermite_kernel_diag(n, x); }, -L, L, 200, 16);
    trace = std::max(trace, std::abs(v - n));
  }

  double repro = 0.0;
  const CounterStream stream(derive_seed(20240601, {3}));
  for (int n : {5, 20, 50}) {
    const double L = 2.0 * std::sqrt(n) + 14.0;
    for (int s = 0; s < 20; ++s) {
      const auto [u1, u2] = stream.uniforms(static_cast<std::uint64_t>(n * 100 + s), 0);
      const double x = (2.0 * u1 - 1.0) * 2.2 * std::sqrt(n);
      const double y = (2.0 * u2 - 1.0) * 2.2 * std::sqrt(n);
      const double v = integrate_panels([&](double t) { return hermite_kernel(n, x, t) * hermite_kernel(n, t, y); },
                                        -L, L, 200, 16);
      repro = std::max(repro, std::abs(v - hermite_kernel(n, x, y)));
    }
  }
  const bool ok = ortho <= 1e-8 && trace <= 1e-6 && repro <= 1e-6;
  return {ok, fmt("orthonormality %.3g, trace %.3g, reproducing %.3g", ortho, trace, repro)};
}

// Maclaurin series Ai(x) = c1 f(x) - c2 g(x), summed in long double.
double airy_series(double xd) {
  const long double x = xd;
  const long double c1 = 1.0L / (std::pow(3.0L, 2.0L / 3.0L) * std::tgamma(2.0L / 3.0L));
  const long double c2 = 1.0L / (std::pow(3.0L, 1.0L / 3.0L) * std::tgamma(1.0L / 3.0L));
  long double f = 1.0L, g = x, tf = 1.0L, tg = x;
  const long double x3 = x * x * x;
  for (int k = 1; k < 80; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
  }
  return static_cast<double>(c1 * f - c2 * g);
}

Outcome c04(const Context&) {
  const double ai0 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  const double aip0 = -1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
  double at_zero = std::max(std::abs(airy(0.0) - ai0), std::abs(airy_prime(0.0) - aip0));
  for (double x : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) at_zero = std::max(at_zero, std::abs(airy(x) - airy_series(x)));

  // Integrated residual of Ai'' = x Ai on panels of width 1/4.
  double ode = 0.0;
  for (double a = -10.0; a < 5.0; a += 0.25) {
    const double b = a + 0.25;
    const double lhs = airy_prime(b) - airy_prime(a);
    const double rhs = integrate_panels([](double x) { return x * airy(x); }, a, b, 1, 20);
    const double lhs0 = airy(b) - airy(a);
    const double rhs0 = integrate_panels([](double x) { return airy_prime(x); }, a, b, 1, 20);
    ode = std::max({ode, std::abs(lhs - rhs), std::abs(lhs0 - rhs0)});
  }

  const double ratio = airy_kernel_diag(-400.0) / std::sqrt(400.0);
  const bool ok = at_zero <= 1e-9 && ode <= 1e-8 && ratio >= 0.9 && ratio <= 1.1;
  return {ok, fmt("series gap %.3g, ODE residual %.3g, K_airy(-400,-400)/sqrt(400) = %.6f (1/pi = %.6f)", at_zero, ode,
                  ratio, 1.0 / std::numbers::pi)};
}

Outcome c05(const Context&) {
  const std::vector<double> ns = {50, 100, 200, 400};
  std::vector<double> gaps;
  for (double n : ns) gaps.push_back(std::abs(edge_kernel_diag(static_cast<int>(n), 0.0) - airy_kernel_diag(0.0)));
  const LineFit f = loglog_fit(ns, gaps);
  return {std::abs(f.slope + 2.0 / 3.0) <= 0.15, fmt("gaps %s, slope %.4f", join(gaps).c_str(), f.slope)};
}

Outcome c06(const Context& ctx) {
  const std::vector<double> grid = make_grid(-3.5, 5.0, 0.02);
  const DistributionCurve tw = tw_curve(Beta::Complex, grid, {}, ctx.threads);
  const std::vector<double> ns = {20, 50, 100, 200};
  std::vector<double> d;
  for (double n : ns) {
    const DistributionCurve fin = finite_n_gue_curve(static_cast<int>(n), grid, {}, ctx.threads);
    d.push_back(ks_distance(fin, tw, -3.5 - 1e-9));
  }
  const LineFit f = loglog_fit(ns, d);
  const bool ok = strictly_decreasing(d) && std::abs(f.slope + 2.0 / 3.0) <= 0.2;
  return {ok, fmt("D(N) %s, slope %.4f", join(d).c_str(), f.slope)};
}

Outcome c07(const Context& ctx) {
  const int n = 50;
  const std::size_t reps = 10000;
  std::vector<double> r(reps);
  parallel_for(reps, ctx.threads, [&](std::size_t k) {
    const Seed s = derive_seed(ctx.seed, {7, static_cast<std::uint64_t>(n), k});
    r[k] = edge_rescale(eigenvalues(sample_gaussian(Beta::Complex, n, s)).maxCoeff(), n, Beta::Complex);
  });
  const DistributionCurve fin = finite_n_gue_curve(n, make_grid(-8.0, 6.0, 0.01), {}, ctx.threads);
  const double ks = ks_distance_samples(r, fin, -1e300);
  const double radius = dkw_radius(reps);
  return {ks <= radius, fmt("KS %.5f vs DKW(1e4, 0.01) %.5f", ks, radius)};
}

Outcome c08(const Context& ctx) {
  const double eps = 0.05;
  const std::vector<double> ns = {100, 200, 400, 800};
  // S_edge grid in its own units: E = 2 + a N^{-2/3+eps}, eta = b N^{-2/3+eps}.
  const double as[] = {-2.0, 0.0, 2.0};
  const double bs[] = {0.5, 1.0};
  const auto point = [&](double n, double a, double b) {
    const double unit = std::pow(n, -2.0 / 3.0 + eps);
    return cplx(2.0 + a * unit, b * unit);
  };
  bool ok = true;
  std::string detail;
  std::vector<cplx> z200;
  std::vector<double> exact200;
  for (double a : as)
    for (double b : bs) {
      std::vector<double> v;
      for (double n : ns) {
        const cplx z = point(n, a, b);
        require(SpectralDomain{DomainKind::SEdge, eps, 4.0}.contains(z, static_cast<Index>(n)), "c08: z outside S_edge");
        v.push_back(gue_edge_trace(static_cast<Index>(n), z));
        if (n == 200) {
          z200.push_back(z);
          exact200.push_back(v.back());
        }
      }
      const double slope = loglog_fit(ns, v).slope;
      ok = ok && std::abs(slope + 1.0 / 3.0) <= 0.1;
      detail += fmt("[a=%g b=%g slope %.3f] ", a, b, slope);
    }

  const Index n = 200;
  const std::size_t reps = 2000;
  std::vector<std::vector<double>> vals(z200.size(), std::vector<double>(reps));
  parallel_for(reps, ctx.threads, [&](std::size_t r) {
    SpectralSample s;
    s.eigenvalues = eigenvalues(sample_gaussian(Beta::Complex, n, derive_seed(ctx.seed, {8, 200, r})));
    for (std::size_t i = 0; i < z200.size(); ++i) vals[i][r] = m_N(s, z200[i]).imag();
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < z200.size(); ++i) {
    const MeanSe m = mean_se(vals[i]);
    worst = std::max(worst, std::abs(m.mean - exact200[i]) / m.se);
  }
  ok = ok && worst <= 3.0;
  detail += fmt("MC at N=200: max |exact - mean| / SE = %.2f", worst);
  return {ok, detail};
}

Outcome c09(const Context& ctx) {
  ExperimentConfig c;
  c.ensembles = {{"rademacher", {Beta::Complex, 2, EntryLaw::rademacher()}}};
  c.n_list = {200, 400, 800};
  c.replicas = 4000;
  c.seed = derive_seed(ctx.seed, {9});
  c.threads = ctx.threads;
  const RateScanResult res = rate_scan(c);
  std::vector<double> d, radius;
  for (const auto& row : res.rows) {
    d.push_back(row.ks);
    radius.push_back(row.dkw_radius);
  }
  bool resolved = true;
  for (std::size_t i = 1; i < d.size(); ++i) resolved = resolved && d[i - 1] - d[i] > radius[i - 1] + radius[i];
  const bool ok = resolved && d.back() <= 0.08;
  return {ok, fmt("KS %s, DKW radii %s, decrease resolved: %s", join(d).c_str(), join(radius).c_str(),
                  resolved ? "yes" : "no")};
}

Outcome c10(const Context& ctx) {
  const Index n = 400;
  const EnsembleSpec spec{Beta::Complex, n, EntryLaw::rademacher()};
  FlowScan scan;
  scan.t_grid = FlowScan::default_t_grid(n);
  const double scale = std::pow(static_cast<double>(n), -2.0 / 3.0);
  for (double k : {-1.0, 0.0, 1.0}) scan.z_list.push_back({2.0 + k * scale, scale});
  scan.replicas = 100;
  scan.seed = derive_seed(ctx.seed, {10});
  const FlowTable t = flow_scan(spec, scan, FlowObservable::ImMN, ctx.threads);
  const double allowance = std::pow(static_cast<double>(n), -1.0 / 3.0 + 0.3);
  // excess = max_t (|diff| - 3 SE)
  const double worst = max_of(t.excess);
  return {worst <= allowance, fmt("max_t(|drift| - 3 SE) per z: %s; allowance N^(-1/3+0.3) = %.4f",
                                  join(t.excess).c_str(), allowance)};
}

Outcome c11(const Context& ctx) {
  const EnsembleSpec spec{Beta::Complex, 2, EntryLaw::gaussian()};
  UnmatchedOptions opts;
  opts.seed = derive_seed(ctx.seed, {11});
  const UnmatchedResult r = unmatched_probe(spec, {100, 200, 400}, opts, ctx.threads);
  const double gap = r.psi3_exponent - r.exponent;
  const bool ok = r.exponent <= -0.7 && gap > 2.0 * r.exponent_se;
  return {ok, fmt("exponent %.3f +- %.3f, naive Psi^3 exponent %.3f, gap %.3f", r.exponent, r.exponent_se,
                  r.psi3_exponent, gap)};
}

Outcome c12(const Context& ctx) {
  double ortho = 0.0;
  for (int order = 1; order <= 5; ++order)
    for (int n : {8, 16, 32}) ortho = std::max(ortho, WeingartenTable(order, n).orthogonality_defect());

  double closed = 0.0;
  for (int n : {2, 3, 8, 32}) {
    const double nd = n;
    closed = std::max(closed, std::abs(weingarten({2, n, {0, 1}}) - 1.0 / (nd * nd - 1.0)));
    closed = std::max(closed, std::abs(weingarten({2, n, {1, 0}}) + 1.0 / (nd * (nd * nd - 1.0))));
  }

  // Relative deviation from the Catalan product should fall like N^-2.
  bool trend_ok = true;
  std::string trend;
  for (const char* g : {"(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4)", "(1 2 3 4 5)"}) {
    const int order = std::string(g).size() > 10 ? 5 : 4;
    const Permutation p = parse_cycles(g, order);
    std::vector<double> ns = {16, 32, 64, 128}, dev;
    for (double n : ns) {
      const WeingartenTable t(order, static_cast<int>(n));
      dev.push_back(std::abs(t(p) / weingarten_asymptotic(p, static_cast<int>(n)) - 1.0));
    }
    const double slope = loglog_fit(ns, dev).slope;
    trend_ok = trend_ok && std::abs(slope + 2.0) <= 0.2;
    trend += fmt("%s:%.2f ", g, slope);
  }

  struct Case {
    HaarPattern p;
    std::complex<double> exact;
  };
  const int dim = 4;
  const double nd = dim;
  const std::vector<Case> cases = {
      {{{0}, {0}, {0}, {0}}, 1.0 / nd},
      {{{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 1.0 / (nd * nd - 1.0)},
      {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}, 2.0 / (nd * (nd + 1.0))},
      {{{0, 0}, {0, 1}, {0, 0}, {0, 2}}, 0.0},
  };
  double worst_z = 0.0, exact_gap = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    exact_gap = std::max(exact_gap, std::abs(haar_moment_exact(cases[i].p, dim) - cases[i].exact));
    const HaarEstimate e = haar_moment_mc(cases[i].p, dim, 40000, derive_seed(ctx.seed, {12, i}), ctx.threads);
    worst_z = std::max(worst_z, std::abs(e.mean.real() - cases[i].exact.real()) / e.se_re);
    if (e.se_im > 0.0) worst_z = std::max(worst_z, std::abs(e.mean.imag()) / e.se_im);
  }
  const bool ok = ortho <= 1e-10 && closed <= 1e-14 && trend_ok && exact_gap <= 1e-14 && worst_z <= 4.0;
  return {ok, fmt("orthogonality %.3g, n=2 closed forms %.3g, O(N^-2) slopes %s, Wg sums %.3g, Haar MC max %.2f SE",
                  ortho, closed, trend.c_str(), exact_gap, worst_z)};
}

Outcome c13(const Context& ctx) {
  const EnsembleSpec spec{Beta::Complex, 500, EntryLaw::gaussian()};
  const BridgeSummary s = run_bridge_check(spec, 0.05, 2.0, 500, derive_seed(ctx.seed, {13}), 10.0, ctx.threads);
  const bool ok = s.max_identity_rel <= 1e-6 && s.sandwich_fraction >= 0.99 && s.fitted_c <= 10.0;
  return {ok, fmt("max identity rel %.3g, sandwich %.4f, smoothing %.4f, fitted C %.4f", s.max_identity_rel,
                  s.sandwich_fraction, s.smoothing_fraction, s.fitted_c)};
}

Outcome c14(const Context&) {
  double closed = 0.0;
  double lo = 1e300, hi = 0.0;
  for (int m = 1; m <= 500; ++m) {
    const long double ml = m;
    const long double log_ratio = std::lgamma(2.0L * ml + 1.0L) - 2.0L * ml * std::log(2.0L) - 2.0L * std::lgamma(ml + 1.0L);
    const double oracle =
        static_cast<double>(std::pow(2.0L, -0.25L) * std::pow(std::numbers::pi_v<long double>, 0.25L) *
                            std::exp(0.5L * log_ratio));
    const double v = hermite_half_integral(2 * m);
    closed = std::max(closed, std::abs(v - oracle) / oracle);
    lo = std::min(lo, v * std::pow(m, 0.25));
    hi = std::max(hi, v * std::pow(m, 0.25));
  }
  // Direct quadrature for small m guards the closed form itself.
  for (int m = 1; m <= 15; ++m) {
    const double L = 2.0 * std::sqrt(2.0 * m + 1.0) + 14.0;
    const double num = integrate_panels([m](double x) { return hermite_phi(2 * m, x); }, 0.0, L, 100, 16);
    closed = std::max(closed, std::abs(hermite_half_integral(2 * m) - num) / num);
  }

  std::string gaps;
  bool decreasing = true;
  for (const std::vector<int>& ns : {std::vector<int>{50, 100, 200}, std::vector<int>{51, 101, 201}}) {
    std::vector<double> sup;
    for (int n : ns) {
      double g = 0.0;
      for (double x = -4.0; x <= 4.0 + 1e-9; x += 0.02) g = std::max(g, std::abs(goe_edge_kernel(n, x) - goe_edge_limit(x)));
      sup.push_back(g);
    }
    decreasing = decreasing && strictly_decreasing(sup);
    gaps += fmt("N=%d,%d,%d: %s; ", ns[0], ns[1], ns[2], join(sup).c_str());
  }
  const bool ok = closed <= 1e-10 && lo >= 0.5 && hi <= 2.0 && decreasing;
  return {ok, fmt("I_2m rel gap %.3g, I_2m m^(1/4) in [%.4f, %.4f], sup gaps %s", closed, lo, hi, gaps.c_str())};
}

Outcome c15(const Context& ctx) {
  auto csv = [](ExperimentConfig c, unsigned threads) {
    c.threads = threads;
    std::ostringstream os;
    write_rate_scan_csv(os, rate_scan(c));
    return os.str();
  };
  ExperimentConfig a;
  a.ensembles = {{"goe", {Beta::Real, 2, EntryLaw::gaussian()}},
                 {"gue_uniform", {Beta::Complex, 2, EntryLaw::uniform()}},
                 {"goe_bernoulli", {Beta::Real, 2, EntryLaw::shifted_bernoulli(0.3)}}};
  a.n_list = {20, 40, 80};
  a.replicas = 300;
  a.seed = derive_seed(ctx.seed, {15, 1});
  ExperimentConfig b;
  b.ensembles = {{"gue", {Beta::Complex, 2, EntryLaw::gaussian()}}};
  b.n_list = {20, 40, 80};
  b.replicas = 300;
  b.channels = {"mc", "fredholm"};
  b.step = 0.05;
  b.seed = derive_seed(ctx.seed, {15, 2});
  ExperimentConfig g = a;
  g.ensembles = {{"goe", {Beta::Real, 2, EntryLaw::gaussian()}}};
  g.mode = EdgeMode::GoeRefined;
  g.seed = derive_seed(ctx.seed, {15, 3});
  int same = 0;
  for (const auto* c : {&a, &b, &g}) same += csv(*c, 1) == csv(*c, 8);
  return {same == 3, fmt("%d of 3 configs byte-identical at 1 and 8 threads", same)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int criterion = 0;
  Context ctx;
  ctx.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--criterion", criterion, "criterion number (0 = all)")->check(CLI::Range(0, 15));
  app.add_option("--threads", ctx.threads, "worker threads");
  app.add_option("--seed", ctx.seed, "base seed");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome(const Context&)>> all = {c01, c02, c03, c04, c05, c06, c07, c08,
                                                                   c09, c10, c11, c12, c13, c14, c15};
  int failures = 0;
  for (int i = 1; i <= 15; ++i) {
    if (criterion != 0 && criterion != i) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i - 1](ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s c%02d %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
