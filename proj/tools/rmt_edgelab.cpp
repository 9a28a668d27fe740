// rmt-edgelab: command line front end for the rmt core library.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmt/bridge.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/error.hpp"
#include "rmt/flow_lab.hpp"
#include "rmt/fredholm.hpp"
#include "rmt/harness.hpp"
#include "rmt/kernels.hpp"
#include "rmt/matrix_io.hpp"
#include "rmt/spectral.hpp"
#include "rmt/weingarten.hpp"

namespace {

using nlohmann::json;
using namespace rmt;

constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;

/// Options that can also come from the --config JSON file. A key is the
/// long flag name with '-' replaced by '_'; the command line wins.
class ConfigBinder {
 public:
  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& flag, T& var, const std::string& desc) {
    CLI::Option* opt = app->add_option(flag, var, desc)->capture_default_str();
    record(opt, key_of(flag), var);
    return opt;
  }

  CLI::Option* flag(CLI::App* app, const std::string& flag, bool& var, const std::string& desc) {
    CLI::Option* opt = app->add_flag(flag, var, desc);
    record(opt, key_of(flag), var);
    return opt;
  }

  void apply(const json& j) const {
    for (const auto& f : fills_) f(j);
  }

 private:
  std::vector<std::function<void(const json&)>> fills_;

  static std::string key_of(const std::string& flag) {
    std::string key = flag.substr(flag.rfind('-', 1) == 1 ? 2 : 1);
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
  }

  template <class T>
  void record(CLI::Option* opt, const std::string& key, T& var) {
    fills_.push_back([opt, key, &var](const json& j) {
      if (opt->count() > 0 || !j.contains(key)) return;
      try {
        var = j.at(key).get<T>();
      } catch (const json::exception& e) {
        throw ValidationError("config key '" + key + "': " + e.what());
      }
    });
  }
};

struct Globals {
  std::string config;
  Seed seed = 1;
  unsigned threads = 1;
  std::string out_dir = ".";
  json config_json = json::object();
};

std::string out_path(const Globals& g, const std::string& name) {
  std::filesystem::create_directories(g.out_dir);
  return (std::filesystem::path(g.out_dir) / name).string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  return os;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

EntryLaw law_from(const std::string& name, const std::vector<double>& params) {
  return entry_law_from_json(json{{"name", name}, {"params", params}});
}

EnsembleSpec spec_from(int beta, Index n, const std::string& law, const std::vector<double>& params) {
  EnsembleSpec s;
  s.beta = beta_from_int(beta);
  s.dim = n;
  s.law = law_from(law, params);
  s.validate();
  return s;
}

// ---- sample ----------------------------------------------------------------

struct SampleArgs {
  int beta = 2;
  Index n = 100;
  std::string law = "gaussian";
  std::vector<double> law_params;
  std::size_t count = 1;
  std::string kind = "matrix";
  std::string format = "bin";
  bool vectors = false;
};

void run_sample(const Globals& g, const SampleArgs& a) {
  require(a.kind == "matrix" || a.kind == "spectrum", "sample: --kind must be matrix or spectrum");
  require(a.format == "bin" || a.format == "csv", "sample: --format must be bin or csv");
  require(a.count >= 1, "sample: --count must be positive");
  const EnsembleSpec spec = spec_from(a.beta, a.n, a.law, a.law_params);
  for (std::size_t k = 0; k < a.count; ++k) {
    const Seed s = derive_seed(g.seed, {static_cast<std::uint64_t>(a.n), k});
    const HermitianMatrix h = sample_wigner(spec, s);
    const std::string stem = "sample_" + std::to_string(k) + (a.kind == "matrix" ? "_matrix" : "_spectrum");
    const std::string path = out_path(g, stem + (a.format == "bin" ? ".rmt" : ".csv"));
    if (a.kind == "matrix") {
      if (a.format == "bin") {
        save_matrix(path, h, s);
      } else {
        auto os = open_out(path);
        write_matrix_csv(os, h);
      }
    } else {
      SpectralSample sample = eigen_decompose(h, a.vectors, s);
      if (a.format == "bin") {
        save_spectrum(path, sample);
      } else {
        auto os = open_out(path);
        write_spectrum_csv(os, sample);
      }
    }
    std::cout << path << "\n";
  }
}

// ---- tw / finite-n ---------------------------------------------------------

struct GridArgs {
  double rmin = -6.0;
  double rmax = 4.0;
  double step = 0.02;
  int quad_order = 64;
};

void add_grid_flags(ConfigBinder& b, CLI::App* app, GridArgs& a) {
  b.add(app, "--rmin", a.rmin, "left end of the r grid");
  b.add(app, "--rmax", a.rmax, "right end of the r grid");
  b.add(app, "--step", a.step, "grid spacing");
  b.add(app, "--quad-order", a.quad_order, "Gauss-Legendre order of the half-line rule");
}

void run_tw(const Globals& g, int beta, const GridArgs& a) {
  require(a.quad_order >= 8, "tw: --quad-order must be at least 8");
  const auto grid = make_grid(a.rmin, a.rmax, a.step);
  const DistributionCurve c = tw_curve(beta_from_int(beta), grid, {a.quad_order, 10.0}, g.threads);
  const std::string path = out_path(g, "tw" + std::to_string(beta) + ".csv");
  auto os = open_out(path);
  os << "r,cdf\n";
  for (std::size_t i = 0; i < grid.size(); ++i) os << fmt(grid[i]) << ',' << fmt(c.cdf[i]) << '\n';
  std::cout << path << "\n";
}

void run_finite_n(const Globals& g, int n, const GridArgs& a) {
  require(a.quad_order >= 8, "finite-n: --quad-order must be at least 8");
  const auto grid = make_grid(a.rmin, a.rmax, a.step);
  const QuadratureRule rule{a.quad_order, 10.0};
  const DistributionCurve fin = finite_n_gue_curve(n, grid, rule, g.threads);
  const DistributionCurve tw = tw_curve(Beta::Complex, grid, rule, g.threads);
  const std::string path = out_path(g, "finite_n_" + std::to_string(n) + ".csv");
  auto os = open_out(path);
  os << "N,r,cdf,tw2,gap\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    os << n << ',' << fmt(grid[i]) << ',' << fmt(fin.cdf[i]) << ',' << fmt(tw.cdf[i]) << ','
       << fmt(std::abs(fin.cdf[i] - tw.cdf[i])) << '\n';
  std::cout << path << "\n";
}

// ---- rate-scan -------------------------------------------------------------

void run_rate_scan(const Globals& g, const CLI::App& root) {
  require(!g.config.empty(), "rate-scan: --config is required");
  ExperimentConfig c = experiment_config_from_json(g.config_json);
  if (root.get_option("--seed")->count() > 0) c.seed = g.seed;
  if (root.get_option("--threads")->count() > 0) c.threads = g.threads;
  if (root.get_option("--out-dir")->count() > 0) c.out_dir = g.out_dir;
  c.validate();
  const RateScanResult r = rate_scan(c);
  Globals local = g;
  local.out_dir = c.out_dir;
  const std::string path = out_path(local, "rate_scan.csv");
  {
    auto os = open_out(path);
    write_rate_scan_csv(os, r);
  }
  json fits = json::array();
  for (const auto& f : r.fits) {
    json jf{{"ensemble", f.ensemble}, {"channel", f.channel}, {"N", f.fit.n_values}, {"distances", f.fit.distances},
            {"dkw_radii", f.fit.radii}, {"refused", f.fit.refused}};
    if (!f.fit.refused) {
      jf["exponent"] = f.fit.exponent;
      jf["half_width"] = f.fit.half_width;
      jf["residual"] = f.fit.residual;
    }
    fits.push_back(jf);
    if (f.fit.refused)
      std::printf("%s/%s: fit refused, distances within DKW radii\n", f.ensemble.c_str(), f.channel.c_str());
    else
      std::printf("%s/%s: exponent %.4f +- %.4f\n", f.ensemble.c_str(), f.channel.c_str(), f.fit.exponent,
                  f.fit.half_width);
  }
  json clamps = json::array();
  for (const auto& row : r.rows)
    clamps.push_back({{"ensemble", row.ensemble}, {"N", row.n}, {"channel", row.channel},
                      {"clamped_low", row.clamped_low}, {"clamped_high", row.clamped_high}});
  auto js = open_out(out_path(local, "rate_fit.json"));
  js << json{{"fits", fits}, {"clamps", clamps}}.dump(2) << '\n';
  std::cout << path << "\n";
}

// ---- kernel-check ----------------------------------------------------------

struct KernelArgs {
  std::vector<int> n{50, 100, 200, 400};
  double xmin = -4.0;
  double xmax = 4.0;
  double step = 0.5;
  bool offdiag = false;
  std::string kind = "edge";
};

void run_kernel_check(const Globals& g, const KernelArgs& a) {
  require(a.kind == "edge" || a.kind == "goe_edge", "kernel-check: --kind must be edge or goe_edge");
  require(!(a.kind == "goe_edge" && a.offdiag), "kernel-check: the GOE kernel is diagonal only");
  const auto grid = make_grid(a.xmin, a.xmax, a.step);
  const std::string path = out_path(g, "kernel_check.csv");
  auto os = open_out(path);
  os << "N,x,y,value,airy_value,gap\n";
  for (int n : a.n) {
    require(n >= 2, "kernel-check: N must be at least 2");
    for (double x : grid)
      for (double y : grid) {
        if (!a.offdiag && y != x) continue;
        double v = 0.0, w = 0.0;
        if (a.kind == "edge") {
          v = x == y ? edge_kernel_diag(n, x) : edge_kernel(n, x, y);
          w = x == y ? airy_kernel_diag(x) : airy_kernel(x, y);
        } else {
          v = goe_edge_kernel(n, x);
          w = goe_edge_limit(x);
        }
        os << n << ',' << fmt(x) << ',' << fmt(y) << ',' << fmt(v) << ',' << fmt(w) << ',' << fmt(std::abs(v - w))
           << '\n';
      }
  }
  std::cout << path << "\n";
}

// ---- bridge-check ----------------------------------------------------------

struct BridgeArgs {
  Index n = 500;
  double epsilon = 0.05;
  std::size_t seeds = 500;
  std::string ensemble = "gaussian";
  std::vector<double> law_params;
  int beta = 2;
  double E = 2.0;
  double c = 10.0;
};

json to_json(const SandwichResult& s) {
  return {{"smoothing_lhs", s.smoothing_lhs},
          {"smoothing_bracket", s.smoothing_bracket},
          {"smoothing_c_needed", s.smoothing_c_needed},
          {"smoothing_ok", s.smoothing_ok},
          {"lower", s.lower},
          {"count", s.count},
          {"upper", s.upper},
          {"sandwich_ok", s.sandwich_ok},
          {"slack", s.slack}};
}

void run_bridge_check(const Globals& g, const BridgeArgs& a) {
  const EnsembleSpec spec = spec_from(a.beta, a.n, a.ensemble, a.law_params);
  const BridgeSummary s = rmt::run_bridge_check(spec, a.epsilon, a.E, a.seeds, g.seed, a.c, g.threads);
  const BridgeParams p = BridgeParams::make(a.n, a.epsilon, a.E);
  json records = json::array();
  for (const auto& r : s.records)
    records.push_back({{"seed", r.seed},
                       {"smoothed_count", r.smoothed},
                       {"smoothed_count_quadrature", r.quadrature},
                       {"identity_rel", r.identity_rel},
                       {"sandwich", to_json(r.sandwich)}});
  const json summary{{"N", a.n},
                     {"epsilon", a.epsilon},
                     {"E", a.E},
                     {"E_L", p.E_L},
                     {"eta", p.eta},
                     {"l1", p.l1},
                     {"l", p.l},
                     {"seeds", a.seeds},
                     {"C", a.c},
                     {"max_identity_rel", s.max_identity_rel},
                     {"sandwich_fraction", s.sandwich_fraction},
                     {"smoothing_fraction", s.smoothing_fraction},
                     {"fitted_C", s.fitted_c}};
  const std::string path = out_path(g, "bridge_check.json");
  auto os = open_out(path);
  os << json{{"records", records}, {"summary", summary}}.dump(2) << '\n';
  std::printf("sandwich %.4f smoothing %.4f fitted C %.4g identity %.3g\n", s.sandwich_fraction,
              s.smoothing_fraction, s.fitted_c, s.max_identity_rel);
  std::cout << path << "\n";
}

// ---- flow-scan -------------------------------------------------------------

struct FlowArgs {
  Index n = 400;
  std::string ensemble = "rademacher";
  std::vector<double> law_params;
  int beta = 2;
  std::size_t replicas = 100;
  std::string observable = "im_mN";
  int t_points = 7;
  std::vector<double> kappa{0.0};  ///< N^{2/3}(E - 2)
  std::vector<double> eta{1.0};    ///< N^{2/3} eta
  double epsilon = 0.05;
  double c0 = 4.0;
};

void run_flow_scan(const Globals& g, const FlowArgs& a) {
  require(!a.kappa.empty() && a.kappa.size() == a.eta.size(), "flow-scan: --kappa and --eta need equal lengths");
  const EnsembleSpec spec = spec_from(a.beta, a.n, a.ensemble, a.law_params);
  FlowScan scan;
  scan.t_grid = FlowScan::default_t_grid(a.n, a.t_points);
  const double s = std::pow(static_cast<double>(a.n), -2.0 / 3.0);
  for (std::size_t k = 0; k < a.kappa.size(); ++k) scan.z_list.emplace_back(2.0 + a.kappa[k] * s, a.eta[k] * s);
  scan.replicas = a.replicas;
  scan.seed = g.seed;
  scan.epsilon = a.epsilon;
  scan.c0 = a.c0;
  const FlowTable t = flow_scan(spec, scan, flow_observable_from_string(a.observable), g.threads);
  const std::string path = out_path(g, "flow_scan.csv");
  {
    auto os = open_out(path);
    os << "t,z_re,z_im,mean,se\n";
    for (const auto& r : t.rows)
      os << fmt(r.t) << ',' << fmt(r.z.real()) << ',' << fmt(r.z.imag()) << ',' << fmt(r.mean) << ',' << fmt(r.se)
         << '\n';
  }
  auto od = open_out(out_path(g, "flow_scan_diff.csv"));
  od << "t,z_re,z_im,diff,se_coupled,se_uncoupled\n";
  for (const auto& r : t.rows)
    od << fmt(r.t) << ',' << fmt(r.z.real()) << ',' << fmt(r.z.imag()) << ',' << fmt(r.diff) << ','
       << fmt(r.diff_se_coupled) << ',' << fmt(r.diff_se_uncoupled) << '\n';
  for (std::size_t k = 0; k < scan.z_list.size(); ++k)
    std::printf("z = %.6g%+.6gi: flatness %.4g, excess over 3 SE %.4g\n", scan.z_list[k].real(),
                scan.z_list[k].imag(), t.flatness[k], t.excess[k]);
  std::cout << path << "\n";
}

// ---- unmatched -------------------------------------------------------------

struct UnmatchedArgs {
  std::vector<Index> n{100, 200, 400};
  std::string ensemble = "gaussian";
  std::vector<double> law_params;
  int beta = 2;
  std::size_t replicas = 500;
  double E = 0.0;
  double eta_exponent = 0.6;
};

void run_unmatched(const Globals& g, const UnmatchedArgs& a) {
  require(!a.n.empty(), "unmatched: --n needs at least one value");
  const EnsembleSpec spec = spec_from(a.beta, a.n.front(), a.ensemble, a.law_params);
  UnmatchedOptions o;
  o.E = a.E;
  o.eta_exponent = a.eta_exponent;
  o.replicas = a.replicas;
  o.seed = g.seed;
  const UnmatchedResult r = unmatched_probe(spec, a.n, o, g.threads);
  const std::string path = out_path(g, "unmatched.csv");
  auto os = open_out(path);
  os << "N,estimate,se,naive_psi3\n";
  for (const auto& row : r.rows)
    os << row.n << ',' << fmt(std::abs(row.estimate)) << ',' << fmt(row.se) << ',' << fmt(row.naive_psi3) << '\n';
  std::printf("exponent %.4f +- %.4f, naive psi^3 exponent %.4f\n", r.exponent, r.exponent_se, r.psi3_exponent);
  std::cout << path << "\n";
}

// ---- weingarten ------------------------------------------------------------

struct WeingartenArgs {
  int order = 3;
  std::vector<int> dim{8, 16, 32};
  std::string gamma;
};

void run_weingarten(const Globals& g, const WeingartenArgs& a) {
  require(!a.dim.empty(), "weingarten: --dim needs at least one value");
  std::vector<Permutation> gammas;
  if (!a.gamma.empty()) {
    gammas.push_back(parse_cycles(a.gamma, a.order));
  } else {
    // One representative per cycle type.
    std::map<std::vector<int>, Permutation> classes;
    for (const auto& p : all_permutations(a.order)) {
      auto type = cycle_lengths(p);
      std::sort(type.begin(), type.end());
      classes.emplace(type, p);
    }
    for (const auto& [type, p] : classes) gammas.push_back(p);
  }
  const std::string path = out_path(g, "weingarten.csv");
  auto os = open_out(path);
  os << "n,N,gamma_cycles,wg,wg_asymptotic\n";
  for (int n : a.dim) {
    const WeingartenTable table(a.order, n);
    for (const auto& p : gammas)
      os << a.order << ',' << n << ',' << format_cycles(p) << ',' << fmt(table(p)) << ','
         << fmt(weingarten_asymptotic(p, n)) << '\n';
  }
  std::cout << path << "\n";
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config '" + path + "'");
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw ValidationError("config '" + path + "' must hold a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ValidationError("config '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random matrix edge statistics laboratory"};
  app.require_subcommand(1);
  Globals g;
  ConfigBinder globals;
  app.add_option("--config", g.config, "JSON file with option values")->check(CLI::ExistingFile);
  globals.add(&app, "--seed", g.seed, "base seed");
  globals.add(&app, "--threads", g.threads, "worker threads");
  globals.add(&app, "--out-dir", g.out_dir, "output directory");

  std::map<const CLI::App*, ConfigBinder> binders;
  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "draw matrices or spectra");
  binders[sample].add(sample, "--beta", sa.beta, "1 (real) or 2 (complex)");
  binders[sample].add(sample, "--n", sa.n, "dimension");
  binders[sample].add(sample, "--law", sa.law, "entry law");
  binders[sample].add(sample, "--law-params", sa.law_params, "law parameters");
  binders[sample].add(sample, "--count", sa.count, "number of samples");
  binders[sample].add(sample, "--kind", sa.kind, "matrix or spectrum");
  binders[sample].add(sample, "--format", sa.format, "bin or csv");
  binders[sample].flag(sample, "--vectors", sa.vectors, "store eigenvectors with spectra");

  int tw_beta = 2;
  GridArgs tw_grid;
  auto* tw = app.add_subcommand("tw", "Tracy-Widom CDF on a grid");
  binders[tw].add(tw, "--beta", tw_beta, "1 or 2");
  add_grid_flags(binders[tw], tw, tw_grid);

  int fn_n = 50;
  GridArgs fn_grid;
  auto* finite = app.add_subcommand("finite-n", "finite-N GUE largest eigenvalue CDF");
  binders[finite].add(finite, "--n", fn_n, "dimension (at most 400)");
  add_grid_flags(binders[finite], finite, fn_grid);

  auto* rate = app.add_subcommand("rate-scan", "KS distance to Tracy-Widom over N");

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel-check", "edge kernel against its Airy limit");
  binders[kernel].add(kernel, "--n", ka.n, "dimensions");
  binders[kernel].add(kernel, "--xmin", ka.xmin, "grid start");
  binders[kernel].add(kernel, "--xmax", ka.xmax, "grid end");
  binders[kernel].add(kernel, "--step", ka.step, "grid spacing");
  binders[kernel].flag(kernel, "--offdiag", ka.offdiag, "all (x, y) pairs instead of the diagonal");
  binders[kernel].add(kernel, "--kind", ka.kind, "edge or goe_edge");

  BridgeArgs ba;
  auto* bridge = app.add_subcommand("bridge-check", "smoothed counting identities near the edge");
  binders[bridge].add(bridge, "--n", ba.n, "dimension");
  binders[bridge].add(bridge, "--epsilon", ba.epsilon, "scale exponent");
  binders[bridge].add(bridge, "--seeds", ba.seeds, "number of matrices");
  binders[bridge].add(bridge, "--ensemble", ba.ensemble, "entry law");
  binders[bridge].add(bridge, "--law-params", ba.law_params, "law parameters");
  binders[bridge].add(bridge, "--beta", ba.beta, "1 or 2");
  binders[bridge].add(bridge, "--E", ba.E, "energy");
  binders[bridge].add(bridge, "--c", ba.c, "constant of the smoothing bound");

  FlowArgs fa;
  auto* flow = app.add_subcommand("flow-scan", "observables along the Ornstein-Uhlenbeck flow");
  binders[flow].add(flow, "--n", fa.n, "dimension");
  binders[flow].add(flow, "--ensemble", fa.ensemble, "entry law");
  binders[flow].add(flow, "--law-params", fa.law_params, "law parameters");
  binders[flow].add(flow, "--beta", fa.beta, "1 or 2");
  binders[flow].add(flow, "--replicas", fa.replicas, "replicas per time");
  binders[flow].add(flow, "--observable", fa.observable, "im_mN, F_of_X or type0_trace");
  binders[flow].add(flow, "--t-points", fa.t_points, "times on [0, 8 log N]");
  binders[flow].add(flow, "--kappa", fa.kappa, "N^{2/3}(E - 2) per z");
  binders[flow].add(flow, "--eta", fa.eta, "N^{2/3} Im z per z");
  binders[flow].add(flow, "--epsilon", fa.epsilon, "domain exponent");
  binders[flow].add(flow, "--c0", fa.c0, "edge window constant");

  UnmatchedArgs ua;
  auto* unmatched = app.add_subcommand("unmatched", "decay of an unmatched Green function product");
  binders[unmatched].add(unmatched, "--n", ua.n, "dimensions");
  binders[unmatched].add(unmatched, "--ensemble", ua.ensemble, "entry law");
  binders[unmatched].add(unmatched, "--law-params", ua.law_params, "law parameters");
  binders[unmatched].add(unmatched, "--beta", ua.beta, "1 or 2");
  binders[unmatched].add(unmatched, "--replicas", ua.replicas, "replicas per N");
  binders[unmatched].add(unmatched, "--E", ua.E, "Re z");
  binders[unmatched].add(unmatched, "--eta-exponent", ua.eta_exponent, "Im z = N^{-a}");

  WeingartenArgs wa;
  auto* wg = app.add_subcommand("weingarten", "unitary Weingarten function");
  binders[wg].add(wg, "--order", wa.order, "permutation order n (at most 5)");
  binders[wg].add(wg, "--dim", wa.dim, "unitary dimensions N");
  binders[wg].add(wg, "--gamma", wa.gamma, "permutation in cycle notation, e.g. (1 2)(3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (!g.config.empty()) {
      g.config_json = load_config(g.config);
      globals.apply(g.config_json);
      for (const auto* sub : app.get_subcommands())
        if (auto it = binders.find(sub); it != binders.end()) it->second.apply(g.config_json);
    }
    require(g.threads >= 1, "--threads must be positive");
    if (*sample) run_sample(g, sa);
    if (*tw) run_tw(g, tw_beta, tw_grid);
    if (*finite) run_finite_n(g, fn_n, fn_grid);
    if (*rate) run_rate_scan(g, app);
    if (*kernel) run_kernel_check(g, ka);
    if (*bridge) run_bridge_check(g, ba);
    if (*flow) run_flow_scan(g, fa);
    if (*unmatched) run_unmatched(g, ua);
    if (*wg) run_weingarten(g, wa);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
