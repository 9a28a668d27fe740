#pragma once

#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/spectral.hpp"

namespace rmt {

enum class FlowObservable { ImMN, FOfX, Type0Trace };
std::string to_string(FlowObservable o);
FlowObservable flow_observable_from_string(const std::string& name);

struct FlowScan {
  std::vector<double> t_grid;  ///< ascending, starts at 0, ends at 8 log N
  std::vector<cplx> z_list;    ///< points of S_edge
  std::size_t replicas = 100;
  Seed seed = 0;
  double epsilon = 0.05;
  double c0 = 4.0;

  /// `points` equally spaced times on [0, 8 log N].
  static std::vector<double> default_t_grid(Index n, int points = 7);
  void validate(Index n) const;
};

/// Value of an observable on one spectrum. F_of_X uses
/// kappa1 = Re z - 2, kappa2 = 4 N^{-2/3+eps}, eta = Im z and applies the
/// smooth cutoff to X / pi.
double flow_observable(FlowObservable o, const SpectralSample& sample, cplx z, double epsilon);

struct FlowRow {
  double t = 0.0;
  cplx z;
  double mean = 0.0;
  double se = 0.0;
  double diff = 0.0;             ///< mean(t) - mean(0)
  double diff_se_coupled = 0.0;  ///< SE of per-replica differences
  double diff_se_uncoupled = 0.0;  ///< sqrt(se(t)^2 + se(0)^2)
};

struct FlowTable {
  FlowObservable observable = FlowObservable::ImMN;
  Index n = 0;
  std::vector<FlowRow> rows;      ///< z-major, then t
  std::vector<double> flatness;   ///< per z: max_t |mean(t) - mean(0)|
  /// Per z: max_t (|diff| - 3 coupled SE), the part of the drift not
  /// explained by Monte Carlo error.
  std::vector<double> excess;
};

/// Replica r draws H0 from `spec` with seed derive_seed(s_r, {1}) and the
/// Gaussian endpoint with derive_seed(s_r, {2}), s_r = derive_seed(seed, {N, r});
/// both are held fixed along the t grid.
FlowTable flow_scan(const EnsembleSpec& spec, const FlowScan& scan, FlowObservable observable,
                    unsigned threads = 1);

struct EdgeTraceOptions {
  double lower_split = -6.0;  ///< L0, in edge units
  double upper = 20.0;        ///< edge-unit cutoff of the upper tail
  double resolution = 1.0;    ///< panel refinement factor
};

/// (1/N) E[Im Tr G(z)] for GUE, as an integral of K_N^edge(x, x) against the
/// Lorentzian N^{2/3} eta~ / ((x - kappa~)^2 + eta~^2), kappa~ = N^{2/3}(E-2),
/// eta~ = N^{2/3} eta. The bulk part below L0 is integrated in unscaled
/// coordinates on panels matched to the local eigenvalue spacing.
double gue_edge_trace(Index n, cplx z, const EdgeTraceOptions& options = {});

struct UnmatchedRow {
  Index n = 0;
  cplx z;
  cplx estimate;          ///< mean of (1/N^2) sum_ab G_ab G_ba G_ab
  double se = 0.0;        ///< SE of the modulus-relevant components, sqrt(se_re^2 + se_im^2)
  cplx diagonal;          ///< mean of (1/N^2) sum_ab G_aa G_bb G_aa
  double diagonal_se = 0.0;
  double naive_psi3 = 0.0;
};

struct UnmatchedResult {
  std::vector<UnmatchedRow> rows;
  double exponent = 0.0;        ///< log-log slope of |estimate| in N
  double psi3_exponent = 0.0;   ///< same for the naive bound
  double exponent_se = 0.0;     ///< from propagating the per-N SE to the slope
};

struct UnmatchedOptions {
  double E = 0.0;
  double eta_exponent = 0.6;  ///< z = E + i N^{-eta_exponent}
  std::size_t replicas = 500;
  Seed seed = 0;
};

UnmatchedResult unmatched_probe(const EnsembleSpec& spec, const std::vector<Index>& n_list,
                                const UnmatchedOptions& options, unsigned threads = 1);

}  // namespace rmt
