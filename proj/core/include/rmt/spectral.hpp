#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rmt/ensembles.hpp"
#include "rmt/matrix.hpp"
#include "rmt/random.hpp"

namespace rmt {

using cplx = std::complex<double>;

/// Ordered spectrum of one matrix, optionally with eigenvectors (column k
/// of `vectors` belongs to eigenvalues[k]).
struct SpectralSample {
  Beta beta = Beta::Complex;
  Eigen::VectorXd eigenvalues;
  std::optional<Eigen::MatrixXcd> vectors;
  Seed seed = 0;
  std::optional<EnsembleSpec> spec;

  Index dim() const { return eigenvalues.size(); }
  bool has_vectors() const { return vectors.has_value(); }
  double largest() const { return eigenvalues[eigenvalues.size() - 1]; }
};

/// Dense symmetric eigensolver. Rejects input whose Hermiticity defect
/// exceeds 1e-12 relative to max |H_ij|.
SpectralSample eigen_decompose(const HermitianMatrix& h, bool want_vectors, Seed seed = 0);

/// Eigenvalues only, for callers that just need the spectrum.
Eigen::VectorXd eigenvalues(const HermitianMatrix& h);

/// Stieltjes transform of the semicircle law: the root of 1 + z m + m^2 = 0
/// with Im m > 0 for Im z > 0. Real z is allowed outside [-2, 2].
cplx m_sc(cplx z);

/// Distance from E to the nearest spectral edge +-2.
double kappa(double E);

/// sqrt(Im m_sc / (N eta)) + 1 / (N eta).
double psi(cplx z, Index n);

enum class DomainKind { S0, S, SEdge };

struct SpectralDomain {
  DomainKind kind = DomainKind::S;
  double epsilon = 0.0;
  double c0 = 1.0;

  bool contains(cplx z, Index n) const;
};

/// (1/N) sum_j 1 / (lambda_j - z)
cplx m_N(const SpectralSample& sample, cplx z);

/// G_ij(z) from the spectral decomposition.
cplx green_entry(const SpectralSample& sample, Index i, Index j, cplx z);

/// Full resolvent U diag(1/(lambda - z)) U^*.
Eigen::MatrixXcd green_matrix(const SpectralSample& sample, cplx z);

/// (H - z)^{-1} by LU, for single-z uses where a decomposition is wasted.
Eigen::MatrixXcd green_matrix_direct(const HermitianMatrix& h, cplx z);

struct LocalLawResiduals {
  double offdiag_max = 0.0;  ///< max_{i != j} |G_ij|
  double diag_max = 0.0;     ///< max_i |G_ii - m_sc|
  double trace_dev = 0.0;    ///< |m_N - m_sc|
};

/// Raw local-law residuals; thresholds are left to the caller.
LocalLawResiduals local_law_residuals(const SpectralSample& sample, cplx z,
                                      const SpectralDomain& domain = {});

/// Semicircle distribution function 1/2 + x sqrt(4 - x^2)/(4 pi) + asin(x/2)/pi.
double semicircle_cdf(double x);

/// gamma_j with semicircle_cdf(gamma_j) = j / N, 1 <= j <= N.
double classical_location(Index j, Index n);

/// #{j : E1 <= lambda_j <= E2}. E2 may be +infinity.
Index counting(const SpectralSample& sample, double e1, double e2);

/// |lambda_j - gamma_j| / (N^{-2/3} min(j, N - j + 1)^{-1/3}), j = 1..N.
std::vector<double> rigidity_residual(const SpectralSample& sample);

}  // namespace rmt
