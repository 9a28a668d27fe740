#include "rmt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

#include "rmt/error.hpp"

namespace rmt {

namespace {

void check_hermitian(const HermitianMatrix& h) {
  require(h.dim() >= 1, "eigen_decompose: empty matrix");
  const double scale = std::max(1.0, h.max_abs());
  require(h.hermiticity_defect() <= 1e-12 * scale,
          "eigen_decompose: input is not symmetric/Hermitian");
}

}  // namespace

SpectralSample eigen_decompose(const HermitianMatrix& h, bool want_vectors, Seed seed) {
  check_hermitian(h);
  SpectralSample s;
  s.beta = h.beta();
  s.seed = seed;
  const int options = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  if (h.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(h.real()), options);
    if (solver.info() != Eigen::Success) throw ConvergenceError("eigen_decompose: QR iteration failed");
    s.eigenvalues = solver.eigenvalues();
    if (want_vectors) s.vectors = solver.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(h.complex()), options);
    if (solver.info() != Eigen::Success) throw ConvergenceError("eigen_decompose: QR iteration failed");
    s.eigenvalues = solver.eigenvalues();
    if (want_vectors) s.vectors = solver.eigenvectors();
  }
  return s;
}

Eigen::VectorXd eigenvalues(const HermitianMatrix& h) { return eigen_decompose(h, false).eigenvalues; }

cplx m_sc(cplx z) {
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), "m_sc: z must be finite");
  if (z.imag() < 0.0) return std::conj(m_sc(std::conj(z)));
  if (z.imag() == 0.0) {
    require(std::abs(z.real()) > 2.0, "m_sc: z lies on the branch cut [-2, 2]");
    z = cplx(z.real(), 0.0);  // drop a negative zero
  }
  // sqrt(z-2) sqrt(z+2) ~ z at infinity; the quotient form avoids cancellation.
  const cplx s = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
  cplx m = -2.0 / (z + s);
  const cplx d = z + 2.0 * m;
  if (std::abs(d) > 1e-4) m -= (1.0 + z * m + m * m) / d;
  return m;
}

double kappa(double E) { return std::min(std::abs(E - 2.0), std::abs(E + 2.0)); }

double psi(cplx z, Index n) {
  require(z.imag() > 0.0, "psi: Im z must be positive");
  require(n >= 1, "psi: N must be positive");
  const double neta = static_cast<double>(n) * z.imag();
  return std::sqrt(m_sc(z).imag() / neta) + 1.0 / neta;
}

bool SpectralDomain::contains(cplx z, Index n) const {
  const double E = z.real();
  const double eta = z.imag();
  const double nd = static_cast<double>(n);
  const bool in_s0 = std::abs(E) <= 5.0 && eta > 0.0 && eta <= 10.0;
  switch (kind) {
    case DomainKind::S0:
      return in_s0;
    case DomainKind::S:
      return in_s0 && eta >= std::pow(nd, -1.0 + epsilon);
    case DomainKind::SEdge:
      return in_s0 && std::abs(E - 2.0) <= c0 * std::pow(nd, -2.0 / 3.0 + epsilon) &&
             eta >= std::pow(nd, -1.0 + epsilon) && eta <= std::pow(nd, -2.0 / 3.0 + epsilon);
  }
  return false;
}

cplx m_N(const SpectralSample& sample, cplx z) {
  require(z.imag() != 0.0, "m_N: Im z must be nonzero");
  cplx sum = 0.0;
  for (Index j = 0; j < sample.dim(); ++j) sum += 1.0 / (sample.eigenvalues[j] - z);
  return sum / static_cast<double>(sample.dim());
}

cplx green_entry(const SpectralSample& sample, Index i, Index j, cplx z) {
  require(sample.has_vectors(), "green_entry: sample has no eigenvectors");
  require(z.imag() != 0.0, "green_entry: Im z must be nonzero");
  const auto& u = *sample.vectors;
  require(i >= 0 && j >= 0 && i < u.rows() && j < u.rows(), "green_entry: index out of range");
  cplx sum = 0.0;
  for (Index k = 0; k < sample.dim(); ++k) sum += u(i, k) * std::conj(u(j, k)) / (sample.eigenvalues[k] - z);
  return sum;
}

Eigen::MatrixXcd green_matrix(const SpectralSample& sample, cplx z) {
  require(sample.has_vectors(), "green_matrix: sample has no eigenvectors");
  require(z.imag() != 0.0, "green_matrix: Im z must be nonzero");
  const auto& u = *sample.vectors;
  Eigen::VectorXcd w(sample.dim());
  for (Index k = 0; k < sample.dim(); ++k) w[k] = 1.0 / (sample.eigenvalues[k] - z);
  return u * w.asDiagonal() * u.adjoint();
}

Eigen::MatrixXcd green_matrix_direct(const HermitianMatrix& h, cplx z) {
  require(z.imag() != 0.0, "green_matrix_direct: Im z must be nonzero");
  Eigen::MatrixXcd a = h.is_real() ? Eigen::MatrixXcd(h.real().cast<cplx>()) : Eigen::MatrixXcd(h.complex());
  a.diagonal().array() -= z;
  return a.partialPivLu().inverse();
}

LocalLawResiduals local_law_residuals(const SpectralSample& sample, cplx z, const SpectralDomain& domain) {
  require(domain.contains(z, sample.dim()), "local_law_residuals: z outside the spectral domain");
  const Eigen::MatrixXcd g = green_matrix(sample, z);
  const cplx m = m_sc(z);
  LocalLawResiduals r;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) {
      if (i == j)
        r.diag_max = std::max(r.diag_max, std::abs(g(i, i) - m));
      else
        r.offdiag_max = std::max(r.offdiag_max, std::abs(g(i, j)));
    }
  r.trace_dev = std::abs(m_N(sample, z) - m);
  return r;
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) + std::asin(0.5 * x) / std::numbers::pi;
}

double classical_location(Index j, Index n) {
  require(n >= 1, "classical_location: N must be positive");
  require(j >= 1 && j <= n, "classical_location: j out of range");
  if (j == n) return 2.0;
  const double target = static_cast<double>(j) / static_cast<double>(n);
  if (2 * j == n) return 0.0;
  std::uintmax_t iterations = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      [target](double x) { return semicircle_cdf(x) - target; }, -2.0, 2.0, -target, 1.0 - target,
      [](double a, double b) { return std::abs(b - a) <= 1e-15; }, iterations);
  if (iterations >= 200) throw ConvergenceError("classical_location: root bracketing did not converge");
  return 0.5 * (lo + hi);
}

Index counting(const SpectralSample& sample, double e1, double e2) {
  require(e1 < e2, "counting: need E1 < E2");
  const auto* b = sample.eigenvalues.data();
  const auto* e = b + sample.dim();
  return static_cast<Index>(std::upper_bound(b, e, e2) - std::lower_bound(b, e, e1));
}

std::vector<double> rigidity_residual(const SpectralSample& sample) {
  const Index n = sample.dim();
  std::vector<double> out(static_cast<std::size_t>(n));
  const double nd = static_cast<double>(n);
  for (Index j = 1; j <= n; ++j) {
    const double rate = std::pow(nd, -2.0 / 3.0) * std::pow(static_cast<double>(std::min(j, n - j + 1)), -1.0 / 3.0);
    out[j - 1] = std::abs(sample.eigenvalues[j - 1] - classical_location(j, n)) / rate;
  }
  return out;
}

}  // namespace rmt
