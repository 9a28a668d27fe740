#include "rmt/matrix.hpp"

#include <cstring>

#include "rmt/error.hpp"

namespace rmt {

Beta beta_from_int(int b) {
  if (b == 1) return Beta::Real;
  if (b == 2) return Beta::Complex;
  throw ValidationError("beta must be 1 or 2, got " + std::to_string(b));
}

Index HermitianMatrix::dim() const {
  return std::visit([](const auto& m) { return m.rows(); }, data_);
}

const RealMatrix& HermitianMatrix::real() const {
  if (const auto* m = std::get_if<RealMatrix>(&data_)) return *m;
  throw ValidationError("matrix is complex Hermitian, not real symmetric");
}

const ComplexMatrix& HermitianMatrix::complex() const {
  if (const auto* m = std::get_if<ComplexMatrix>(&data_)) return *m;
  throw ValidationError("matrix is real symmetric, not complex Hermitian");
}

std::complex<double> HermitianMatrix::operator()(Index i, Index j) const {
  return std::visit([&](const auto& m) { return std::complex<double>(m(i, j)); }, data_);
}

double HermitianMatrix::max_abs() const {
  return std::visit([](const auto& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); },
                    data_);
}

double HermitianMatrix::hermiticity_defect() const {
  return std::visit(
      [](const auto& m) {
        if (m.size() == 0) return 0.0;
        return (m - m.adjoint()).cwiseAbs().maxCoeff();
      },
      data_);
}

bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.beta() != b.beta() || a.dim() != b.dim()) return false;
  return std::visit(
      [&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        const auto& mb = std::get<M>(b.data_);
        return std::memcmp(ma.data(), mb.data(), sizeof(typename M::Scalar) * ma.size()) == 0;
      },
      a.data_);
}

HermitianMatrix linear_combination(double a, const HermitianMatrix& x, double b,
                                   const HermitianMatrix& y) {
  require(x.beta() == y.beta(), "linear_combination: symmetry classes differ");
  require(x.dim() == y.dim(), "linear_combination: dimensions differ");
  if (x.is_real()) return HermitianMatrix(RealMatrix(a * x.real().array() + b * y.real().array()));
  return HermitianMatrix(ComplexMatrix(a * x.complex().array() + b * y.complex().array()));
}

double max_abs_difference(const HermitianMatrix& x, const HermitianMatrix& y) {
  require(x.beta() == y.beta() && x.dim() == y.dim(), "max_abs_difference: shape mismatch");
  if (x.is_real()) return (x.real() - y.real()).cwiseAbs().maxCoeff();
  return (x.complex() - y.complex()).cwiseAbs().maxCoeff();
}

}  // namespace rmt
