#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

namespace rmt {

/// Symmetry class: 1 for real symmetric, 2 for complex Hermitian.
enum class Beta : int { Real = 1, Complex = 2 };

inline int as_int(Beta b) { return static_cast<int>(b); }
Beta beta_from_int(int b);

using Index = Eigen::Index;
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
/// std::complex is layout compatible with double[2], so a row-major complex
/// matrix is exactly the interleaved (re, im) storage used on disk.
using ComplexMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A dense real symmetric or complex Hermitian matrix. Symmetry is not
/// checked on construction; spectral routines check it before use.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(RealMatrix m) : data_(std::move(m)) {}
  explicit HermitianMatrix(ComplexMatrix m) : data_(std::move(m)) {}

  Beta beta() const { return std::holds_alternative<RealMatrix>(data_) ? Beta::Real : Beta::Complex; }
  Index dim() const;

  bool is_real() const { return beta() == Beta::Real; }
  const RealMatrix& real() const;
  const ComplexMatrix& complex() const;

  std::complex<double> operator()(Index i, Index j) const;

  /// max_ij |H_ij|
  double max_abs() const;
  /// max_ij |H_ij - conj(H_ji)|
  double hermiticity_defect() const;

  /// Bitwise comparison of the stored doubles.
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b);

 private:
  std::variant<RealMatrix, ComplexMatrix> data_;
};

/// a * x + b * y, entry by entry. Both operands must share beta and dim.
HermitianMatrix linear_combination(double a, const HermitianMatrix& x, double b,
                                   const HermitianMatrix& y);

/// max_ij |x_ij - y_ij|
double max_abs_difference(const HermitianMatrix& x, const HermitianMatrix& y);

}  // namespace rmt
