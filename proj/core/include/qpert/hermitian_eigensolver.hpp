#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace qpert {

/// Dense square complex matrix, column-major. Only Hermitian contents are
/// meaningful to the solvers below; they read the lower triangle.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int dim);

  int dim() const { return dim_; }

  std::complex<double>& operator()(int row, int col) { return data_[index(row, col)]; }
  std::complex<double> operator()(int row, int col) const { return data_[index(row, col)]; }

  std::span<const std::complex<double>> data() const { return data_; }

  /// max |A(r,c) - conj(A(c,r))| over all entries.
  double hermiticity_residual() const;

  /// Largest absolute row sum, an upper bound on the spectral norm.
  double norm_inf() const;

  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> v) const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(col) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(row);
  }

  int dim_ = 0;
  std::vector<std::complex<double>> data_;
};

class EigenSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HermitianEigenpairs {
  int dim = 0;
  std::vector<double> values;                 // ascending
  std::vector<std::complex<double>> vectors;  // dim x values.size(), column-major; empty if not requested

  std::span<const std::complex<double>> vector(std::size_t i) const {
    return std::span(vectors).subspan(i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  }
};

/// Eigenvalues (and optionally eigenvectors) with 0-based ascending indices
/// first..last inclusive. Backed by LAPACK zheevr; a failed reduction or
/// non-converged iteration is raised as EigenSolveError.
HermitianEigenpairs hermitian_eigenpairs(const HermitianMatrix& a, int first, int last, bool want_vectors);

/// All eigenvalues, ascending.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

struct SymmetricEigenpairs {
  int dim = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // dim x values.size(), column-major

  std::span<const double> vector(std::size_t i) const {
    return std::span(vectors).subspan(i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  }
};

/// Eigenpairs first..last of the real symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal (LAPACK dstevr).
SymmetricEigenpairs tridiagonal_eigenpairs(std::span<const double> diagonal, std::span<const double> off_diagonal,
                                           int first, int last);

}  // namespace qpert
