#include "qpert/hermitian_eigensolver.hpp"

#include <complex>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace qpert {

namespace {

void check_range(int dim, int first, int last) {
  if (dim < 1 || first < 0 || last < first || last >= dim) {
    throw std::invalid_argument("eigenvalue index range [" + std::to_string(first) + ", " + std::to_string(last) +
                                "] invalid for dimension " + std::to_string(dim));
  }
}

void check_info(lapack_int info, const char* routine) {
  if (info < 0) {
    throw std::invalid_argument(std::string(routine) + ": illegal argument " + std::to_string(-info));
  }
  if (info > 0) {
    throw EigenSolveError(std::string(routine) + ": iteration failed to converge (info = " + std::to_string(info) +
                          ")");
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim < 1) {
    throw std::invalid_argument("matrix dimension must be positive");
  }
}

double HermitianMatrix::hermiticity_residual() const {
  double worst = 0.0;
  for (int c = 0; c < dim_; ++c) {
    for (int r = c; r < dim_; ++r) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

double HermitianMatrix::norm_inf() const {
  std::vector<double> row_sums(static_cast<std::size_t>(dim_), 0.0);
  for (int c = 0; c < dim_; ++c) {
    for (int r = 0; r < dim_; ++r) {
      row_sums[static_cast<std::size_t>(r)] += std::abs((*this)(r, c));
    }
  }
  return *std::max_element(row_sums.begin(), row_sums.end());
}

std::vector<std::complex<double>> HermitianMatrix::apply(std::span<const std::complex<double>> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("vector length does not match matrix dimension");
  }
  std::vector<std::complex<double>> out(v.size());
  for (int c = 0; c < dim_; ++c) {
    const auto vc = v[static_cast<std::size_t>(c)];
    if (vc == 0.0) continue;
    for (int r = 0; r < dim_; ++r) {
      out[static_cast<std::size_t>(r)] += (*this)(r, c) * vc;
    }
  }
  return out;
}

HermitianEigenpairs hermitian_eigenpairs(const HermitianMatrix& a, int first, int last, bool want_vectors) {
  const int n = a.dim();
  check_range(n, first, last);

  std::vector<std::complex<double>> work(a.data().begin(), a.data().end());
  const int m_expected = last - first + 1;
  HermitianEigenpairs out;
  out.dim = n;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  if (want_vectors) {
    out.vectors.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m_expected), {});
  }
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(m_expected));
  std::complex<double> dummy{};
  lapack_int found = 0;

  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', 'L', n, work.data(),
      n, 0.0, 0.0, first + 1, last + 1, 0.0, &found, out.values.data(),
      want_vectors ? out.vectors.data() : &dummy, want_vectors ? n : 1,
      support.data());
  check_info(info, "zheevr");
  if (found != m_expected) {
    throw EigenSolveError("zheevr returned " + std::to_string(found) + " eigenvalues, expected " +
                          std::to_string(m_expected));
  }
  out.values.resize(static_cast<std::size_t>(found));
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a) {
  return hermitian_eigenpairs(a, 0, a.dim() - 1, false).values;
}

SymmetricEigenpairs tridiagonal_eigenpairs(std::span<const double> diagonal, std::span<const double> off_diagonal,
                                           int first, int last) {
  const int n = static_cast<int>(diagonal.size());
  check_range(n, first, last);
  if (off_diagonal.size() + 1 != diagonal.size()) {
    throw std::invalid_argument("off-diagonal must have length dim - 1");
  }
  std::vector<double> d(diagonal.begin(), diagonal.end());
  // dstevr wants an off-diagonal array of length n.
  std::vector<double> e(off_diagonal.begin(), off_diagonal.end());
  e.push_back(0.0);

  const int m_expected = last - first + 1;
  SymmetricEigenpairs out;
  out.dim = n;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  out.vectors.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m_expected), 0.0);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(m_expected));
  lapack_int found = 0;

  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, first + 1,
                                         last + 1, 0.0, &found, out.values.data(), out.vectors.data(), n,
                                         support.data());
  check_info(info, "dstevr");
  if (found != m_expected) {
    throw EigenSolveError("dstevr returned " + std::to_string(found) + " eigenvalues, expected " +
                          std::to_string(m_expected));
  }
  out.values.resize(static_cast<std::size_t>(found));
  return out;
}

}  // namespace qpert
