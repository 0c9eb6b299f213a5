#pragma once

#include <complex>
#include <vector>

#include "qpert/bound_state_models.hpp"
#include "qpert/hermitian_eigensolver.hpp"

namespace qpert {

/// Uniform interior grid on (x_min, x_max) with Dirichlet walls at both ends.
struct Grid1D {
  double x_min;
  double x_max;
  int N;

  /// Throws std::invalid_argument unless N >= 3 and x_max > x_min.
  Grid1D(double x_min, double x_max, int N);

  double h() const { return (x_max - x_min) / (N + 1); }
  double x(int i) const { return x_min + (i + 1) * h(); }

  /// Same walls, spacing halved: N' = 2N + 1.
  Grid1D refined() const { return Grid1D(x_min, x_max, 2 * N + 1); }
};

/// Box [0, 1] for the well; [-9, 9] for the oscillator, wide enough that
/// the lowest seven levels move by less than 1e-8 when it is doubled.
Grid1D default_grid(ModelKind model, int N);

/// Largest grid the oracle accepts: the embedded matrix is 2N x 2N dense.
inline constexpr int kMaxGridPoints = 2048;

/// Finite-difference Hamiltonian -d^2/dx^2 + V(x) in units hbar^2 / 2m = 1:
/// diagonal 2/h^2 + V(x_i), off-diagonal -1/h^2. V = 0 for the well and
/// V = x^2 / 4 for the oscillator (hbar omega = 1).
struct DiscreteHamiltonian {
  ModelKind model;
  Grid1D grid;
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  int size() const { return static_cast<int>(diagonal.size()); }
};

/// Rejects hydrogen.
DiscreteHamiltonian discretize(ModelKind model, const Grid1D& grid);

/// Model energy unit in grid units: E_L = pi^2 / L^2 for the well, 1 for
/// the oscillator.
double energy_scale(ModelKind model, const Grid1D& grid);

/// Complex image of the quaternionic operator iH + j alpha W acting on
/// phi + j psi, multiplied by -i so that right eigenvalues become ordinary
/// ones:  B = [[H, i alpha conj(W)], [-i alpha W, -H]].
struct EmbeddedOperator {
  DiscreteHamiltonian hamiltonian;
  double alpha;
  std::complex<double> W;
  HermitianMatrix matrix;

  int half_dim() const { return hamiltonian.size(); }
};

/// W is in grid energy units. Throws when 2N exceeds 2 * kMaxGridPoints.
EmbeddedOperator embed(const DiscreteHamiltonian& H, double alpha, std::complex<double> W);

/// All 2N eigenvalues, ascending.
std::vector<double> spectrum(const EmbeddedOperator& B);

/// The k eigenvalues closest to `reference`, ascending.
std::vector<double> spectrum(const EmbeddedOperator& B, int k, double reference);

/// The eigenvalues matched to the k lowest unperturbed levels of H, ascending.
std::vector<double> spectrum(const EmbeddedOperator& B, int k);

struct MatchedLevel {
  double eigenvalue;  // grid units
  double overlap;     // |<(u, 0), v>|^2 with the unperturbed eigenvector u
  int index;          // position in the ascending spectrum of B
};

/// Eigenvalue of B continuing H-level `level_index` (0-based) from alpha = 0:
/// same sign as the unperturbed level, largest overlap with its eigenvector.
MatchedLevel matched_level(const EmbeddedOperator& B, int level_index);

/// 0-based H eigenvalue index of quantum number n.
int level_index(ModelKind model, int n);

struct OracleReport {
  ModelKind model;
  int n;
  double alpha;
  int grid_points;
  int order;
  /// Values below are in model units (E_L or E_omega).
  double e0_analytic;
  double e0_discrete;
  double series;
  double closed_form;
  double oracle;
  double overlap;
  double dev_oracle_closed;
  double dev_series_oracle;
  double dev_series_closed;
  double dev_e0_grid;
  bool grid_warning;
  double tolerance;
  bool pass;
};

inline constexpr double kOracleTolerance = 1e-4;
inline constexpr double kGridWarningThreshold = 5e-3;

/// Compares the oracle eigenvalue of level n against the closed form and the
/// series' limit estimate through (alpha...)^(2 * order): the partial sum
/// inside the radius, the alternating midpoint on its boundary. Throws RadiusError
/// outside the level radius.
OracleReport oracle_compare(ModelKind model, int n, double alpha, const Grid1D& grid, int order,
                            double tolerance = kOracleTolerance);

struct GridRefinement {
  double coarse_error;  // |oracle - closed| / |closed| on the given grid
  double fine_error;    // same after halving h
  double ratio;         // coarse_error / fine_error, ~4 for a second-order stencil
};

GridRefinement grid_refinement(ModelKind model, int n, double alpha, const Grid1D& grid);

}  // namespace qpert
