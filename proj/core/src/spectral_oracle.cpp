#include "qpert/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qpert/quaternion.hpp"

namespace qpert {

namespace {

void require_discretizable(ModelKind model) {
  if (model == ModelKind::hydrogen) {
    throw std::invalid_argument("hydrogen is not discretized; only well and oscillator are supported");
  }
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

Grid1D::Grid1D(double x_min_, double x_max_, int N_) : x_min(x_min_), x_max(x_max_), N(N_) {
  if (N_ < 3) {
    throw std::invalid_argument("grid needs at least 3 interior points, got " + std::to_string(N_));
  }
  if (!(x_max_ > x_min_) || !std::isfinite(x_min_) || !std::isfinite(x_max_)) {
    throw std::invalid_argument("grid bounds must be finite with x_max > x_min");
  }
}

Grid1D default_grid(ModelKind model, int N) {
  require_discretizable(model);
  return model == ModelKind::well ? Grid1D(0.0, 1.0, N) : Grid1D(-9.0, 9.0, N);
}

double energy_scale(ModelKind model, const Grid1D& grid) {
  require_discretizable(model);
  if (model == ModelKind::well) {
    const double L = grid.x_max - grid.x_min;
    return std::numbers::pi * std::numbers::pi / (L * L);
  }
  return 1.0;
}

DiscreteHamiltonian discretize(ModelKind model, const Grid1D& grid) {
  require_discretizable(model);
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  DiscreteHamiltonian H{model, grid, {}, {}};
  H.diagonal.resize(static_cast<std::size_t>(grid.N));
  H.off_diagonal.assign(static_cast<std::size_t>(grid.N - 1), -inv_h2);
  for (int i = 0; i < grid.N; ++i) {
    const double x = grid.x(i);
    const double v = model == ModelKind::oscillator ? 0.25 * x * x : 0.0;
    H.diagonal[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + v;
  }
  return H;
}

EmbeddedOperator embed(const DiscreteHamiltonian& H, double alpha, std::complex<double> W) {
  const int n = H.size();
  if (n > kMaxGridPoints) {
    throw std::invalid_argument("embedded operator of dimension " + std::to_string(2 * n) +
                                " exceeds the dense limit " + std::to_string(2 * kMaxGridPoints));
  }
  EmbeddedOperator B{H, alpha, W, HermitianMatrix(2 * n)};
  const std::complex<double> minus_i(0.0, -1.0);
  const std::complex<double> i_unit(0.0, 1.0);

  // Entry (a, b) of iH + j alpha W is the quaternion z1 + j z2 with
  // z1 = i H_ab and z2 = alpha W delta_ab; it acts on (phi_b, psi_b)
  // through embed_block.
  auto place = [&](int a, int b, double h_ab, std::complex<double> z2) {
    const ComplexBlock blk = embed_block(i_unit * h_ab, z2);
    B.matrix(a, b) = minus_i * blk(0, 0);
    B.matrix(a, n + b) = minus_i * blk(0, 1);
    B.matrix(n + a, b) = minus_i * blk(1, 0);
    B.matrix(n + a, n + b) = minus_i * blk(1, 1);
  };

  const std::complex<double> coupling = alpha * W;
  for (int a = 0; a < n; ++a) {
    place(a, a, H.diagonal[static_cast<std::size_t>(a)], coupling);
    if (a + 1 < n) {
      const double off = H.off_diagonal[static_cast<std::size_t>(a)];
      place(a, a + 1, off, 0.0);
      place(a + 1, a, off, 0.0);
    }
  }
  return B;
}

std::vector<double> spectrum(const EmbeddedOperator& B) { return hermitian_eigenvalues(B.matrix); }

std::vector<double> spectrum(const EmbeddedOperator& B, int k, double reference) {
  const int dim = B.matrix.dim();
  if (k < 1 || k > dim) {
    throw std::invalid_argument("requested " + std::to_string(k) + " eigenvalues of a " + std::to_string(dim) +
                                "-dimensional operator");
  }
  auto all = spectrum(B);
  std::stable_sort(all.begin(), all.end(),
                   [reference](double a, double b) { return std::abs(a - reference) < std::abs(b - reference); });
  all.resize(static_cast<std::size_t>(k));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<double> spectrum(const EmbeddedOperator& B, int k) {
  const int n = B.half_dim();
  if (k < 1 || k > n) {
    throw std::invalid_argument("requested " + std::to_string(k) + " matched levels of a grid with " +
                                std::to_string(n) + " points");
  }
  const auto levels = tridiagonal_eigenpairs(B.hamiltonian.diagonal, B.hamiltonian.off_diagonal, 0, k - 1);
  auto all = spectrum(B);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  std::vector<bool> taken(all.size(), false);
  for (const double ref : levels.values) {
    std::size_t best = all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (taken[i]) continue;
      if (best == all.size() || std::abs(all[i] - ref) < std::abs(all[best] - ref)) {
        best = i;
      }
    }
    taken[best] = true;
    out.push_back(all[best]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int level_index(ModelKind model, int n) {
  require_discretizable(model);
  if (n < min_quantum_number(model)) {
    throw std::invalid_argument("quantum number below the model minimum");
  }
  return n - min_quantum_number(model);
}

MatchedLevel matched_level(const EmbeddedOperator& B, int level) {
  const int n = B.half_dim();
  if (level < 0 || level >= n) {
    throw std::invalid_argument("level index out of range");
  }
  const auto unperturbed = tridiagonal_eigenpairs(B.hamiltonian.diagonal, B.hamiltonian.off_diagonal, level, level);
  const double e0 = unperturbed.values[0];
  const auto u = unperturbed.vector(0);

  // The +/- pairs of B are ordered by |E0| of their parent level; for a
  // positive-definite H the positive branch of level m sits at index n + m.
  const int expected = e0 >= 0.0 ? n + level : n - 1 - level;
  const int first = std::max(0, expected - 2);
  const int last = std::min(2 * n - 1, expected + 2);
  const auto pairs = hermitian_eigenpairs(B.matrix, first, last, true);

  MatchedLevel best{0.0, -1.0, -1};
  for (std::size_t c = 0; c < pairs.values.size(); ++c) {
    const double value = pairs.values[c];
    if ((value >= 0.0) != (e0 >= 0.0)) continue;
    const auto v = pairs.vector(c);
    std::complex<double> dot{};
    for (int a = 0; a < n; ++a) {
      dot += u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(a)];
    }
    const double overlap = std::norm(dot);
    if (overlap > best.overlap) {
      best = {value, overlap, first + static_cast<int>(c)};
    }
  }
  if (best.index < 0) {
    throw EigenSolveError("no eigenvalue of matching sign near level " + std::to_string(level));
  }
  return best;
}

OracleReport oracle_compare(ModelKind model, int n, double alpha, const Grid1D& grid, int order, double tolerance) {
  require_discretizable(model);
  const LevelSpec level(model, n);
  const auto spec = level_perturbation(level, alpha);
  if (!is_convergent(spec)) {
    throw RadiusError("alpha = " + std::to_string(alpha) + " outside the radius of " + std::string(to_string(model)) +
                          " level n = " + std::to_string(n),
                      n);
  }

  const double scale = energy_scale(model, grid);
  const auto H = discretize(model, grid);
  const auto B = embed(H, alpha, model_W(model) * scale);
  const int idx = level_index(model, n);
  const auto match = matched_level(B, idx);
  const auto h_level = tridiagonal_eigenpairs(H.diagonal, H.off_diagonal, idx, idx);

  OracleReport r{};
  r.model = model;
  r.n = n;
  r.alpha = alpha;
  r.grid_points = grid.N;
  r.order = order;
  r.e0_analytic = unperturbed_energy(level);
  r.e0_discrete = h_level.values[0] / scale;
  if (order < 1) {
    throw std::invalid_argument("truncation order must be >= 1");
  }
  r.series = perturbed_energy(spec, 2 * order).limit_estimate;
  r.closed_form = closed_form_limit(spec);
  r.oracle = match.eigenvalue / scale;
  r.overlap = match.overlap;
  r.dev_oracle_closed = relative(r.oracle, r.closed_form);
  r.dev_series_oracle = relative(r.series, r.oracle);
  r.dev_series_closed = relative(r.series, r.closed_form);
  r.dev_e0_grid = relative(r.e0_discrete, r.e0_analytic);
  r.grid_warning = r.dev_e0_grid > kGridWarningThreshold;
  r.tolerance = tolerance;
  r.pass = r.dev_oracle_closed <= tolerance && r.dev_series_oracle <= tolerance;
  return r;
}

GridRefinement grid_refinement(ModelKind model, int n, double alpha, const Grid1D& grid) {
  const auto coarse = oracle_compare(model, n, alpha, grid, 1);
  const auto fine = oracle_compare(model, n, alpha, grid.refined(), 1);
  return {coarse.dev_oracle_closed, fine.dev_oracle_closed, coarse.dev_oracle_closed / fine.dev_oracle_closed};
}

}  // namespace qpert
