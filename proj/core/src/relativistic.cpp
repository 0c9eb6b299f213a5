#include "qpert/relativistic.hpp"

#include <stdexcept>
#include <string>

#include "qpert/perturbation_series.hpp"

namespace qpert {

namespace {

void require_principal(int n) {
  if (n < 1) {
    throw std::invalid_argument("principal quantum number must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

double hydrogen_energy(int n, double rydberg_eV) {
  require_principal(n);
  return -rydberg_eV / (static_cast<double>(n) * n);
}

double relativistic_energy(int n, int l, double rydberg_eV) {
  require_principal(n);
  if (l < 0 || l >= n) {
    throw std::invalid_argument("orbital quantum number must satisfy 0 <= l < n, got n = " + std::to_string(n) +
                                ", l = " + std::to_string(l));
  }
  const double nn = n;
  const double n4 = nn * nn * nn * nn;
  const double shift = rydberg_eV * rydberg_eV / (2.0 * kElectronRestEnergyEv * n4) * (8.0 * nn / (2.0 * l + 1.0) - 3.0);
  return hydrogen_energy(n, rydberg_eV) - shift;
}

RelativisticLevel relativistic_level(int n, int l, double rydberg_eV) {
  return {n, l, relativistic_energy(n, l, rydberg_eV)};
}

double quaternionic_hydrogen_energy(int n, double alphaW_eV, double rydberg_eV) {
  // alpha = 1 carries the whole coupling in W.
  const PerturbationSpec spec(hydrogen_energy(n, rydberg_eV), alphaW_eV, 1.0);
  return closed_form_limit(spec);
}

ComparisonTable comparison_table(double alphaW_eV, int n_max, double rydberg_eV) {
  require_principal(n_max);
  ComparisonTable table;
  for (int n = 1; n <= n_max; ++n) {
    const PerturbationSpec spec(hydrogen_energy(n, rydberg_eV), alphaW_eV, 1.0);
    if (!is_convergent(spec)) {
      table.omitted.push_back(n);
      continue;
    }
    table.rows.push_back({n, hydrogen_energy(n, rydberg_eV), relativistic_energy(n, 0, rydberg_eV),
                          closed_form_limit(spec), alphaW_eV});
  }
  return table;
}

std::vector<LevelSample> hydrogen_levels_vs_potential(std::span<const int> n_list, int samples, double rydberg_eV) {
  if (samples < 2) {
    throw std::invalid_argument("need at least 2 samples per level, got " + std::to_string(samples));
  }
  std::vector<LevelSample> out;
  out.reserve(n_list.size() * static_cast<std::size_t>(samples));
  for (const int n : n_list) {
    const double radius = -hydrogen_energy(n, rydberg_eV);
    for (int i = 0; i < samples; ++i) {
      // The endpoint is pinned to the radius rather than accumulated.
      const double x = (i == samples - 1) ? radius : radius * i / (samples - 1);
      out.push_back({n, x, quaternionic_hydrogen_energy(n, x, rydberg_eV)});
    }
  }
  return out;
}

}  // namespace qpert
