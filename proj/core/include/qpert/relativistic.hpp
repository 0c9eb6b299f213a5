#pragma once

#include <span>
#include <vector>

namespace qpert {

/// Rydberg energy used for the hydrogen comparison, in eV.
inline constexpr double kRydbergEv = 13.6;
/// CODATA 2018 Rydberg energy, in eV.
inline constexpr double kRydbergCodataEv = 13.605693122994;
/// Electron rest energy m_e c^2 (CODATA 2018), in eV.
inline constexpr double kElectronRestEnergyEv = 510998.95;

struct RelativisticLevel {
  int n;
  int l;
  double energy_eV;
};

/// -Ry/n^2 - Ry^2 / (2 m_e c^2 n^4) (8n/(2l+1) - 3), the kinetic p^4
/// correction to the Bohr level. Requires n >= 1 and 0 <= l < n.
double relativistic_energy(int n, int l, double rydberg_eV = kRydbergEv);

RelativisticLevel relativistic_level(int n, int l, double rydberg_eV = kRydbergEv);

/// Bohr level -Ry/n^2 in eV.
double hydrogen_energy(int n, double rydberg_eV = kRydbergEv);

/// Hydrogen level under a constant quaternionic perturbation of strength
/// alpha|W| (eV), resummed. Requires alphaW_eV <= Ry/n^2.
double quaternionic_hydrogen_energy(int n, double alphaW_eV, double rydberg_eV = kRydbergEv);

struct ComparisonRow {
  int n;
  double E_complex;
  double E_relativistic;
  double E_quaternionic;
  double alphaW_eV;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  /// Levels skipped because alpha|W| exceeds Ry/n^2.
  std::vector<int> omitted;
};

/// Rows n = 1..n_max of (Bohr, relativistic l = 0, quaternionic) energies.
ComparisonTable comparison_table(double alphaW_eV, int n_max, double rydberg_eV = kRydbergEv);

struct LevelSample {
  int n;
  double alphaW_eV;
  double energy_eV;
};

/// For each n, the quaternionic level sampled at `samples` evenly spaced
/// points of alpha|W| on [0, Ry/n^2]; the last point is the radius itself.
std::vector<LevelSample> hydrogen_levels_vs_potential(std::span<const int> n_list, int samples,
                                                      double rydberg_eV = kRydbergEv);

}  // namespace qpert
