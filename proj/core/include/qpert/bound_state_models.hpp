#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpert/perturbation_series.hpp"

namespace qpert {

enum class ModelKind { hydrogen, well, oscillator };

std::string_view to_string(ModelKind model);

/// Parses "hydrogen", "well" or "oscillator".
std::optional<ModelKind> parse_model(std::string_view name);

/// Name of the model's natural energy scale: Ry, E_L or E_omega.
std::string_view energy_unit(ModelKind model);

/// Smallest admissible quantum number: 0 for the oscillator, 1 otherwise.
int min_quantum_number(ModelKind model);

/// A bound level of one of the three reference systems. All energies below
/// are expressed in the model's natural unit.
struct LevelSpec {
  ModelKind model;
  int n;

  /// Throws std::invalid_argument when n is below min_quantum_number(model).
  LevelSpec(ModelKind model, int n);
};

/// -1/n^2 (hydrogen), n^2 (well), n + 1/2 (oscillator).
double unperturbed_energy(const LevelSpec& level);

/// |W| in model units: 2 Ry, 2 E_L, 1 E_omega.
double model_W(ModelKind model);

/// Unperturbed gap between levels n+1 and n:
/// (2n+1)/(n^2 (n+1)^2), 2n+1, 1.
double gap_lambda(ModelKind model, int n);

/// Per-level convergence bound on alpha: 1/(2n^2), n^2/2, n + 1/2.
double alpha_max(ModelKind model, int n);

/// Binding bound for the pair (n, n+1): the smaller of the two level bounds.
double gap_alpha_max(ModelKind model, int n);

/// Specification handed to the series for one level.
PerturbationSpec level_perturbation(const LevelSpec& level, double alpha);

/// Partial sum of the level energy through (alpha...)^(2 * order).
/// Throws RadiusError (binding_level = n) outside the level radius.
double perturbed_level(const LevelSpec& level, double alpha, int order);

/// Perturbed gap E(n+1) - E(n). Throws RadiusError naming the binding level
/// when either level lies outside its radius.
double gap_Lambda(ModelKind model, int n, double alpha, int order);

/// Lambda / lambda from two perturbed_level evaluations.
double sigma_ratio(ModelKind model, int n, double alpha, int order);

/// The sigma series written out per model, truncated after `order` terms:
///   hydrogen   1 + n^2(n+1)^2/(2n+1) sum (-1)^s (2/s) C [(n+1)^(4s-2) - n^(4s-2)] alpha^2s
///   well       1 + 1/(2n+1) sum (-1)^(s+1) (2/s) C [(n+1)^(2-4s) - n^(2-4s)] alpha^2s
///   oscillator 1 + sum (-1)^(s+1) (1/s) C [(2n+3)^(1-2s) - (2n+1)^(1-2s)] alpha^2s
/// with C = C(2s-2, s-1). Agrees with sigma_ratio term for term.
double sigma_ratio_explicit(ModelKind model, int n, double alpha, int order);

/// Resummed sigma from the closed-form level energies.
double sigma_limit(ModelKind model, int n, double alpha);

struct GapResult {
  double lambda = 0.0;
  double Lambda = 0.0;
  double sigma = 0.0;
  int order = 0;
  double alpha = 0.0;
};

GapResult gap_result(ModelKind model, int n, double alpha, int order);

struct SigmaRow {
  double alpha;
  int order;
  double sigma;
};

struct SigmaCurve {
  std::vector<SigmaRow> rows;
  /// Alphas dropped because they lie outside the gap radius.
  std::vector<double> rejected;
  /// Accepted alphas sitting exactly on the gap radius.
  std::vector<double> boundary;
};

/// sigma(n, alpha) for every alpha and truncation order 1..max_order,
/// one row per (alpha, order), alphas in the order given.
SigmaCurve sigma_curve(ModelKind model, int n, std::span<const double> alphas, int max_order);

}  // namespace qpert
