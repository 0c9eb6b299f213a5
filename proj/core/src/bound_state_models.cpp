#include "qpert/bound_state_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpert/binomial.hpp"

namespace qpert {

namespace {

// lambda as the difference of the two level energies, so that sigma at
// alpha = 0 divides a number by itself and is exactly 1.
double level_gap(ModelKind model, int n) {
  return unperturbed_energy(LevelSpec(model, n + 1)) - unperturbed_energy(LevelSpec(model, n));
}

void require_truncation(int order) {
  if (order < 1) {
    throw std::invalid_argument("truncation order must be >= 1, got " + std::to_string(order));
  }
}

void require_level(ModelKind model, int n) {
  if (n < min_quantum_number(model)) {
    throw std::invalid_argument(std::string(to_string(model)) + " level requires n >= " +
                                std::to_string(min_quantum_number(model)) + ", got " + std::to_string(n));
  }
}

void require_in_radius(const LevelSpec& level, double alpha) {
  if (!is_convergent(level_perturbation(level, alpha))) {
    throw RadiusError("alpha = " + std::to_string(alpha) + " outside the convergence radius of " +
                          std::string(to_string(level.model)) + " level n = " + std::to_string(level.n) +
                          " (alpha_max = " + std::to_string(alpha_max(level.model, level.n)) + ")",
                      level.n);
  }
}

double sign_pow(int s) { return (s % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

std::string_view to_string(ModelKind model) {
  switch (model) {
    case ModelKind::hydrogen:
      return "hydrogen";
    case ModelKind::well:
      return "well";
    case ModelKind::oscillator:
      return "oscillator";
  }
  return "unknown";
}

std::optional<ModelKind> parse_model(std::string_view name) {
  if (name == "hydrogen") return ModelKind::hydrogen;
  if (name == "well") return ModelKind::well;
  if (name == "oscillator") return ModelKind::oscillator;
  return std::nullopt;
}

std::string_view energy_unit(ModelKind model) {
  switch (model) {
    case ModelKind::hydrogen:
      return "Ry";
    case ModelKind::well:
      return "E_L";
    case ModelKind::oscillator:
      return "E_omega";
  }
  return "";
}

int min_quantum_number(ModelKind model) { return model == ModelKind::oscillator ? 0 : 1; }

LevelSpec::LevelSpec(ModelKind model_, int n_) : model(model_), n(n_) { require_level(model_, n_); }

double unperturbed_energy(const LevelSpec& level) {
  const double n = level.n;
  switch (level.model) {
    case ModelKind::hydrogen:
      return -1.0 / (n * n);
    case ModelKind::well:
      return n * n;
    case ModelKind::oscillator:
      return n + 0.5;
  }
  throw std::logic_error("unhandled model");
}

double model_W(ModelKind model) { return model == ModelKind::oscillator ? 1.0 : 2.0; }

double gap_lambda(ModelKind model, int n) {
  require_level(model, n);
  const double m = n;
  switch (model) {
    case ModelKind::hydrogen:
      return (2.0 * m + 1.0) / (m * m * (m + 1.0) * (m + 1.0));
    case ModelKind::well:
      return 2.0 * m + 1.0;
    case ModelKind::oscillator:
      return 1.0;
  }
  throw std::logic_error("unhandled model");
}

double alpha_max(ModelKind model, int n) {
  require_level(model, n);
  const double m = n;
  switch (model) {
    case ModelKind::hydrogen:
      return 1.0 / (2.0 * m * m);
    case ModelKind::well:
      return m * m / 2.0;
    case ModelKind::oscillator:
      return m + 0.5;
  }
  throw std::logic_error("unhandled model");
}

double gap_alpha_max(ModelKind model, int n) { return std::min(alpha_max(model, n), alpha_max(model, n + 1)); }

PerturbationSpec level_perturbation(const LevelSpec& level, double alpha) {
  return PerturbationSpec(unperturbed_energy(level), model_W(level.model), alpha);
}

double perturbed_level(const LevelSpec& level, double alpha, int order) {
  require_truncation(order);
  require_in_radius(level, alpha);
  return perturbed_energy(level_perturbation(level, alpha), 2 * order).partial_sums.back();
}

double gap_Lambda(ModelKind model, int n, double alpha, int order) {
  const LevelSpec lower(model, n);
  const LevelSpec upper(model, n + 1);
  // Check both before evaluating so the binding level is reported first.
  require_in_radius(upper, alpha);
  require_in_radius(lower, alpha);
  return perturbed_level(upper, alpha, order) - perturbed_level(lower, alpha, order);
}

double sigma_ratio(ModelKind model, int n, double alpha, int order) {
  return gap_Lambda(model, n, alpha, order) / level_gap(model, n);
}

double sigma_ratio_explicit(ModelKind model, int n, double alpha, int order) {
  require_truncation(order);
  require_in_radius(LevelSpec(model, n + 1), alpha);
  require_in_radius(LevelSpec(model, n), alpha);

  const double lo = n;
  const double hi = n + 1.0;
  double sum = 0.0;
  for (int s = 1; s <= order; ++s) {
    const double weight = series_weight(s);  // (2/s) C(2s-2, s-1)
    const double a2 = alpha * alpha;
    double bracket = 0.0;
    switch (model) {
      case ModelKind::hydrogen:
        // [(n+1)^(4s-2) - n^(4s-2)] alpha^2s
        bracket = std::pow(hi * hi * hi * hi * a2, s) / (hi * hi) - std::pow(lo * lo * lo * lo * a2, s) / (lo * lo);
        sum += sign_pow(s) * weight * bracket;
        break;
      case ModelKind::well:
        // [(n+1)^(2-4s) - n^(2-4s)] alpha^2s
        bracket = hi * hi * std::pow(a2 / (hi * hi * hi * hi), s) - lo * lo * std::pow(a2 / (lo * lo * lo * lo), s);
        sum -= sign_pow(s) * weight * bracket;
        break;
      case ModelKind::oscillator: {
        // [(2n+3)^(1-2s) - (2n+1)^(1-2s)] alpha^2s
        const double p = 2.0 * lo + 3.0;
        const double q = 2.0 * lo + 1.0;
        bracket = p * std::pow(a2 / (p * p), s) - q * std::pow(a2 / (q * q), s);
        sum -= sign_pow(s) * 0.5 * weight * bracket;
        break;
      }
    }
  }

  switch (model) {
    case ModelKind::hydrogen:
      return 1.0 + lo * lo * hi * hi / (2.0 * lo + 1.0) * sum;
    case ModelKind::well:
      return 1.0 + sum / (2.0 * lo + 1.0);
    case ModelKind::oscillator:
      return 1.0 + sum;
  }
  throw std::logic_error("unhandled model");
}

double sigma_limit(ModelKind model, int n, double alpha) {
  const double upper = closed_form_limit(level_perturbation(LevelSpec(model, n + 1), alpha));
  const double lower = closed_form_limit(level_perturbation(LevelSpec(model, n), alpha));
  return (upper - lower) / level_gap(model, n);
}

GapResult gap_result(ModelKind model, int n, double alpha, int order) {
  GapResult r;
  r.lambda = level_gap(model, n);
  r.Lambda = gap_Lambda(model, n, alpha, order);
  r.sigma = r.Lambda / r.lambda;
  r.order = order;
  r.alpha = alpha;
  return r;
}

SigmaCurve sigma_curve(ModelKind model, int n, std::span<const double> alphas, int max_order) {
  require_truncation(max_order);
  require_level(model, n);
  SigmaCurve curve;
  const LevelSpec lower(model, n);
  const LevelSpec upper(model, n + 1);
  for (const double alpha : alphas) {
    const auto s_lo = radius_status(level_perturbation(lower, alpha));
    const auto s_hi = radius_status(level_perturbation(upper, alpha));
    if (s_lo == RadiusStatus::outside || s_hi == RadiusStatus::outside) {
      curve.rejected.push_back(alpha);
      continue;
    }
    if (s_lo == RadiusStatus::boundary || s_hi == RadiusStatus::boundary) {
      curve.boundary.push_back(alpha);
    }
    // One series evaluation per level; every truncation is a prefix of it.
    const auto lo = perturbed_energy(level_perturbation(lower, alpha), 2 * max_order);
    const auto hi = perturbed_energy(level_perturbation(upper, alpha), 2 * max_order);
    const double lambda = level_gap(model, n);
    for (int s = 1; s <= max_order; ++s) {
      const auto idx = static_cast<std::size_t>(2 * s - 1);
      curve.rows.push_back({alpha, s, (hi.partial_sums[idx] - lo.partial_sums[idx]) / lambda});
    }
  }
  return curve;
}

}  // namespace qpert
