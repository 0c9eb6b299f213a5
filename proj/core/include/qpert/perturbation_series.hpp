#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpert {

/// Unperturbed level E0 with the constant quaternionic perturbation j alpha W.
class PerturbationSpec {
 public:
  /// Throws std::invalid_argument for E0 == 0 or non-finite inputs.
  PerturbationSpec(double e0, std::complex<double> w, double alpha);

  double e0() const { return e0_; }
  std::complex<double> w() const { return w_; }
  double w_modulus() const { return std::abs(w_); }
  double alpha() const { return alpha_; }

  /// |alpha W|, the quantity compared against |E0| for convergence.
  double coupling() const { return std::abs(alpha_) * std::abs(w_); }

 private:
  double e0_;
  std::complex<double> w_;
  double alpha_;
};

/// Raised when a value is requested outside the convergence radius.
class RadiusError : public std::domain_error {
 public:
  explicit RadiusError(const std::string& what, std::optional<int> binding_level = std::nullopt)
      : std::domain_error(what), binding_level_(binding_level) {}

  /// Quantum number of the level whose radius was violated, when known.
  std::optional<int> binding_level() const { return binding_level_; }

 private:
  std::optional<int> binding_level_;
};

enum class RadiusStatus { inside, boundary, outside };

/// Relative slack used to classify |alpha W| == |E0| as the boundary.
inline constexpr double kBoundaryRelTol = 1e-12;

inline constexpr int kDefaultMaxOrder = 100;

RadiusStatus radius_status(const PerturbationSpec& spec);

/// True iff |alpha W| <= |E0|; the boundary itself counts as convergent.
bool is_convergent(const PerturbationSpec& spec);

/// Coefficient E_s of alpha^s from the closed formula. Odd s give exactly 0;
/// s = 2t gives (-1)^(t+1) (1/t) C(2t-2, t-1) |W|^(2t) / (2E)^(2t-1).
double correction_coefficient_closed(const PerturbationSpec& spec, int s);

/// Same coefficient from the convolution recurrence
///   2E E_2k = -sum_{t=1}^{k-1} E_2t E_2(k-t),   E_2 = |W|^2 / 2E.
/// Not thread-safe; keep one instance per thread (or per call).
class CorrectionRecurrence {
 public:
  explicit CorrectionRecurrence(const PerturbationSpec& spec);

  double coefficient(int s);

 private:
  double two_e_;
  std::vector<double> even_;  // even_[k] = E_{2k}, even_[0] unused
};

double correction_coefficient_recurrence(const PerturbationSpec& spec, int s);

/// t (2E)^(2t-1) E_2t / |W|^(2t), which is (-1)^(t+1) C(2t-2, t-1).
double normalized_coefficient(const PerturbationSpec& spec, int t);

struct SeriesEvaluation {
  double unperturbed = 0.0;
  /// terms[s-1] = alpha^s E_s for s = 1..max_order.
  std::vector<double> terms;
  /// partial_sums[s-1] = E0 + sum of terms up to alpha^s.
  std::vector<double> partial_sums;
  bool in_radius = false;
  /// Set when |alpha W| == |E0|: still convergent, but only algebraically.
  bool at_boundary = false;
  /// Last partial sum inside the radius, midpoint of the last two distinct
  /// partial sums on the boundary, NaN outside.
  double limit_estimate = 0.0;

  int max_order() const { return static_cast<int>(terms.size()); }
};

/// Partial sums of E0 [1 + sum_t (-1)^(t+1) (2/t) C(2t-2, t-1) (alpha|W| / 2E0)^(2t)]
/// through alpha^max_order. Divergent requests are evaluated and flagged.
SeriesEvaluation perturbed_energy(const PerturbationSpec& spec, int max_order = kDefaultMaxOrder);

/// sgn(E0) sqrt(E0^2 + (alpha|W|)^2), the resummed series. Throws RadiusError
/// outside the radius.
double closed_form_limit(const PerturbationSpec& spec);

/// First order s whose non-zero term is larger in magnitude than the
/// preceding non-zero term, if any.
std::optional<int> divergence_witness(const SeriesEvaluation& eval);

}  // namespace qpert
