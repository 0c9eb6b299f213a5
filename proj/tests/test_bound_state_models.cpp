#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qpert/bound_state_models.hpp"
#include "support/random.hpp"

namespace {

using qpert::LevelSpec;
using qpert::ModelKind;

constexpr ModelKind kModels[] = {ModelKind::hydrogen, ModelKind::well, ModelKind::oscillator};

// Level energy sgn(E) sqrt(E^2 + (alpha|W|)^2) written from the model data.
double exact_level(ModelKind m, int n, double alpha) {
  double e = 0.0, w = 0.0;
  switch (m) {
    case ModelKind::hydrogen: e = -1.0 / (n * n); w = 2.0; break;
    case ModelKind::well: e = double(n) * n; w = 2.0; break;
    case ModelKind::oscillator: e = n + 0.5; w = 1.0; break;
  }
  return std::copysign(std::sqrt(e * e + alpha * alpha * w * w), e);
}

double exact_sigma(ModelKind m, int n, double alpha) {
  return (exact_level(m, n + 1, alpha) - exact_level(m, n, alpha)) /
         (exact_level(m, n + 1, 0.0) - exact_level(m, n, 0.0));
}

TEST(Models, NamesAndUnits) {
  EXPECT_EQ(qpert::parse_model("hydrogen"), ModelKind::hydrogen);
  EXPECT_EQ(qpert::parse_model("well"), ModelKind::well);
  EXPECT_EQ(qpert::parse_model("oscillator"), ModelKind::oscillator);
  EXPECT_FALSE(qpert::parse_model("helium").has_value());
  for (const auto m : kModels) {
    EXPECT_EQ(qpert::parse_model(qpert::to_string(m)), m);
  }
  EXPECT_EQ(qpert::energy_unit(ModelKind::hydrogen), "Ry");
  EXPECT_EQ(qpert::energy_unit(ModelKind::well), "E_L");
  EXPECT_EQ(qpert::energy_unit(ModelKind::oscillator), "E_omega");
}

TEST(Models, QuantumNumberRange) {
  EXPECT_THROW(LevelSpec(ModelKind::hydrogen, 0), std::invalid_argument);
  EXPECT_THROW(LevelSpec(ModelKind::well, 0), std::invalid_argument);
  EXPECT_THROW(LevelSpec(ModelKind::oscillator, -1), std::invalid_argument);
  EXPECT_NO_THROW(LevelSpec(ModelKind::oscillator, 0));
}

TEST(Models, UnperturbedSpectra) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_DOUBLE_EQ(qpert::unperturbed_energy({ModelKind::hydrogen, n}), -1.0 / (n * n));
    EXPECT_DOUBLE_EQ(qpert::unperturbed_energy({ModelKind::well, n}), double(n * n));
  }
  for (int n = 0; n <= 10; ++n) {
    EXPECT_DOUBLE_EQ(qpert::unperturbed_energy({ModelKind::oscillator, n}), n + 0.5);
  }
  EXPECT_EQ(qpert::model_W(ModelKind::hydrogen), 2.0);
  EXPECT_EQ(qpert::model_W(ModelKind::well), 2.0);
  EXPECT_EQ(qpert::model_W(ModelKind::oscillator), 1.0);
}

TEST(Models, UnperturbedGapsAreLevelDifferences) {
  for (const auto m : kModels) {
    for (int n = 1; n <= 8; ++n) {
      const double diff = qpert::unperturbed_energy({m, n + 1}) - qpert::unperturbed_energy({m, n});
      EXPECT_NEAR(qpert::gap_lambda(m, n), diff, 1e-15) << qpert::to_string(m) << " n = " << n;
    }
  }
  EXPECT_DOUBLE_EQ(qpert::gap_lambda(ModelKind::hydrogen, 1), 0.75);
  EXPECT_DOUBLE_EQ(qpert::gap_lambda(ModelKind::well, 2), 5.0);
  EXPECT_DOUBLE_EQ(qpert::gap_lambda(ModelKind::oscillator, 0), 1.0);
}

TEST(Models, ConvergenceBoundsAreExact) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(qpert::alpha_max(ModelKind::hydrogen, n), 1.0 / (2.0 * n * n));
    EXPECT_EQ(qpert::alpha_max(ModelKind::well, n), n * n / 2.0);
    EXPECT_EQ(qpert::alpha_max(ModelKind::oscillator, n), n + 0.5);
  }
  EXPECT_EQ(qpert::alpha_max(ModelKind::oscillator, 0), 0.5);
}

TEST(Models, GapBoundIsTheTighterLevel) {
  EXPECT_EQ(qpert::gap_alpha_max(ModelKind::hydrogen, 1), 1.0 / 8.0);
  EXPECT_EQ(qpert::gap_alpha_max(ModelKind::hydrogen, 2), 1.0 / 18.0);
  EXPECT_EQ(qpert::gap_alpha_max(ModelKind::well, 1), 0.5);
  EXPECT_EQ(qpert::gap_alpha_max(ModelKind::well, 2), 2.0);
  EXPECT_EQ(qpert::gap_alpha_max(ModelKind::oscillator, 1), 1.5);
  EXPECT_EQ(qpert::gap_alpha_max(ModelKind::oscillator, 2), 2.5);
}

TEST(Levels, PerturbedLevelApproachesClosedForm) {
  for (const auto m : kModels) {
    const int n = qpert::min_quantum_number(m) + 1;
    const double alpha = 0.6 * qpert::alpha_max(m, n);
    const double exact = exact_level(m, n, alpha);
    EXPECT_NEAR(qpert::perturbed_level({m, n}, alpha, 60), exact, 1e-12 * std::abs(exact));
  }
}

TEST(Levels, OutOfRadiusNamesBindingLevel) {
  try {
    qpert::perturbed_level({ModelKind::well, 3}, 5.0, 10);
    FAIL() << "expected RadiusError";
  } catch (const qpert::RadiusError& e) {
    ASSERT_TRUE(e.binding_level().has_value());
    EXPECT_EQ(*e.binding_level(), 3);
  }
  // Hydrogen n = 2 binds before n = 1.
  try {
    qpert::gap_Lambda(ModelKind::hydrogen, 1, 0.2, 5);
    FAIL() << "expected RadiusError";
  } catch (const qpert::RadiusError& e) {
    EXPECT_EQ(*e.binding_level(), 2);
  }
  // Well n = 1 binds before n = 2.
  try {
    qpert::gap_Lambda(ModelKind::well, 1, 1.0, 5);
    FAIL() << "expected RadiusError";
  } catch (const qpert::RadiusError& e) {
    EXPECT_EQ(*e.binding_level(), 1);
  }
  EXPECT_THROW(qpert::perturbed_level({ModelKind::well, 1}, 0.1, 0), std::invalid_argument);
}

TEST(Sigma, HydrogenGroundGapByHand) {
  // Order one: 1 - 2 n^2 (n+1)^2 ((n+1)^2 - n^2) alpha^2 / (2n+1) = 1 - 8 alpha^2 at n = 1.
  const double alpha = 0.125;
  EXPECT_DOUBLE_EQ(qpert::sigma_ratio(ModelKind::hydrogen, 1, alpha, 1), 0.875);
  EXPECT_DOUBLE_EQ(qpert::sigma_ratio_explicit(ModelKind::hydrogen, 1, alpha, 1), 0.875);
  EXPECT_NEAR(qpert::sigma_limit(ModelKind::hydrogen, 1, alpha), exact_sigma(ModelKind::hydrogen, 1, alpha), 1e-14);
  EXPECT_NEAR(qpert::sigma_limit(ModelKind::hydrogen, 1, alpha), 0.9029638, 1e-6);
}

TEST(Sigma, ExplicitSeriesMatchesLevelDifferences) {
  for (const auto m : kModels) {
    for (int n = qpert::min_quantum_number(m); n <= 5; ++n) {
      for (const double frac : {0.1, 0.5, 0.9}) {
        const double alpha = frac * qpert::gap_alpha_max(m, n);
        for (int order = 1; order <= 25; ++order) {
          const double a = qpert::sigma_ratio(m, n, alpha, order);
          const double b = qpert::sigma_ratio_explicit(m, n, alpha, order);
          EXPECT_NEAR(a, b, 1e-11 * std::abs(a)) << qpert::to_string(m) << " n=" << n << " order=" << order;
        }
      }
    }
  }
}

TEST(Sigma, LimitMatchesClosedFormLevels) {
  for (const auto m : kModels) {
    for (int n = qpert::min_quantum_number(m); n <= 5; ++n) {
      const double alpha = 0.7 * qpert::gap_alpha_max(m, n);
      EXPECT_NEAR(qpert::sigma_limit(m, n, alpha), exact_sigma(m, n, alpha), 1e-13);
      EXPECT_NEAR(qpert::sigma_ratio(m, n, alpha, 80), exact_sigma(m, n, alpha), 1e-10);
    }
  }
}

TEST(Sigma, GapResultFields) {
  const auto g = qpert::gap_result(ModelKind::well, 2, 1.0, 30);
  EXPECT_EQ(g.lambda, 5.0);
  EXPECT_EQ(g.order, 30);
  EXPECT_EQ(g.alpha, 1.0);
  EXPECT_NEAR(g.Lambda, exact_level(ModelKind::well, 3, 1.0) - exact_level(ModelKind::well, 2, 1.0), 1e-10);
  EXPECT_DOUBLE_EQ(g.sigma, g.Lambda / g.lambda);
}

TEST(SigmaCurve, RowsRejectionsAndBoundary) {
  const std::vector<double> alphas{0.0, 2.5, 3.0, 1.0};
  const auto curve = qpert::sigma_curve(ModelKind::oscillator, 2, alphas, 6);
  ASSERT_EQ(curve.rows.size(), 18u);
  EXPECT_EQ(curve.rejected, std::vector<double>{3.0});
  EXPECT_EQ(curve.boundary, std::vector<double>{2.5});
  for (int s = 1; s <= 6; ++s) {
    EXPECT_EQ(curve.rows[static_cast<std::size_t>(s - 1)].alpha, 0.0);
    EXPECT_EQ(curve.rows[static_cast<std::size_t>(s - 1)].order, s);
    EXPECT_EQ(curve.rows[static_cast<std::size_t>(s - 1)].sigma, 1.0);
  }
  for (std::size_t i = 12; i < 18; ++i) {
    EXPECT_EQ(curve.rows[i].alpha, 1.0);
    EXPECT_DOUBLE_EQ(curve.rows[i].sigma, qpert::sigma_ratio(ModelKind::oscillator, 2, 1.0, curve.rows[i].order));
  }
}

}  // namespace
