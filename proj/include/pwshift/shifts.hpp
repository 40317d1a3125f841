#pragma once

#include <optional>
#include <vector>

#include "pwshift/potential.hpp"
#include "pwshift/pvquad.hpp"

namespace pwshift {

struct ScatteringScenario {
  ScenarioParams params;
  PotentialSpec potential;
};

/// First-order phase shift -eta * v_l(p,p).
double first_order_shift(const MatrixElementKernel& kernel, double p_mev, double eta);

/// Second-order phase shift eta^2 (Delta_- + Delta_+ + Delta_inf), with the
/// component breakdown reported through `terms` when non-null.
double second_order_shift(const MatrixElementKernel& kernel, double p_mev, double eta,
                          const QuadratureSpec& spec, SecondOrderTerms* terms = nullptr);

/// Exact spherical barrier/well phase shift, dimensionless form:
/// delta = Arg(A_l - i B_l) with interior momentum kappa' = sqrt(kappa^2 -
/// 2 eta kappa). For barriers with 2 eta > kappa the interior is classically
/// forbidden and the combinations continue through modified Bessel
/// functions, staying real. Result in (-pi, pi].
double exact_step_shift(int l, double kappa, double eta);

/// Momentum/mass wrapper: kappa = p R, eta = V0 R / (p / mass).
double exact_step_shift(const SphericalStep& well, int l, double p_mev, double mass_mev);

/// |(approx - exact)/exact|; throws std::domain_error at exact = 0.
double relative_error(double approx, double exact);

struct PhaseShiftRow {
  int l = 0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double sigma = 0.0;  // Coulomb phase shift; zero in the free basis
  double total = 0.0;  // sigma + delta1 + delta2
  SecondOrderTerms second_order{};
  std::optional<double> exact_nuclear;  // well-only oracle, step potentials only
};

struct PhaseShiftTable {
  std::vector<PhaseShiftRow> rows;
  ScenarioParams scenario{};
  RadialBasis basis = RadialBasis::Free;
  int l_max() const { return rows.empty() ? -1 : rows.back().l; }
};

/// Per-l shifts for l = 0..l_max. l_max < 0 selects the default: the
/// smallest l with |delta1| < 1e-4, capped at 25. Component failures are
/// rethrown with the failing l identified.
PhaseShiftTable phase_shift_table(const ScatteringScenario& scenario, int l_max,
                                  const QuadratureSpec& spec);

}  // namespace pwshift
