#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "pwshift/pvquad.hpp"
#include "pwshift/specfun.hpp"

namespace pwshift {

inline constexpr double kHbarC = 197.3269804;            // MeV fm
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kBarnConversion = 389.0;          // dsigma[barn] = 389/p[MeV]^2 * f

/// Piecewise-constant radial potential: V(r) = V0 on [0, R), 0 beyond.
/// Barrier for V0 > 0, well for V0 < 0. lambda = V0 R is the dimensionless
/// coupling.
struct SphericalStep {
  double v0_mev = 0.0;
  double radius_fm = 0.0;
  double lambda() const { return v0_mev * radius_fm / kHbarC; }
};

struct CoulombPotential {
  int z_target = 0;
  int z_projectile = 0;
  int charge_product() const { return z_target * z_projectile; }
};

/// Coulomb potential plus a short-range perturbation that vanishes
/// identically beyond its radius.
struct CompositePotential {
  CoulombPotential coulomb;
  SphericalStep short_range;
};

using PotentialSpec = std::variant<SphericalStep, CoulombPotential, CompositePotential>;

/// General admissible short-range radial profile V(r) [MeV], r in fm:
/// singularity at the origin milder than r^-2, decay faster than 1/r,
/// negligible beyond support_fm.
struct RadialProfile {
  std::function<double(double)> v_of_r_mev;
  double support_fm = 0.0;
};

/// Derived dimensionless scenario parameters (natural units via hbar*c).
struct ScenarioParams {
  double reduced_mass_mev = 0.0;
  double p_mev = 0.0;
  double radius_fm = 0.0;
  double kappa = 0.0;        // p R
  double lambda_plus = 0.0;  // V0 R
  double eta_plus = 0.0;     // lambda / (p/mu)
  double eta_coulomb = 0.0;  // Z_t Z_p alpha / (p/mu)
  int z_t = 0;
  int z_p = 0;
};

struct Masses {
  double m_target_mev = 0.0;
  double m_projectile_mev = 0.0;
};

double reduced_mass(const Masses& m);

ScenarioParams scenario_parameters(const Masses& masses, double p_mev, const PotentialSpec& spec);
ScenarioParams scenario_parameters(double reduced_mass_mev, double p_mev, const PotentialSpec& spec);

/// Free-basis matrix element V_l(k1,k2) = int y_l(r,k1) V(r) y_l(r,k2) dr.
/// Spherical steps use the closed form (with the removable x = 0 limit by
/// Richardson extrapolation); the pure Coulomb kind is rejected: its
/// diagonal element grows logarithmically without bound, so no free-basis
/// value exists.
double free_matrix_element(const PotentialSpec& spec, int l, double k1_mev, double k2_mev);

/// Quadrature fallback for general admissible radial profiles; support is
/// trimmed where |V(r)| r falls below tolerance.
double free_matrix_element(const RadialProfile& profile, int l, double k1_mev, double k2_mev,
                           const QuadratureSpec& spec = {});

/// Coulomb-basis matrix element of the short-range part, normalized:
/// (pi/lambda+) int y_l^C(r,k1) V+(r) y_l^C(r,k2) dr, with eta evaluated at
/// each momentum. Requires k > 0; momenta below 1e-6 max(k1,k2) are clipped
/// to that floor. Independent of lambda+ (the prefactor cancels), except
/// lambda+ = 0 returns exactly 0.
double coulomb_basis_matrix_element(const CompositePotential& pot, int l, double k1_mev,
                                    double k2_mev, double reduced_mass_mev,
                                    const QuadratureSpec& spec = {});

/// Normalized kernel v_l (free) or script-V_l (Coulomb basis) at fixed l:
/// the sole input to the phase-shift formulas. Immutable after construction;
/// evaluation is pure and symmetric in (k1, k2).
class MatrixElementKernel {
 public:
  static MatrixElementKernel free_basis(const SphericalStep& step, int l);
  static MatrixElementKernel coulomb_basis(const CompositePotential& pot, int l,
                                           double reduced_mass_mev, QuadratureSpec spec = {});

  double operator()(double k1_mev, double k2_mev) const;
  RadialBasis basis() const { return basis_; }
  int l() const { return l_; }

 private:
  MatrixElementKernel() = default;
  RadialBasis basis_ = RadialBasis::Free;
  int l_ = 0;
  SphericalStep step_{};
  CompositePotential composite_{};
  double reduced_mass_mev_ = 0.0;
  QuadratureSpec quad_{};
};

namespace detail {
/// Closed-form v_l(k1,k2) for the step in dimensionless arguments
/// kap_i = k_i R. `raw` skips the small-|x| Richardson branch (oracle use).
double step_kernel_v(int l, double kap1, double kap2);
double step_kernel_v_raw(int l, double kap1, double kap2);
}  // namespace detail

}  // namespace pwshift
