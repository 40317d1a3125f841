#pragma once

#include <vector>

#include "pwshift/shifts.hpp"

namespace pwshift {

/// Legendre polynomial P_l(x) by upward recurrence, |x| <= 1.
double legendre_p(int l, double x);

/// Gaussian wavepacket momentum-width ratio epsilon = sigma_p / p.
struct WavepacketSpec {
  double epsilon = 1e-3;
};

struct CrossSectionCurve {
  std::vector<double> theta;           // radians, in (0, pi]
  std::vector<double> dsigma_natural;  // MeV^-2
  std::vector<double> dsigma_barns;
  int l_max_used = 0;
  double truncation_residual = 0.0;
};

/// n points geometrically spaced on [lo, hi].
std::vector<double> geometric_theta_grid(double lo, double hi, int n);

/// Wavepacket-regularized Coulomb + nuclear differential cross section
///   (1/4p^2) | sum_l (2l+1) e^{-2 eps^2 (l+1/2)^2} e^{2i sigma_l}
///                    e^{2i delta_l} P_l(cos theta) |^2,
/// evaluated with the sum split via e^{2i delta} = 1 + 2i e^{i delta}
/// sin(delta) into a pure-Coulomb part and a nuclear correction, added
/// before the modulus squared (evaluating the product form directly loses
/// the nuclear contribution to rounding). The Gaussian factor truncates l;
/// nuclear shifts beyond the table's l_max are taken as zero.
CrossSectionCurve composite_cross_section(const PhaseShiftTable& table, const WavepacketSpec& wp,
                                          const std::vector<double>& theta_grid);

/// Short-range-only cross section from exact shifts:
///   (1/p^2) | sum_{l<=l_max} (2l+1) e^{i delta_l} sin(delta_l) P_l |^2.
/// Excludes the narrow forward wavepacket peak by construction.
CrossSectionCurve nuclear_only_cross_section(const PhaseShiftTable& exact_shifts, double p_mev,
                                             int l_max, const std::vector<double>& theta_grid);

/// Forward wavepacket peak (1/16 p^2 eps^4) e^{-theta^2 / 4 eps^2}, MeV^-2.
double forward_peak(double p_mev, const WavepacketSpec& wp, double theta);

/// Rutherford reference dsigma/dOmega[barn] = (389/p^2) eta^2 / (4 sin^4(theta/2)).
CrossSectionCurve rutherford_reference(double p_mev, double eta_c,
                                       const std::vector<double>& theta_grid);

}  // namespace pwshift
