#pragma once

#include <complex>

namespace pwshift {

/// Regular spherical Bessel function j_l(z), l >= 0, z >= 0.
/// Downward (Miller) recurrence below the turning point, upward above,
/// power series near the origin.
double spherical_bessel_j(int l, double z);

/// Spherical Neumann function n_l(z), l >= 0, z > 0 (diverges at z = 0).
double spherical_bessel_n(int l, double z);

/// Derivatives via f_l' = f_{l-1} - (l+1) f_l / z, using the continuations
/// j_{-1}(z) = cos z / z and n_{-1}(z) = sin z / z.
double spherical_bessel_j_prime(int l, double z);
double spherical_bessel_n_prime(int l, double z);

/// Modified spherical Bessel function of the first kind i_l(x), x >= 0.
/// All-positive power series; used for the classically forbidden interior
/// of barrier scattering.
double modified_spherical_i(int l, double x);
double modified_spherical_i_prime(int l, double x);

/// Principal-branch log Gamma on the cut plane. Throws std::domain_error at
/// the poles (nonpositive integers). The imaginary part is continuous along
/// vertical lines Re z = l+1 >= 1.
std::complex<double> log_gamma_complex(std::complex<double> z);

/// Digamma psi(z) = Gamma'(z)/Gamma(z) by argument shift + asymptotic series.
std::complex<double> digamma(std::complex<double> z);

/// Coulomb phase shift sigma_l = Arg Gamma(l+1 + i eta), continuous in eta,
/// sigma_l(0) = 0.
double coulomb_sigma(int l, double eta_c);

/// Normalization coefficient c_l of the regular Coulomb wave.
/// c_0 = sqrt(2 pi eta / (e^{2 pi eta} - 1)), with the eta -> 0 limit 1;
/// c_l = c_0 / (2l+1)!! * prod_{s=1..l} sqrt(1 + eta^2/s^2).
/// Throws std::range_error for eta < -30 (strongly attractive regime is
/// outside the certified domain).
double coulomb_c_coefficient(int l, double eta_c);

/// Regular Coulomb radial amplitude y_l(r,k) = sqrt(2/pi) F_l(eta, rho),
/// rho = k r. Power series (extended-precision accumulation) for
/// rho <= 20 + 2l, asymptotic sine expansion beyond; each path certifies
/// its own error and falls back to the other, throwing std::range_error
/// when neither can reach 1e-9.
double coulomb_wave(int l, double eta_c, double rho);

/// d/dk of the asymptotic Coulomb phase k r - eta(k) ln(2kr) - l pi/2 +
/// sigma_l: returns r + (eta/k) { ln(2kr/e) - Re psi(l+1 + i eta) }.
double coulomb_phase_derivative(int l, double eta_at_k, double k, double r);

/// Root v0(rho) of the stationary-phase condition
///   1 + (c / v^2 rho) { ln(2 v rho / e) - Re psi(l+1 + i c/v) } = 0
/// for a repulsive coupling c = Z_t Z_p alpha > 0; v and rho dimensionless
/// (v = k/m, rho = m r). Diagnostic only: v0 -> 0+ as rho -> infinity.
double coulomb_stationary_point(int l, double coupling, double rho);

enum class RadialBasis { Free, Coulomb };

struct CoulombParams {
  double eta_c = 0.0;  // Z_t Z_p alpha / (k/m); sign = repulsive(+)/attractive(-)
  int l = 0;
};

struct RadialWaveValue {
  double value = 0.0;
  double r_times_k = 0.0;
  RadialBasis basis = RadialBasis::Free;
};

/// y_l(r,k) at rho = k r: free basis sqrt(2/pi) rho j_l(rho), Coulomb basis
/// sqrt(2/pi) F_l(eta, rho). Real for all inputs.
RadialWaveValue radial_wave(RadialBasis basis, const CoulombParams& cp, double rho);

}  // namespace pwshift
