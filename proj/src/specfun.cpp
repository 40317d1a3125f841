#include "pwshift/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pwshift {

namespace {

constexpr double kPi = 3.14159265358979323846;

double bessel_j_series(int l, double z) {
  // j_l(z) = z^l/(2l+1)!! sum_m (-z^2/2)^m / (m! (2l+3)(2l+5)...(2l+2m+1))
  double t = 1.0;
  for (int s = 1; s <= l; ++s) t *= z / (2 * s + 1);
  double sum = t;
  const double z2h = -0.5 * z * z;
  for (int m = 1; m < 200; ++m) {
    t *= z2h / (m * (2.0 * l + 2.0 * m + 1.0));
    sum += t;
    if (std::abs(t) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j_upward(int l, double z) {
  double jm1 = std::sin(z) / z;
  if (l == 0) return jm1;
  double j0 = jm1 / z - std::cos(z) / z;
  for (int k = 1; k < l; ++k) {
    const double j1 = (2 * k + 1) / z * j0 - jm1;
    jm1 = j0;
    j0 = j1;
  }
  return j0;
}

double bessel_j_miller(int l, double z) {
  // Downward recurrence from an index high enough that the started solution
  // has converged onto the minimal one, normalized at the bottom against
  // whichever of j_0, j_1 is away from a zero.
  const int start = l + 14 + static_cast<int>(std::ceil(std::sqrt(40.0 * (l + 1)) + z));
  double fp1 = 0.0;
  double f = std::numeric_limits<double>::min() * 1e16;
  double target = 0.0;
  for (int k = start; k >= 0; --k) {
    const double fm1 = (2 * k + 3) / z * f - fp1;
    fp1 = f;
    f = fm1;
    if (k == l) target = f;
    if (std::abs(f) > 1e250) {
      f *= 1e-250;
      fp1 *= 1e-250;
      target *= 1e-250;
    }
  }
  const double s = std::sin(z);
  // j_0 and j_1 share no zeros; normalize against whichever is away from one
  if (std::abs(s) > 0.1) return target * (s / z) / f;
  const double j1 = s / (z * z) - std::cos(z) / z;
  return target * j1 / fp1;
}

bool is_nonpositive_integer(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

double spherical_bessel_j(int l, double z) {
  if (l < 0) throw std::domain_error("spherical_bessel_j: l must be nonnegative");
  if (z < 0.0) throw std::domain_error("spherical_bessel_j: z must be nonnegative");
  if (z == 0.0) return l == 0 ? 1.0 : 0.0;
  if (z * z < 0.5 * (2 * l + 3)) return bessel_j_series(l, z);
  if (z >= l) return bessel_j_upward(l, z);
  return bessel_j_miller(l, z);
}

double spherical_bessel_n(int l, double z) {
  if (l < 0) throw std::domain_error("spherical_bessel_n: l must be nonnegative");
  if (z <= 0.0) throw std::domain_error("spherical_bessel_n: divergent at z <= 0");
  double nm1 = -std::cos(z) / z;
  if (l == 0) return nm1;
  double n0 = nm1 / z - std::sin(z) / z;
  for (int k = 1; k < l; ++k) {
    const double n1 = (2 * k + 1) / z * n0 - nm1;
    nm1 = n0;
    n0 = n1;
  }
  return n0;
}

double spherical_bessel_j_prime(int l, double z) {
  if (z == 0.0) return l == 1 ? 1.0 / 3.0 : 0.0;
  const double below = l == 0 ? std::cos(z) / z : spherical_bessel_j(l - 1, z);
  return below - (l + 1) / z * spherical_bessel_j(l, z);
}

double spherical_bessel_n_prime(int l, double z) {
  const double below = l == 0 ? std::sin(z) / z : spherical_bessel_n(l - 1, z);
  return below - (l + 1) / z * spherical_bessel_n(l, z);
}

double modified_spherical_i(int l, double x) {
  if (l < 0) throw std::domain_error("modified_spherical_i: l must be nonnegative");
  if (x < 0.0) throw std::domain_error("modified_spherical_i: x must be nonnegative");
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  // all-positive series, no cancellation
  double t = 1.0;
  for (int s = 1; s <= l; ++s) t *= x / (2 * s + 1);
  double sum = t;
  const double x2h = 0.5 * x * x;
  for (int m = 1; m < 400; ++m) {
    t *= x2h / (m * (2.0 * l + 2.0 * m + 1.0));
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  return sum;
}

double modified_spherical_i_prime(int l, double x) {
  if (x == 0.0) return l == 1 ? 1.0 / 3.0 : 0.0;
  const double below = l == 0 ? std::cosh(x) / x : modified_spherical_i(l - 1, x);
  return below - (l + 1) / x * modified_spherical_i(l, x);
}

std::complex<double> log_gamma_complex(std::complex<double> z) {
  using cd = std::complex<double>;
  if (is_nonpositive_integer(z)) {
    throw std::domain_error("log_gamma_complex: pole at nonpositive integer " +
                            std::to_string(z.real()));
  }
  if (z.imag() < 0.0) return std::conj(log_gamma_complex(std::conj(z)));
  if (z.real() < 0.5) {
    // reflection through log sin(pi z), kept single-valued by splitting
    // z = n + eps with 0 <= Re eps < 1 (Kolbig); asymptotic form for large
    // Im z where sin would overflow
    cd log_sin;
    if (z.imag() > 110.0) {
      log_sin = cd(0.0, -kPi) * z + cd(-std::log(2.0), kPi / 2);
    } else {
      const double n = std::floor(z.real());
      const cd eps = z - n;
      log_sin = std::log(std::sin(kPi * eps)) - cd(0.0, kPi) * n;
    }
    return std::log(cd(kPi)) - log_sin - log_gamma_complex(1.0 - z);
  }
  static const double c[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                              771.32342877765313,   -176.61502916214059, 12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const cd zm1 = z - 1.0;
  cd s = c[0];
  for (int k = 1; k < 9; ++k) s += c[k] / (zm1 + static_cast<double>(k));
  const cd t = zm1 + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(s);
}

std::complex<double> digamma(std::complex<double> z) {
  using cd = std::complex<double>;
  if (is_nonpositive_integer(z)) {
    throw std::domain_error("digamma: pole at nonpositive integer");
  }
  cd acc = 0.0;
  cd w = z;
  while (w.real() < 8.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  // asymptotic series with Bernoulli coefficients B_2..B_14
  static const double b[7] = {1.0 / 6,   -1.0 / 30,    1.0 / 42, -1.0 / 30,
                              5.0 / 66, -691.0 / 2730, 7.0 / 6};
  const cd inv = 1.0 / w;
  const cd inv2 = inv * inv;
  cd sum = std::log(w) - 0.5 * inv;
  cd p = inv2;
  for (int n = 0; n < 7; ++n) {
    sum -= b[n] / (2.0 * (n + 1)) * p;
    p *= inv2;
  }
  return sum + acc;
}

double coulomb_sigma(int l, double eta_c) {
  if (l < 0) throw std::domain_error("coulomb_sigma: l must be nonnegative");
  if (eta_c == 0.0) return 0.0;
  return log_gamma_complex({l + 1.0, eta_c}).imag();
}

double coulomb_c_coefficient(int l, double eta_c) {
  if (l < 0) throw std::domain_error("coulomb_c_coefficient: l must be nonnegative");
  if (eta_c < -30.0) {
    throw std::range_error("coulomb_c_coefficient: eta < -30 outside certified domain");
  }
  const double x = 2.0 * kPi * eta_c;
  double c;
  if (std::abs(x) < 1e-5) {
    // x/(e^x - 1) = 1 - x/2 + x^2/12 - x^4/720 + ...
    c = std::sqrt(1.0 - x / 2 + x * x / 12);
  } else if (x > 36.0) {
    // x/(e^x-1) ~ x e^{-x}; goes through exp/log to dodge overflow,
    // underflows to an exact 0 for very strong repulsion
    c = std::exp(0.5 * (std::log(x) - x));
  } else {
    c = std::sqrt(x / std::expm1(x));
  }
  for (int s = 1; s <= l; ++s) {
    c *= std::sqrt(1.0 + (eta_c / s) * (eta_c / s)) / (2 * s + 1);
  }
  return c;
}

namespace {

// Regular Coulomb amplitude F_l by the power series
//   F = c_l rho^{l+1} sum a_n rho^n,
//   a_0 = 1, a_1 = eta/(l+1), n(n+2l+1) a_n = 2 eta a_{n-1} - a_{n-2},
// accumulated in extended precision with cancellation tracking.
bool coulomb_f_series(int l, double eta, double rho, double* out) {
  const double cl = coulomb_c_coefficient(l, eta);
  long double a_nm2 = 1.0L;
  long double a_nm1 = static_cast<long double>(eta) / (l + 1);
  const long double r = rho;
  long double rn = r;
  long double sum = a_nm2 + a_nm1 * rn;
  long double maxterm = std::max(std::abs(a_nm2), std::abs(a_nm1 * rn));
  for (int n = 2; n < 2000; ++n) {
    const long double a_n =
        (2.0L * eta * a_nm1 - a_nm2) / (static_cast<long double>(n) * (n + 2 * l + 1));
    rn *= r;
    const long double t = a_n * rn;
    sum += t;
    if (std::abs(t) > maxterm) maxterm = std::abs(t);
    if (!std::isfinite(static_cast<double>(sum))) return false;
    if (std::abs(t) < 1e-21L * std::abs(sum) && n > 8) break;
    a_nm2 = a_nm1;
    a_nm1 = a_n;
  }
  double prefac = cl;
  for (int s = 0; s <= l; ++s) prefac *= rho;
  // certify the cancellation-scaled rounding error against the O(1) envelope
  // of F, not against the (possibly tiny) value near a zero
  const double abs_err = prefac * static_cast<double>(maxterm) * 1.1e-19;
  if (!(abs_err < 1e-10)) return false;
  *out = prefac * static_cast<double>(sum);
  return true;
}

// Asymptotic sine expansion with 1/rho coefficient recurrences; valid well
// beyond the turning point, certified by term decay.
bool coulomb_f_asymptotic(int l, double eta, double rho, double* out) {
  const double sigma = coulomb_sigma(l, eta);
  const double theta = rho - eta * std::log(2.0 * rho) - l * kPi / 2 + sigma;
  double f = 1.0, g = 0.0;
  double fk = 1.0, gk = 0.0;
  double prev = 1.0;
  double smallest = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double lam = (2 * k + 1) * eta / ((2 * k + 2) * rho);
    const double mu = (l * (l + 1.0) - k * (k + 1.0) + eta * eta) / ((2 * k + 2) * rho);
    const double fk1 = lam * fk - mu * gk;
    const double gk1 = lam * gk + mu * fk;
    fk = fk1;
    gk = gk1;
    const double t = std::max(std::abs(fk), std::abs(gk));
    if (t >= prev && k > 2) break;  // divergent tail reached
    f += fk;
    g += gk;
    prev = t;
    smallest = t;
    if (t < 1e-17) break;
  }
  if (smallest > 1e-11) return false;
  *out = g * std::cos(theta) + f * std::sin(theta);
  return true;
}

}  // namespace

double coulomb_wave(int l, double eta_c, double rho) {
  if (l < 0) throw std::domain_error("coulomb_wave: l must be nonnegative");
  if (rho < 0.0) throw std::domain_error("coulomb_wave: rho must be nonnegative");
  if (rho == 0.0) return 0.0;
  const double sqrt_2_pi = std::sqrt(2.0 / kPi);
  const double rho_switch = 20.0 + 2.0 * l;
  double value = 0.0;
  if (rho <= rho_switch) {
    if (coulomb_f_series(l, eta_c, rho, &value)) return sqrt_2_pi * value;
    if (coulomb_f_asymptotic(l, eta_c, rho, &value)) return sqrt_2_pi * value;
  } else {
    if (coulomb_f_asymptotic(l, eta_c, rho, &value)) return sqrt_2_pi * value;
    if (coulomb_f_series(l, eta_c, rho, &value)) return sqrt_2_pi * value;
  }
  throw std::range_error("coulomb_wave: cannot certify 1e-9 accuracy at l=" + std::to_string(l) +
                         " eta=" + std::to_string(eta_c) + " rho=" + std::to_string(rho));
}

double coulomb_phase_derivative(int l, double eta_at_k, double k, double r) {
  if (k <= 0.0 || r <= 0.0) {
    throw std::domain_error("coulomb_phase_derivative: k and r must be positive");
  }
  if (eta_at_k == 0.0) return r;
  const double re_psi = digamma({l + 1.0, eta_at_k}).real();
  return r + eta_at_k / k * (std::log(2.0 * k * r) - 1.0 - re_psi);
}

double coulomb_stationary_point(int l, double coupling, double rho) {
  if (coupling <= 0.0) {
    throw std::domain_error("coulomb_stationary_point: repulsive coupling required");
  }
  if (rho <= 0.0) throw std::domain_error("coulomb_stationary_point: rho must be positive");
  const auto g = [&](double v) {
    const double re_psi = digamma({l + 1.0, coupling / v}).real();
    return 1.0 + coupling / (v * v * rho) * (std::log(2.0 * v * rho) - 1.0 - re_psi);
  };
  double hi = 1.0;
  while (g(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e12) throw std::range_error("coulomb_stationary_point: no bracket above");
  }
  double lo = hi;
  do {
    lo *= 0.5;
    if (lo < 1e-300) throw std::range_error("coulomb_stationary_point: no bracket below");
  } while (g(lo) > 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
    if (hi - lo < 1e-14 * hi) break;
  }
  return 0.5 * (lo + hi);
}

RadialWaveValue radial_wave(RadialBasis basis, const CoulombParams& cp, double rho) {
  RadialWaveValue out;
  out.basis = basis;
  out.r_times_k = rho;
  if (basis == RadialBasis::Free) {
    out.value = std::sqrt(2.0 / kPi) * rho * spherical_bessel_j(cp.l, rho);
  } else {
    out.value = coulomb_wave(cp.l, cp.eta_c, rho);
  }
  return out;
}

}  // namespace pwshift
