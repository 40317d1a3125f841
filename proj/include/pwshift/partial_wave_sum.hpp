#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pwshift {

/// Coefficients of two Legendre series accumulated in one pass over l.
/// All four arrays share the same length (l_max + 1).
struct PartialWaveCoeffs {
  std::vector<double> re_a, im_a;
  std::vector<double> re_b, im_b;
  std::size_t terms() const { return re_a.size(); }
};

/// For each abscissa x[i] in [-1,1], accumulates
///   sa[i] = sum_l a_l P_l(x[i]),  sb[i] = sum_l b_l P_l(x[i])
/// by the three-term P_l recurrence with compensated (Kahan) summation.
using PartialWaveSumFn = void (*)(const PartialWaveCoeffs& coeffs, const double* x,
                                  std::size_t n, std::complex<double>* sa,
                                  std::complex<double>* sb);

void partial_wave_sum_scalar(const PartialWaveCoeffs& coeffs, const double* x, std::size_t n,
                             std::complex<double>* sa, std::complex<double>* sb);

/// Best variant for this CPU, chosen once at first use (AVX2+FMA on x86-64,
/// NEON on aarch64, scalar otherwise). All variants are equivalence-tested
/// against the scalar reference.
PartialWaveSumFn partial_wave_sum();

/// Name of the dispatched variant: "scalar", "avx2" or "neon".
const char* partial_wave_sum_backend();

}  // namespace pwshift
