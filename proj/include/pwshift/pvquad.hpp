#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace pwshift {

/// Raised when panel refinement or tail extension stalls before tolerances.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_panels = 4096;
  double tail_z_start = 16.0;   // first candidate truncation point for tail integrals
  double tail_z_cap = 1048576.0;
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

/// Nodes/weights of the n-point Gauss-Legendre rule (Newton iteration on
/// P_n). Cached; safe for concurrent callers.
const GaussLegendreRule& gauss_legendre(int order);

/// Fixed-order (64-point) Gauss-Legendre panels with dyadic refinement:
/// doubles the panel count until two consecutive levels agree within
/// max(abs_tol, rel_tol * |I|). `initial_panels` seeds the first level
/// (callers with oscillatory integrands pass an oscillation-scaled count).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec, int initial_panels = 1);

/// P-integral of f over [-1,1] where f may carry a simple 1/x pole at 0.
/// The odd part integrates to zero under the symmetric limit, so this
/// evaluates int_0^1 {f(x) + f(-x)} dx; no node lands on x = 0.
double principal_value_symmetric(const std::function<double(double)>& f,
                                 const QuadratureSpec& spec, int initial_panels = 1);

/// Second-order phase-shift integral components and the certified bound on
/// the truncated z > z_max remainder of the tail term.
struct SecondOrderTerms {
  double delta_minus = 0.0;
  double delta_plus = 0.0;
  double delta_inf = 0.0;
  double tail_estimate = 0.0;
  double sum() const { return delta_minus + delta_plus + delta_inf; }
};

/// (2/pi) P-int_{-1}^{1} D(x) / (x (4 - x^2)) dx for an odd difference of
/// squared kernels D(x) = v(p, p(1+x))^2 - v(p, p(1-x))^2. The integrand is
/// even and its x = 0 singularity removable; x = 0 is never sampled.
double delta_minus(const std::function<double(double)>& kernel_sq_diff,
                   const QuadratureSpec& spec, int initial_panels = 1);

/// -(1/pi) int_{-1}^{1} S(x) / (4 - x^2) dx for the even sum of squares
/// S(x) = v(p, p(1+x))^2 + v(p, p(1-x))^2. No interior singularity.
double delta_plus(const std::function<double(double)>& kernel_sq_sum,
                  const QuadratureSpec& spec, int initial_panels = 1);

/// (2/pi) int_2^inf T(z) / (z^2 - 1) dz for T(z) = v(p, pz)^2. The upper
/// limit grows dyadically from tail_z_start until the fitted envelope bound
/// C / (2 z_max^2) drops below tolerance; that bound is reported through
/// `tail_estimate`. `osc_per_unit_z` sizes the initial panels for kernels
/// oscillating in z. Throws if decay cannot be certified by tail_z_cap.
double delta_infinity(const std::function<double(double)>& kernel_sq_tail,
                      const QuadratureSpec& spec, double* tail_estimate = nullptr,
                      double osc_per_unit_z = 0.0);

/// int_{-1}^{1} sin(kappa x)/x f(x) dx for smooth even f: a delta-sequence
/// moment converging to pi f(0) with O(1/kappa) error. Test fixture for the
/// asymptotic identities; not on any production phase-shift path.
double sinc_delta_sequence(double kappa, const std::function<double(double)>& f_even,
                           const QuadratureSpec& spec = {});

}  // namespace pwshift
