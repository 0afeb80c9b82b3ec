#pragma once

#include <string>
#include <vector>

#include "langcount/rational.hpp"

namespace langcount {

/// phi(1/m; m): the analytic factor left after splitting the dominant
/// exp(mz/(1-mz)) singularity off the ogf. `value` carries the float
/// approximation, `tail_bound` the geometric bound on the truncation error
/// of the exponent sum at `terms_used` terms.
struct PhiValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms_used = 0;
};

enum class Regime { large_m, large_n, joint };

std::string regime_name(Regime r);

/// One asymptotic approximation of f_n(m), kept in log space: log_value =
/// log(prefactor) + growth_log with growth_log = n log m + 2 sqrt n -
/// (3/4) log n.
struct AsymptoticEstimate {
  double log_value = 0.0;
  double prefactor = 0.0;
  double growth_log = 0.0;
  Regime regime = Regime::large_n;
};

/// Contour quadrature parameters. The radius rule is fixed at
/// zhat = 1 - 1/sqrt(n); alpha only controls the central-arc diagnostic.
struct SaddleConfig {
  int quadrature_points = 1 << 14;  // >= 16, power of two
  double alpha = 0.7;               // in (2/3, 3/4)

  void validate() const;
};

/// kappa_0..kappa_N: coefficients of exp(z/(1-z)). n! kappa_n is the
/// "sets of lists" sequence used as a fixture.
std::vector<Rational> kappa(int N);

/// Independent route for the same numbers: kappa_n = sum over partitions of
/// n of 1/prod i_j!, evaluated in exact arithmetic.
Rational kappa_via_partition_sum(int n);

/// phi(1/m; m) with the number of exponent terms K chosen so the geometric
/// tail bound sum_{k>K} m^{1-k} / (1 - m^{1-K}) drops below `tolerance`.
PhiValue phi_at(int m, double tolerance = 1e-12);

/// f_n(m) / (kappa_n m^n): tends to 1 as the alphabet grows (fixed n).
double large_m_ratio(int n, int m);

/// Leading large-n term: f_n ~ phi(1/m)/(2 sqrt(e pi)) * m^n e^{2 sqrt n} / n^{3/4}.
AsymptoticEstimate leading_asymptotic(int m, int n);

/// Joint regime (m and n both large): same shape with the phi prefactor
/// replaced by 1.
AsymptoticEstimate joint_asymptotic(int m, int n);

/// log f_n(m) estimated by trapezoidal quadrature of the Cauchy integral
/// (m^n zhat^{-n} / 2pi) * integral of F(zhat e^{i theta} / m) e^{-i n theta}
/// over the full circle, integrand assembled in log space. Requires n >= 2
/// so the contour radius is positive. Throws accuracy_error if doubling the
/// grid at Q = 2^16 still moves the estimate by more than 1e-6 relative.
double saddle_contour_estimate(int m, int n, const SaddleConfig& cfg = {});

/// Diagnostic decomposition of the same quadrature: fraction of the total
/// integral carried by the central arc |theta| < n^{-alpha}.
double central_arc_fraction(int m, int n, const SaddleConfig& cfg = {});

}  // namespace langcount
