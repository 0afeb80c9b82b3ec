#pragma once

#include <vector>

#include "langcount/polynomial.hpp"
#include "langcount/rational.hpp"

namespace langcount {

/// Exact distribution of W_n, the number of words in a uniformly random
/// language of total size n: weights[w] counts the languages with exactly
/// w words, total = f_n(m) = sum of weights.
struct WordCountPMF {
  int m = 0;
  int n = 0;
  std::vector<BigInt> weights;
  BigInt total = 0;

  Rational probability(int w) const {
    if (w < 0 || w >= static_cast<int>(weights.size())) return Rational(0);
    return Rational(weights[w], total);
  }
};

/// Gaussian-limit scaling constants a_n = h_n'(1), b_n = sqrt(h_n'(1) +
/// h_n''(1)), where h_n(u) = 2(sqrt u - 1) sqrt n + (1/4) log u +
/// log(phi(1/m, u)/phi(1/m)). The u-derivatives of log phi at u = 1 enter
/// as the alternating sums d1 = sum_{k>=2} (-1)^{k-1} m^{1-k}/(1-m^{1-k})
/// and d2 = sum_{k>=2} (-1)^{k-1} (k-1) m^{1-k}/(1-m^{1-k}), each carried
/// with a geometric tail bound.
struct ScalingConstants {
  double a_n = 0.0;
  double b_n = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d1_tail = 0.0;
  double d2_tail = 0.0;
};

/// Float-valued PMF for n beyond the exact-mode envelope. Probabilities are
/// long-double products of exact binomials; max_rel_error is a running
/// componentwise bound on the accumulated rounding error.
struct FloatPMF {
  int m = 0;
  int n = 0;
  std::vector<double> probabilities;
  double max_rel_error = 0.0;
};

/// [z^n] F(z, u): exact integer polynomial in u, computed by the u-marked
/// power-set product prod_l (1 + u z^l)^{m^l}. Evaluating at u = 1 gives
/// f_n(m).
UPolynomial bivariate_coefficient(int m, int n);

/// All of [z^0..z^N] F(z, u) in one pass (the product is incremental in l,
/// so a full table costs no more than the single coefficient).
std::vector<UPolynomial> bivariate_table(int m, int N);

/// Cross-check route: exp of the u-marked Lambert exponent, evaluated over
/// rational u-polynomials and reduced to integers. Slower; used to validate
/// the product route.
UPolynomial bivariate_coefficient_via_exp(int m, int n);

WordCountPMF pmf(int m, int n);

/// First/second factorial-moment extraction from the exact u-polynomial.
Rational mean_words(int m, int n);
Rational var_words(int m, int n);

/// Independent mean route: [z^n] of F(z) * sum_k (-1)^{k-1} m z^k/(1-m z^k),
/// divided by f_n. Must agree exactly with mean_words.
Rational mean_words_via_gf(int m, int n);

/// Largest word count achievable in a language of total size n over m
/// symbols (greedy: take all shortest words first).
int max_word_count(int m, int n);

/// Throws accuracy_error if the exponent-sum tail bounds cannot be pushed
/// below 1e-9 (they are geometric, so this only guards degenerate input).
ScalingConstants scaling_constants(int m, int n);

/// Kolmogorov distance between (W_n - a_n)/b_n under the exact PMF and the
/// standard normal. No continuity correction.
double normal_compare(int m, int n);

/// Same distance evaluated on an already-computed PMF (lets a caller reuse
/// one bivariate table for a whole n-grid).
double normal_compare(const WordCountPMF& dist);

FloatPMF pmf_float(int m, int n);

}  // namespace langcount
