#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "langcount/polynomial.hpp"
#include "langcount/rational.hpp"

namespace langcount {

inline void mul_by_int(Rational& r, long k) { r *= k; }
inline void div_by_int(Rational& r, long k) { r /= k; }

/// Power series truncated at a fixed order N: coefficient n of z^n lives at
/// index n, n = 0..N. All arithmetic is exact; operations on series of
/// different orders truncate to the shorter one, so pipeline stages compose
/// without explicit re-truncation.
///
/// Values are immutable once built (mutation happens only through the
/// builder-style coefficient setter before first use) and freely shareable
/// across threads.
template <class Coeff>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(check_order(order) + 1) {}
  explicit PowerSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient vector");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int n) const { return coeffs_[n]; }
  void set(int n, Coeff c) { coeffs_[n] = std::move(c); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    return order;
  }
  std::vector<Coeff> coeffs_;
};

template <class Coeff>
PowerSeries<Coeff> add(const PowerSeries<Coeff>& a, const PowerSeries<Coeff>& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries<Coeff> out(n);
  for (int i = 0; i <= n; ++i) out.set(i, a[i] + b[i]);
  return out;
}

template <class Coeff>
PowerSeries<Coeff> sub(const PowerSeries<Coeff>& a, const PowerSeries<Coeff>& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries<Coeff> out(n);
  for (int i = 0; i <= n; ++i) out.set(i, a[i] - b[i]);
  return out;
}

/// Cauchy product, plain O(N^2) convolution. Zero coefficients of the
/// sparser operand are skipped, which makes products of many mostly-zero
/// factors (the power-set construction) cheap without a sparse type.
template <class Coeff>
PowerSeries<Coeff> mul(const PowerSeries<Coeff>& a, const PowerSeries<Coeff>& b) {
  const int n = std::min(a.order(), b.order());
  const auto nonzero = [n](const PowerSeries<Coeff>& s) {
    std::vector<int> idx;
    for (int i = 0; i <= n; ++i)
      if (!(s[i] == Coeff{})) idx.push_back(i);
    return idx;
  };
  const std::vector<int> ia = nonzero(a);
  const std::vector<int> ib = nonzero(b);
  std::vector<Coeff> c(n + 1);
  if (ia.size() <= ib.size()) {
    for (int i : ia)
      for (int j : ib) {
        if (i + j > n) break;
        c[i + j] += a[i] * b[j];
      }
  } else {
    for (int j : ib)
      for (int i : ia) {
        if (i + j > n) break;
        c[i + j] += a[i] * b[j];
      }
  }
  return PowerSeries<Coeff>(std::move(c));
}

/// Multiplicative unit of the coefficient ring, deduced per instantiation.
inline Rational unit_coeff(const PowerSeries<Rational>&) { return Rational(1); }
inline Polynomial<Rational> unit_coeff(const PowerSeries<Polynomial<Rational>>&) {
  return Polynomial<Rational>::monomial(Rational(1), 0);
}

/// exp of a series with zero constant term, via the first-order recurrence
/// e_0 = 1, n e_n = sum_{k=1..n} k a_k e_{n-k}. Exact: no transcendental
/// scalar ever appears, the result stays in the coefficient ring.
template <class Coeff>
PowerSeries<Coeff> exp(const PowerSeries<Coeff>& a) {
  if (!(a[0] == Coeff{}))
    throw std::invalid_argument("series exp: nonzero constant term");
  const int n = a.order();
  PowerSeries<Coeff> e(n);
  e.set(0, unit_coeff(a));
  std::vector<Coeff> ka(n + 1);  // k * a_k
  for (int k = 1; k <= n; ++k) {
    ka[k] = a[k];
    mul_by_int(ka[k], k);
  }
  for (int i = 1; i <= n; ++i) {
    Coeff s{};
    for (int k = 1; k <= i; ++k) {
      if (ka[k] == Coeff{}) continue;
      s += ka[k] * e[i - k];
    }
    div_by_int(s, i);
    e.set(i, std::move(s));
  }
  return e;
}

/// log of a series with constant term 1; inverse of exp at equal order.
template <class Coeff>
PowerSeries<Coeff> log(const PowerSeries<Coeff>& a) {
  if (!(a[0] == unit_coeff(a)))
    throw std::invalid_argument("series log: constant term is not 1");
  const int n = a.order();
  PowerSeries<Coeff> b(n);
  // n a_n = sum_{k=1..n} k b_k a_{n-k}, solved for b_n with a_0 = 1.
  for (int i = 1; i <= n; ++i) {
    Coeff s = a[i];
    mul_by_int(s, i);
    for (int k = 1; k < i; ++k) {
      Coeff kb = b[k];
      mul_by_int(kb, k);
      s -= kb * a[i - k];
    }
    div_by_int(s, i);
    b.set(i, std::move(s));
  }
  return b;
}

/// Exact truncated series over the rationals: the universal carrier for all
/// generating-function work.
using TruncatedSeries = PowerSeries<Rational>;

/// Series of u-polynomials: carrier for the bivariate F(z, u).
using BivariateSeries = PowerSeries<Polynomial<Rational>>;

TruncatedSeries constant_series(const Rational& c, int order);

/// (1 + z^step)^exponent truncated at `order`: sum_j C(exponent, j) z^{step j}.
/// The exponent may vastly exceed the order (it is m^l in the power-set
/// product), so binomials are evaluated as falling-factorial products.
TruncatedSeries binomial_power(const BigInt& exponent, int step, int order);

/// Same expansion with each chosen subset marked by u: sum_j C(exponent, j)
/// u^j z^{step j}.
BivariateSeries binomial_power_marked(const BigInt& exponent, int step, int order);

/// The exponent of the finite-language ogf: sum_{k>=1} ((-1)^{k-1}/k) *
/// m z^k / (1 - m z^k), truncated at `order`. Only k <= order contributes.
/// Its z^n coefficient is the divisor sum A_n(m).
TruncatedSeries lambert_exponent(int m, int order);

/// u-marked variant (numerator m z^k u^k): exponent of the bivariate ogf.
BivariateSeries lambert_exponent_marked(int m, int order);

}  // namespace langcount
