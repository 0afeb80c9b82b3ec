#pragma once

#include <span>
#include <vector>

#include "langcount/rational.hpp"

namespace langcount {

/// Dense polynomial in the word-count marker u, coefficients ascending by
/// u-power. Trailing zero coefficients are always trimmed, so the zero
/// polynomial has an empty coefficient vector.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T coeff, int power) {
    std::vector<T> c(power + 1);
    c[power] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  std::span<const T> coeffs() const { return coeffs_; }

  /// Coefficient of u^k (zero beyond the stored degree).
  const T& operator[](int k) const {
    static const T zero{};
    return k <= degree() ? coeffs_[k] : zero;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  template <class S>
  Polynomial& scale(const S& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  /// Sum of coefficients, i.e. the value at u = 1.
  T at_one() const {
    T s{};
    for (const auto& c : coeffs_) s += c;
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

/// Exact integer polynomial in u: the carrier of [z^n]F(z,u).
using UPolynomial = Polynomial<BigInt>;

// Scalar hooks used by the generic series code. Exact division by an
// integer only exists over the rational coefficient ring.
template <class T>
inline void mul_by_int(Polynomial<T>& p, long k) {
  p.scale(T(k));
}
inline void div_by_int(Polynomial<Rational>& p, long k) {
  p.scale(Rational(1, k));
}

}  // namespace langcount
