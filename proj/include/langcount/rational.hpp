#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace langcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Natural log of a positive big integer. Values like f_2000(2) have
/// hundreds of digits, so conversion goes through the top 64 bits plus a
/// power-of-two offset instead of a (possibly overflowing) double cast.
inline double log_value(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_value: argument must be positive");
  const auto bits = boost::multiprecision::msb(x);  // floor(log2 x)
  if (bits <= 62) return std::log(static_cast<double>(x.convert_to<std::int64_t>()));
  const BigInt top = x >> (bits - 62);
  return std::log(static_cast<double>(top.convert_to<std::int64_t>())) +
         static_cast<double>(bits - 62) * std::numbers::ln2;
}

inline double log_value(const Rational& q) {
  return log_value(numerator(q)) - log_value(denominator(q));
}

/// Lossy double view of an exact rational; fine for diagnostics, never used
/// inside exact pipelines.
inline double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  const double mag = std::exp(log_value(abs(numerator(q))) - log_value(denominator(q)));
  return q < 0 ? -mag : mag;
}

/// Binomial coefficient C(M, j) as a falling-factorial product; M may be
/// astronomically larger than j (e.g. M = m^l in the power-set product).
inline BigInt binomial(const BigInt& M, unsigned j) {
  if (M < 0) throw std::domain_error("binomial: negative upper index");
  if (M < j) return 0;
  BigInt num = 1;
  for (unsigned i = 0; i < j; ++i) {
    num *= M - i;
    num /= i + 1;  // exact: a product of i+1 consecutive integers
  }
  return num;
}

}  // namespace langcount
