#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "langcount/errors.hpp"
#include "langcount/rational.hpp"

namespace langcount {

/// f_n(m) counts finite languages (sets of distinct words) over an
/// m-symbol alphabet whose word lengths sum to n. Four independent routes
/// compute it; their exact agreement is the core correctness gate.
enum class Route { gf, partitions, product, enumeration };

std::string route_name(Route r);

/// A computed prefix f_0..f_N for one alphabet size, tagged with the route
/// that produced it.
struct CountTable {
  int m = 0;
  std::vector<BigInt> values;  // values[n] = f_n(m)
  Route route = Route::gf;

  int max_n() const { return static_cast<int>(values.size()) - 1; }
};

/// A partition of n in multiplicity form: multiplicities[j-1] is the number
/// of parts equal to j, so sum_j j * multiplicities[j-1] = n.
struct Partition {
  std::vector<int> multiplicities;
};

/// Streams every partition of n exactly once, in ascending lexicographic
/// order of the multiplicity vector (i_1, ..., i_n). The span passed to the
/// callback is owned by the iterator and must not be retained.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& fn);

/// Materialized variant for small n.
std::vector<Partition> partitions(int n);

/// Divisor sums A_j(m) = sum_{d | j} (-1)^{d-1} m^{j/d} / d for j = 1..N,
/// returned with index j (index 0 unused, set to 0). These are the exponent
/// coefficients of the ogf and the weights of the partition closed form.
std::vector<Rational> a_coefficients(int m, int N);

/// Closed form: f_n(m) = sum over partitions of n of prod_j A_j^{i_j}/i_j!.
/// The rational accumulator must reduce to an integer; anything else throws
/// internal_inconsistency_error. Cost grows with p(n): meant for n <= ~60.
BigInt f_via_partitions(int m, int n);

/// Coefficients of exp(lambert_exponent): the generating-function route,
/// and the fast path for large N.
CountTable f_via_gf(int m, int N);

/// Power-set construction: prod_{l=1..N} (1 + z^l)^{m^l} truncated at N.
/// Independent of the gf route; for m = 1 it degenerates to counting
/// partitions into distinct parts.
CountTable f_via_product(int m, int N);

inline constexpr int kDefaultEnumerationCap = 10;
inline constexpr int kLiteralEnumerationCap = 6;

/// Exhaustive route: choose, for each word length l, a subset of the m^l
/// available words so the lengths sum to n. Evaluated as an exact
/// convolution of per-length subset counts C(m^l, j); for n up to
/// kLiteralEnumerationCap the count is re-derived by literally generating
/// every word set and cross-checked. Refuses n above `cap`.
BigInt f_via_enumeration(int m, int n, int cap = kDefaultEnumerationCap);

/// Literal word-set generation, bucketed by number of words: entry w counts
/// the languages of total size n with exactly w words. Exponential cost;
/// intended for n <= ~8 as an oracle for both counting and distribution.
std::vector<BigInt> enumerate_word_histogram(int m, int n);

}  // namespace langcount
