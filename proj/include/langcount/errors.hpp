#pragma once

#include <stdexcept>
#include <string>

namespace langcount {

/// Exhaustive enumeration was requested above its configured size cap.
class enumeration_cap_error : public std::invalid_argument {
 public:
  enumeration_cap_error(int n, int cap)
      : std::invalid_argument("enumeration refused: n=" + std::to_string(n) +
                              " exceeds the enumeration cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

/// A numerical routine could not reach its required accuracy (quadrature
/// failed to converge, tail bound above the allowed threshold).
class accuracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold by theorem was violated at runtime;
/// always an implementation bug, never bad input.
class internal_inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace langcount
