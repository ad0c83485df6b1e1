#pragma once

#include <string>

#include "intervox/interval.hpp"

namespace intervox {

/// Ordered endpoint pair (a, b) with no ordering constraint, read as the
/// diagonal matrix diag(a, b). Classical intervals embed through phi();
/// pairs with a > b are the images that have no interval preimage.
class DirectedInterval {
 public:
  constexpr DirectedInterval() noexcept = default;
  /// Throws InvalidInterval if either entry is not finite.
  DirectedInterval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  /// First entry <= last entry, i.e. the pair is the image of an interval.
  bool is_proper() const noexcept { return a_ <= b_; }

  friend bool operator==(const DirectedInterval&, const DirectedInterval&) = default;

 private:
  double a_ = 0.0;
  double b_ = 0.0;
};

DirectedInterval phi(const Interval& x);

/// Throws NotAnInterval if m.a() > m.b().
Interval phi_inv(const DirectedInterval& m);

/// Swapped pair; involutive.
DirectedInterval conjugate(const DirectedInterval& m);

/// Diagonal matrix sum and product (componentwise).
DirectedInterval dmat_add(const DirectedInterval& x, const DirectedInterval& y);
DirectedInterval dmat_sub(const DirectedInterval& x, const DirectedInterval& y);
DirectedInterval dmat_mul(const DirectedInterval& x, const DirectedInterval& y);
/// Entrywise scalar multiple.
DirectedInterval dmat_scale(double k, const DirectedInterval& x);

inline DirectedInterval operator+(const DirectedInterval& x, const DirectedInterval& y) {
  return dmat_add(x, y);
}
inline DirectedInterval operator-(const DirectedInterval& x, const DirectedInterval& y) {
  return dmat_sub(x, y);
}
inline DirectedInterval operator*(const DirectedInterval& x, const DirectedInterval& y) {
  return dmat_mul(x, y);
}
inline DirectedInterval operator*(double k, const DirectedInterval& x) { return dmat_scale(k, x); }

/// "diag(a,b)"
std::string to_string(const DirectedInterval& m);

/// p + q h with h^2 = h. The ring is isomorphic to pairs under componentwise
/// operations via to_diagonal(); intervals embed as [a, b] -> a + (b - a) h.
class PseudoComplex {
 public:
  constexpr PseudoComplex() noexcept = default;
  /// Throws InvalidInterval if either coefficient is not finite.
  PseudoComplex(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  friend bool operator==(const PseudoComplex&, const PseudoComplex&) = default;

 private:
  double p_ = 0.0;
  double q_ = 0.0;
};

PseudoComplex to_pseudo(const Interval& x);
PseudoComplex pseudo_add(const PseudoComplex& x, const PseudoComplex& y);
PseudoComplex pseudo_mul(const PseudoComplex& x, const PseudoComplex& y);

/// p + q h -> diag(p, p + q).
DirectedInterval to_diagonal(const PseudoComplex& x);
/// diag(a, b) -> a + (b - a) h.
PseudoComplex from_diagonal(const DirectedInterval& m);

inline PseudoComplex operator+(const PseudoComplex& x, const PseudoComplex& y) {
  return pseudo_add(x, y);
}
inline PseudoComplex operator*(const PseudoComplex& x, const PseudoComplex& y) {
  return pseudo_mul(x, y);
}

/// "p+qh" (or "p-qh" for negative q).
std::string to_string(const PseudoComplex& x);

}  // namespace intervox
