#include "intervox/directed.hpp"

#include <cmath>

#include "intervox/errors.hpp"
#include "intervox/format.hpp"

namespace intervox {

NotAnInterval::NotAnInterval(double a, double b)
    : Error("diag(" + format_shortest(a) + "," + format_shortest(b) +
            ") has first entry greater than last entry; no interval solution"),
      a_(a),
      b_(b) {}

DirectedInterval::DirectedInterval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidInterval("directed interval entries must be finite");
  }
}

DirectedInterval phi(const Interval& x) { return DirectedInterval(x.lo(), x.hi()); }

Interval phi_inv(const DirectedInterval& m) {
  if (m.a() > m.b()) throw NotAnInterval(m.a(), m.b());
  return Interval(m.a(), m.b());
}

DirectedInterval conjugate(const DirectedInterval& m) { return DirectedInterval(m.b(), m.a()); }

DirectedInterval dmat_add(const DirectedInterval& x, const DirectedInterval& y) {
  return DirectedInterval(x.a() + y.a(), x.b() + y.b());
}

DirectedInterval dmat_sub(const DirectedInterval& x, const DirectedInterval& y) {
  return DirectedInterval(x.a() - y.a(), x.b() - y.b());
}

DirectedInterval dmat_mul(const DirectedInterval& x, const DirectedInterval& y) {
  return DirectedInterval(x.a() * y.a(), x.b() * y.b());
}

DirectedInterval dmat_scale(double k, const DirectedInterval& x) {
  return DirectedInterval(k * x.a(), k * x.b());
}

std::string to_string(const DirectedInterval& m) {
  return "diag(" + format_shortest(m.a()) + "," + format_shortest(m.b()) + ")";
}

PseudoComplex::PseudoComplex(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw InvalidInterval("pseudo-complex coefficients must be finite");
  }
}

PseudoComplex to_pseudo(const Interval& x) { return PseudoComplex(x.lo(), x.hi() - x.lo()); }

PseudoComplex pseudo_add(const PseudoComplex& x, const PseudoComplex& y) {
  return PseudoComplex(x.p() + y.p(), x.q() + y.q());
}

// (p1 + q1 h)(p2 + q2 h) = p1 p2 + (p1 q2 + p2 q1 + q1 q2) h, using h^2 = h.
PseudoComplex pseudo_mul(const PseudoComplex& x, const PseudoComplex& y) {
  return PseudoComplex(x.p() * y.p(), x.p() * y.q() + y.p() * x.q() + x.q() * y.q());
}

DirectedInterval to_diagonal(const PseudoComplex& x) {
  return DirectedInterval(x.p(), x.p() + x.q());
}

PseudoComplex from_diagonal(const DirectedInterval& m) {
  return PseudoComplex(m.a(), m.b() - m.a());
}

std::string to_string(const PseudoComplex& x) {
  const double q = x.q() == 0.0 ? 0.0 : x.q();
  if (std::signbit(q)) return format_shortest(x.p()) + "-" + format_shortest(-q) + "h";
  return format_shortest(x.p()) + "+" + format_shortest(q) + "h";
}

}  // namespace intervox
