#include "intervox/matrix_fn.hpp"

#include "intervox/errors.hpp"
#include "jet.hpp"

namespace intervox {

DirectedInterval apply_fn(const Expr& f, const DirectedBox& args) {
  std::vector<double> first, second;
  first.reserve(args.size());
  second.reserve(args.size());
  for (const DirectedInterval& m : args.values()) {
    first.push_back(m.a());
    second.push_back(m.b());
  }
  const PointEvaluator eval(f, args.names());
  return DirectedInterval(eval(first), eval(second));
}

DirectedInterval taylor_apply(const Expr& f, const DirectedBox& args,
                              const std::optional<std::vector<double>>& center, int order) {
  std::vector<double> c;
  if (center) {
    c = *center;
  } else {
    for (const DirectedInterval& m : args.values()) c.push_back(0.5 * (m.a() + m.b()));
  }
  if (c.size() != args.size()) throw Error("center has the wrong number of coordinates");

  const detail::Jet jet = detail::taylor_expand(f, args.names(), c, order);
  const detail::JetSpace& space = *jet.space;

  std::vector<DirectedInterval> shift;
  for (std::size_t i = 0; i < args.size(); ++i) {
    shift.emplace_back(args[i].a() - c[i], args[i].b() - c[i]);
  }

  DirectedInterval sum(0.0, 0.0);
  for (std::size_t t = 0; t < space.size(); ++t) {
    const double coeff = jet.coeffs[t];
    if (coeff == 0.0) continue;
    DirectedInterval term(1.0, 1.0);
    const auto exps = space.exponents(t);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int k = 0; k < exps[i]; ++k) term = term * shift[i];
    }
    sum = sum + coeff * term;
  }
  return sum;
}

}  // namespace intervox
