#include "intervox/solver.hpp"

#include <algorithm>
#include <cmath>

#include "intervox/directed.hpp"
#include "intervox/errors.hpp"
#include "intervox/format.hpp"
#include "intervox/matrix_fn.hpp"

namespace intervox {

const char* to_string(SolutionStatus s) {
  switch (s) {
    case SolutionStatus::Exact: return "Exact";
    case SolutionStatus::NoSolution: return "NoSolution";
    case SolutionStatus::PartialEnclosure: return "PartialEnclosure";
  }
  return "NoSolution";
}

namespace {

std::string fmt(const Interval& x) { return format_interval(x, 12); }

std::string fmt(const DirectedInterval& m) {
  return "diag(" + format_significant(m.a(), 12) + "," + format_significant(m.b(), 12) + ")";
}

double scale_of(const Interval& x) { return std::max(1.0, x.mag()); }

struct LinearCase {
  const char* label;
  DirectedInterval raw;
  bool proper;
  bool sign_ok;
};

// Linear pieces are checked against A*X+B directly; products of exact
// endpoints only differ from C by rounding in the quotient.
bool satisfies(const Interval& a, const Interval& b, const Interval& c, const Interval& x) {
  const Interval lhs = a * x + b;
  const double tol = 1e-9 * std::max({scale_of(c), scale_of(lhs)});
  return std::fabs(lhs.lo() - c.lo()) <= tol && std::fabs(lhs.hi() - c.hi()) <= tol;
}

}  // namespace

Solution solve_linear(const Interval& a, const Interval& b, const Interval& c) {
  if (a.contains_zero()) throw DivisorContainsZero("0 in the coefficient " + fmt(a));

  const DirectedInterval rhs = phi(c) - phi(b);
  const bool a_neg = a.hi() < 0.0;
  auto unswitch = [&](DirectedInterval m) {
    return a_neg ? DirectedInterval(m.b(), m.a()) : m;
  };

  std::vector<LinearCase> cases;
  {
    const DirectedInterval ah = phi(a);
    const DirectedInterval x = unswitch({rhs.a() / ah.a(), rhs.b() / ah.b()});
    cases.push_back({"x>=0", x, x.a() <= x.b(), x.a() >= 0.0});
  }
  {
    const DirectedInterval ah = conjugate(phi(a));
    const DirectedInterval x = unswitch({rhs.a() / ah.a(), rhs.b() / ah.b()});
    cases.push_back({"x<=0", x, x.a() <= x.b(), x.b() <= 0.0});
  }
  {
    // Both endpoints of X meet the coefficient endpoint of largest magnitude.
    const double m = std::fabs(a.lo()) > std::fabs(a.hi()) ? a.lo() : a.hi();
    DirectedInterval x(rhs.a() / m, rhs.b() / m);
    if (m < 0.0) x = DirectedInterval(x.b(), x.a());
    cases.push_back({"x straddles 0", x, x.a() <= x.b(), x.a() < 0.0 && x.b() > 0.0});
  }

  Solution out;
  std::vector<Interval> pieces;
  for (const LinearCase& k : cases) {
    std::string line = std::string(k.label) + ": ";
    if (!k.proper) {
      line += "rejected (first entry > last entry: " + fmt(k.raw) + ")";
    } else {
      const Interval x = phi_inv(k.raw);
      if (!k.sign_ok) {
        line += "rejected (sign assumption violated: " + fmt(x) + ")";
      } else if (!satisfies(a, b, c, x)) {
        line += "rejected (A*X+B != C for " + fmt(x) + ")";
      } else {
        line += "accepted " + fmt(x);
        pieces.push_back(x);
        ++out.regions_used;
      }
    }
    out.diagnostics.push_back(std::move(line));
  }
  out.intervals = union_merge(pieces);
  out.status = out.intervals.empty() ? SolutionStatus::NoSolution : SolutionStatus::Exact;
  return out;
}

EquationProblem with_linear_inverse(EquationProblem p) {
  const Expr dfdx = simplify(differentiate(p.f, p.unknown));
  if (dfdx.is_constant(0.0)) {
    throw MissingInverse("f does not depend on '" + p.unknown + "'");
  }
  if (variables(dfdx).count(p.unknown)) {
    throw MissingInverse("f is not linear in '" + p.unknown + "'; supply an inverse");
  }
  const Expr offset = simplify(substitute(p.f, p.unknown, Expr::constant(0.0)));
  p.inverses = {InverseBranch{{}, simplify((Expr::variable(kRhsVar) - offset) / dfdx)}};
  return p;
}

namespace {

const InverseBranch& pick_branch(const EquationProblem& p, const Region& region) {
  for (const InverseBranch& br : p.inverses) {
    const bool match = std::all_of(br.when.begin(), br.when.end(), [&](const auto& kv) {
      auto i = region.box.find(kv.first);
      return i && region.signs[*i] == kv.second;
    });
    if (match) return br;
  }
  std::string pattern;
  for (std::size_t i = 0; i < region.box.size(); ++i) {
    if (i) pattern += ",";
    pattern += region.box.name(i) + ":" + to_string(region.signs[i]);
  }
  throw MissingInverse("no inverse branch matches the sign pattern (" + pattern + ")");
}

void check_problem(const EquationProblem& p) {
  if (p.unknown.empty()) throw Error("unknown name must be nonempty");
  if (p.unknown == kRhsVar) throw Error("'x0' is reserved for the right-hand side");
  if (p.params.find(p.unknown)) throw Error("unknown '" + p.unknown + "' is also a parameter");
  if (p.params.find(kRhsVar)) throw Error("'x0' is reserved for the right-hand side");
  for (const std::string& v : variables(p.f)) {
    if (v != p.unknown && !p.params.find(v)) throw UnboundVariable(v);
  }
  for (const InverseBranch& br : p.inverses) {
    for (const std::string& v : variables(br.g)) {
      if (v != kRhsVar && !p.params.find(v)) {
        throw Error("inverse may only use parameters and x0, found '" + v + "'");
      }
    }
  }
}

}  // namespace

std::optional<Interval> solve_with_inverse(const EquationProblem& p, const Region& region,
                                           double tol) {
  if (!region.certified()) throw UncertifiedRegion("region has an uncertified partial sign");
  const auto ui = region.box.find(p.unknown);
  if (!ui) throw UnboundVariable(p.unknown);

  const EquationProblem* problem = &p;
  EquationProblem synthesized;
  if (p.inverses.empty()) {
    synthesized = with_linear_inverse(p);
    problem = &synthesized;
  }
  const InverseBranch& branch = pick_branch(*problem, region);

  const DirectedBox switched = switch_box(region);
  DirectedBox args;
  for (std::size_t i = 0; i < switched.size(); ++i) {
    if (i != *ui) args.push_back(switched.name(i), switched[i]);
  }
  args.push_back(kRhsVar, DirectedInterval(p.rhs.lo(), p.rhs.hi()));

  DirectedInterval x = apply_fn(branch.g, args);
  if (region.signs[*ui] == Sign::Neg) x = DirectedInterval(x.b(), x.a());

  const Interval& dom = region.box[*ui];
  const double slack = tol * scale_of(dom);
  if (x.a() > x.b()) {
    if (x.a() - x.b() > slack) return std::nullopt;
    x = DirectedInterval(x.b(), x.a());
  }
  const Interval sol = phi_inv(x);
  if (sol.lo() < dom.lo() - slack || sol.hi() > dom.hi() + slack) return std::nullopt;
  const double lo = std::clamp(sol.lo(), dom.lo(), dom.hi());
  const double hi = std::clamp(sol.hi(), dom.lo(), dom.hi());
  return Interval(lo, hi);
}

bool verify(const EquationProblem& p, const IntervalSet& candidate, double tol,
            const RangeConfig& cfg) {
  if (candidate.empty()) return false;
  try {
    std::vector<Interval> images;
    for (const Interval& x : candidate) {
      Box box;
      box.push_back(p.unknown, x);
      for (std::size_t i = 0; i < p.params.size(); ++i) box.push_back(p.params.name(i), p.params[i]);
      for (const Interval& part : range(p.f, box, cfg).range) images.push_back(part);
    }
    return hausdorff(union_merge(images), p.rhs) <= tol;
  } catch (const Error&) {
    return false;
  }
}

Solution solve(const EquationProblem& input, const SolveConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw Error("tol must be positive");
  check_problem(input);

  Solution out;
  EquationProblem p = input.inverses.empty() ? with_linear_inverse(input) : input;
  Interval search;
  if (p.search) {
    search = *p.search;
  } else {
    search = Interval(-kDefaultSearchHalfWidth, kDefaultSearchHalfWidth);
    out.diagnostics.push_back("warning: no search interval given, using " + fmt(search));
  }

  Box box;
  box.push_back(p.unknown, search);
  for (std::size_t i = 0; i < p.params.size(); ++i) box.push_back(p.params.name(i), p.params[i]);

  RangeConfig rc = cfg.range;
  rc.split_only = {p.unknown};
  const Decomposition d = decompose(p.f, box, rc);

  std::vector<Interval> pieces;
  for (const Region& region : d.regions) {
    const Interval image = range_over_region(p.f, region);
    const auto x0 = intersect(image, p.rhs);
    const std::string where = p.unknown + " in " + fmt(region.box[0]);
    if (!x0) continue;

    EquationProblem sub = p;
    sub.rhs = *x0;
    const auto piece = solve_with_inverse(sub, region, cfg.tol);
    if (piece) {
      pieces.push_back(*piece);
      ++out.regions_used;
      out.diagnostics.push_back(where + ": " + fmt(*x0) + " -> " + fmt(*piece));
    } else {
      out.diagnostics.push_back(where + ": " + fmt(*x0) + " -> no solution");
    }
  }

  bool partial = false;
  for (const Box& rest : d.residue) {
    bool meets = true;
    try {
      meets = intersect(eval_interval(p.f, rest), p.rhs).has_value();
    } catch (const DomainError&) {
    }
    if (!meets) continue;
    partial = true;
    pieces.push_back(rest[0]);
    out.diagnostics.push_back(p.unknown + " in " + fmt(rest[0]) + ": uncertified, kept whole");
  }

  IntervalSet sol = union_merge(pieces);
  if (sol.empty()) {
    out.status = SolutionStatus::NoSolution;
    return out;
  }
  if (partial) {
    out.intervals = std::move(sol);
    out.status = SolutionStatus::PartialEnclosure;
    return out;
  }
  if (!verify(p, sol, cfg.tol, cfg.range)) {
    out.diagnostics.push_back("candidate " + to_string(sol) + " failed verification");
    out.status = SolutionStatus::NoSolution;
    out.regions_used = 0;
    return out;
  }

  // A point piece that touches only a boundary of its region adds nothing to
  // f's image; drop it when the rest still verifies.
  for (std::size_t i = sol.size(); i-- > 0;) {
    if (!sol[i].is_degenerate() || sol.size() == 1) continue;
    std::vector<Interval> rest;
    for (std::size_t j = 0; j < sol.size(); ++j) {
      if (j != i) rest.push_back(sol[j]);
    }
    IntervalSet trimmed = union_merge(rest);
    if (verify(p, trimmed, cfg.tol, cfg.range)) {
      out.diagnostics.push_back("dropped isolated point " + fmt(sol[i]));
      sol = std::move(trimmed);
    }
  }
  out.intervals = std::move(sol);
  out.status = SolutionStatus::Exact;
  return out;
}

}  // namespace intervox
