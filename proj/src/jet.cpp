#include "jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "intervox/errors.hpp"

namespace intervox::detail {

JetSpace::JetSpace(std::size_t nvars, int order) : nvars_(nvars), order_(order) {
  if (order < 0) throw Error("Taylor order must be non-negative");
  // Graded enumeration of all exponent vectors with total degree <= order.
  std::vector<int> e(nvars, 0);
  std::map<std::vector<int>, int> index;
  for (int d = 0; d <= order; ++d) {
    auto visit = [&](auto&& self, std::size_t var, int remaining) -> void {
      if (var + 1 >= nvars) {
        if (nvars == 0) {
          if (remaining != 0) return;
        } else {
          e[var] = remaining;
        }
        index.emplace(e, static_cast<int>(exponents_.size()));
        exponents_.push_back(e);
        degrees_.push_back(d);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        e[var] = k;
        self(self, var + 1, remaining - k);
      }
      e[var] = 0;
    };
    visit(visit, 0, d);
  }
  const std::size_t m = exponents_.size();
  product_.assign(m * m, -1);
  std::vector<int> sum(nvars);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (degrees_[i] + degrees_[j] > order) continue;
      for (std::size_t v = 0; v < nvars; ++v) sum[v] = exponents_[i][v] + exponents_[j][v];
      product_[i * m + j] = index.at(sum);
    }
  }
  units_.resize(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<int> u(nvars, 0);
    if (order >= 1) {
      u[v] = 1;
      units_[v] = static_cast<std::size_t>(index.at(u));
    } else {
      units_[v] = 0;
    }
  }
}

namespace {

using Coeffs = std::vector<double>;

class JetAlgebra {
 public:
  explicit JetAlgebra(const JetSpace& space) : s_(space) {}

  Coeffs constant(double c) const {
    Coeffs out(s_.size(), 0.0);
    out[0] = c;
    return out;
  }

  Coeffs variable(std::size_t var, double center) const {
    Coeffs out = constant(center);
    if (s_.order() >= 1) out[s_.unit(var)] = 1.0;
    return out;
  }

  Coeffs add(const Coeffs& a, const Coeffs& b, double sign = 1.0) const {
    Coeffs out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * b[i];
    return out;
  }

  Coeffs scale(const Coeffs& a, double k) const {
    Coeffs out(a);
    for (double& c : out) c *= k;
    return out;
  }

  Coeffs mul(const Coeffs& a, const Coeffs& b) const {
    const std::size_t m = s_.size();
    Coeffs out(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const int k = s_.product(i, j);
        if (k >= 0) out[static_cast<std::size_t>(k)] += a[i] * b[j];
      }
    }
    return out;
  }

  // sum_k weights[k] * p^k where p has a zero constant term; terms beyond
  // the order vanish identically.
  Coeffs series(const Coeffs& p, const std::vector<double>& weights) const {
    Coeffs out = constant(weights.empty() ? 0.0 : weights[0]);
    Coeffs power = constant(1.0);
    for (std::size_t k = 1; k < weights.size(); ++k) {
      power = mul(power, p);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[k] * power[i];
    }
    return out;
  }

  // Splits a = c + p with p having no constant term.
  std::pair<double, Coeffs> split(const Coeffs& a) const {
    Coeffs p(a);
    const double c = p[0];
    p[0] = 0.0;
    return {c, p};
  }

  std::size_t terms() const { return static_cast<std::size_t>(s_.order()) + 1; }

  Coeffs exp(const Coeffs& a) const {
    auto [c, p] = split(a);
    std::vector<double> w(terms());
    double f = std::exp(c);
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] = f;
      f /= static_cast<double>(k + 1);
    }
    return series(p, w);
  }

  Coeffs ln(const Coeffs& a) const {
    auto [c, p] = split(a);
    if (!(c > 0.0)) throw DomainError("ln is not analytic at the expansion center");
    std::vector<double> w(terms());
    w[0] = std::log(c);
    for (std::size_t k = 1; k < w.size(); ++k) {
      w[k] = ((k % 2) ? 1.0 : -1.0) / (static_cast<double>(k) * std::pow(c, static_cast<double>(k)));
    }
    return series(p, w);
  }

  // sin(c + p) and cos(c + p) from the angle-addition formulas.
  Coeffs sin_cos(const Coeffs& a, bool want_sin) const {
    auto [c, p] = split(a);
    std::vector<double> ws(terms(), 0.0), wc(terms(), 0.0);
    double fact = 1.0;
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (k) fact *= static_cast<double>(k);
      const double sign = ((k / 2) % 2) ? -1.0 : 1.0;
      if (k % 2) {
        ws[k] = sign / fact;
      } else {
        wc[k] = sign / fact;
      }
    }
    const Coeffs sp = series(p, ws);
    const Coeffs cp = series(p, wc);
    const double sc = std::sin(c), cc = std::cos(c);
    if (want_sin) return add(scale(cp, sc), scale(sp, cc));
    return add(scale(cp, cc), scale(sp, sc), -1.0);
  }

  Coeffs sqrt(const Coeffs& a) const {
    auto [c, p] = split(a);
    if (!(c > 0.0)) throw DomainError("sqrt is not analytic at the expansion center");
    std::vector<double> w(terms());
    double binom = 1.0;  // binom(1/2, k)
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) binom *= (0.5 - static_cast<double>(k - 1)) / static_cast<double>(k);
      w[k] = std::sqrt(c) * binom / std::pow(c, static_cast<double>(k));
    }
    return series(p, w);
  }

  Coeffs recip(const Coeffs& a) const {
    auto [c, p] = split(a);
    if (c == 0.0) throw DomainError("reciprocal is not analytic at the expansion center");
    std::vector<double> w(terms());
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] = ((k % 2) ? -1.0 : 1.0) / std::pow(c, static_cast<double>(k + 1));
    }
    return series(p, w);
  }

  Coeffs pow(const Coeffs& a, int k) const {
    if (k < 0) return recip(pow(a, -k));
    Coeffs result = constant(1.0);
    Coeffs base = a;
    unsigned n = static_cast<unsigned>(k);
    while (n) {
      if (n & 1u) result = mul(result, base);
      n >>= 1u;
      if (n) base = mul(base, base);
    }
    return result;
  }

 private:
  const JetSpace& s_;
};

}  // namespace

Jet taylor_expand(const Expr& e, std::span<const std::string> names,
                  std::span<const double> center, int order) {
  if (names.size() != center.size()) throw Error("center has the wrong number of coordinates");
  auto space = std::make_shared<const JetSpace>(names.size(), order);
  const JetAlgebra alg(*space);
  auto expand = [&](auto&& self, const Expr& n) -> Coeffs {
    switch (n.op()) {
      case Op::Const: return alg.constant(n.value());
      case Op::Var: {
        auto it = std::find(names.begin(), names.end(), n.name());
        if (it == names.end()) throw UnboundVariable(n.name());
        const auto v = static_cast<std::size_t>(it - names.begin());
        return alg.variable(v, center[v]);
      }
      case Op::Neg: return alg.scale(self(self, n.arg(0)), -1.0);
      case Op::Add: return alg.add(self(self, n.lhs()), self(self, n.rhs()));
      case Op::Sub: return alg.add(self(self, n.lhs()), self(self, n.rhs()), -1.0);
      case Op::Mul: return alg.mul(self(self, n.lhs()), self(self, n.rhs()));
      case Op::Div: return alg.mul(self(self, n.lhs()), alg.recip(self(self, n.rhs())));
      case Op::PowInt: return alg.pow(self(self, n.arg(0)), n.exponent());
      case Op::Exp: return alg.exp(self(self, n.arg(0)));
      case Op::Ln: return alg.ln(self(self, n.arg(0)));
      case Op::Sin: return alg.sin_cos(self(self, n.arg(0)), true);
      case Op::Cos: return alg.sin_cos(self(self, n.arg(0)), false);
      case Op::Sqrt: return alg.sqrt(self(self, n.arg(0)));
    }
    throw Error("unknown expression node");
  };
  Jet jet{space, expand(expand, e)};
  return jet;
}

}  // namespace intervox::detail
