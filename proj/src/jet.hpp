#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "intervox/expr.hpp"

namespace intervox::detail {

// Monomial bookkeeping for truncated multivariate power series in n
// variables up to a fixed total degree.
class JetSpace {
 public:
  JetSpace(std::size_t nvars, int order);

  std::size_t nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  std::span<const int> exponents(std::size_t term) const {
    return {exponents_[term].data(), nvars_};
  }
  int degree(std::size_t term) const noexcept { return degrees_[term]; }
  // Index of the product monomial, or -1 when its degree exceeds order.
  int product(std::size_t i, std::size_t j) const noexcept { return product_[i * size() + j]; }
  std::size_t unit(std::size_t var) const noexcept { return units_[var]; }

 private:
  std::size_t nvars_;
  int order_;
  std::vector<std::vector<int>> exponents_;
  std::vector<int> degrees_;
  std::vector<int> product_;
  std::vector<std::size_t> units_;
};

// Truncated Taylor polynomial in the displacements (x_i - center_i).
// coeffs[t] multiplies prod_i (x_i - center_i)^{e_i(t)}, so it equals the
// mixed partial derivative divided by the product of factorials.
struct Jet {
  std::shared_ptr<const JetSpace> space;
  std::vector<double> coeffs;
};

// Taylor coefficients of e about `center` (coordinates named by `names`).
// Throws DomainError if e is not analytic at the center.
Jet taylor_expand(const Expr& e, std::span<const std::string> names,
                  std::span<const double> center, int order);

}  // namespace intervox::detail
