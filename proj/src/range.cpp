#include "intervox/range.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "intervox/directed.hpp"
#include "intervox/errors.hpp"
#include "intervox/matrix_fn.hpp"

namespace intervox {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Pos: return "+";
    case Sign::Neg: return "-";
    case Sign::Unknown: return "?";
  }
  return "?";
}

bool Region::certified() const noexcept {
  return std::none_of(signs.begin(), signs.end(), [](Sign s) { return s == Sign::Unknown; });
}

Sign Region::sign(const std::string& var) const {
  auto i = box.find(var);
  if (!i) throw UnboundVariable(var);
  return signs.at(*i);
}

Sign sign_of_partial(const Expr& df, const Box& box) {
  const Interval d = eval_interval(df, box);
  if (d.lo() > 0.0) return Sign::Pos;
  if (d.hi() < 0.0) return Sign::Neg;
  return Sign::Unknown;
}

namespace {

constexpr double kShrink = 1e-9;

Box shrink(const Box& box) {
  Box out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Interval& x = box[i];
    const double margin = kShrink * x.width();
    out.push_back(box.name(i), Interval(x.lo() + margin, x.hi() - margin));
  }
  return out;
}

}  // namespace

Sign certify_sign(const Expr& df, const Box& box, std::size_t var) {
  if (box[var].is_degenerate()) return Sign::Pos;
  std::optional<Interval> d;
  try {
    d = eval_interval(df, box);
  } catch (const DomainError&) {
  }
  if (d) {
    if (d->lo() > 0.0) return Sign::Pos;
    if (d->hi() < 0.0) return Sign::Neg;
    if (d->lo() == 0.0 && d->hi() == 0.0) return Sign::Pos;
    if (d->lo() < 0.0 && d->hi() > 0.0) return Sign::Unknown;
  }
  // Zero touched at the boundary, or the closed box is outside the partial's
  // domain: retry on the interior.
  const Interval inner = eval_interval(df, shrink(box));
  if (inner.lo() > 0.0 && (!d || d->lo() == 0.0)) return Sign::Pos;
  if (inner.hi() < 0.0 && (!d || d->hi() == 0.0)) return Sign::Neg;
  return Sign::Unknown;
}

Decomposition decompose(const Expr& f, const Box& box, const RangeConfig& cfg) {
  if (cfg.max_depth < 0) throw Error("max_depth must be non-negative");
  if (!(cfg.min_width > 0.0)) throw Error("min_width must be positive");

  const std::size_t n = box.size();
  for (const std::string& v : variables(f)) {
    if (!box.find(v)) throw UnboundVariable(v);
  }
  std::vector<bool> splittable(n, cfg.split_only.empty());
  for (const std::string& v : cfg.split_only) {
    if (auto i = box.find(v)) splittable[*i] = true;
  }

  std::vector<Expr> partials;
  std::vector<std::vector<std::size_t>> partial_vars(n);
  for (std::size_t i = 0; i < n; ++i) {
    partials.push_back(differentiate(f, box.name(i)));
    for (const std::string& v : variables(partials.back())) {
      if (auto j = box.find(v)) partial_vars[i].push_back(*j);
    }
  }

  Decomposition out;
  struct Item {
    Box box;
    int depth;
  };
  std::vector<Item> stack{{box, 0}};
  std::size_t examined = 0;
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (examined >= cfg.max_boxes) {
      out.residue.push_back(std::move(item.box));
      continue;
    }
    ++examined;

    Region region{item.box, std::vector<Sign>(n, Sign::Unknown)};
    for (std::size_t i = 0; i < n; ++i) region.signs[i] = certify_sign(partials[i], item.box, i);
    if (region.certified()) {
      out.regions.push_back(std::move(region));
      continue;
    }

    // Split along a coordinate that an uncertified partial depends on.
    std::set<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      if (region.signs[i] != Sign::Unknown) continue;
      candidates.insert(partial_vars[i].begin(), partial_vars[i].end());
    }
    auto pick = [&](const std::set<std::size_t>& from) -> std::optional<std::size_t> {
      std::optional<std::size_t> best;
      for (std::size_t j : from) {
        const double w = item.box[j].width();
        if (!splittable[j] || !(w > cfg.min_width)) continue;
        if (!best || w > item.box[*best].width()) best = j;
      }
      return best;
    };
    const auto var = pick(candidates);
    if (!var || item.depth >= cfg.max_depth) {
      out.residue.push_back(std::move(item.box));
      continue;
    }
    const Interval& x = item.box[*var];
    const double m = x.mid();
    stack.push_back({item.box.with(*var, Interval(m, x.hi())), item.depth + 1});
    stack.push_back({item.box.with(*var, Interval(x.lo(), m)), item.depth + 1});
  }
  return out;
}

DirectedBox switch_box(const Region& region) {
  if (region.signs.size() != region.box.size()) {
    throw UncertifiedRegion("region signs do not match its box");
  }
  DirectedBox out;
  for (std::size_t i = 0; i < region.box.size(); ++i) {
    const Interval& x = region.box[i];
    switch (region.signs[i]) {
      case Sign::Pos: out.push_back(region.box.name(i), phi(x)); break;
      case Sign::Neg: out.push_back(region.box.name(i), conjugate(phi(x))); break;
      case Sign::Unknown:
        throw UncertifiedRegion("partial derivative sign for '" + region.box.name(i) +
                                "' is not certified");
    }
  }
  return out;
}

Interval range_over_region(const Expr& f, const Region& region) {
  const DirectedInterval corners = apply_fn(f, switch_box(region));
  if (corners.a() > corners.b()) {
    // Both corners agree up to rounding only when f is flat along the box.
    const double scale = std::max({std::fabs(corners.a()), std::fabs(corners.b()), 1.0});
    if (corners.a() - corners.b() <= 1e-12 * scale) return Interval(corners.b(), corners.a());
  }
  return phi_inv(corners);
}

RangeResult range(const Expr& f, const Box& box, const RangeConfig& cfg) {
  Decomposition d = decompose(f, box, cfg);
  std::vector<Interval> parts;
  parts.reserve(d.regions.size() + d.residue.size());
  for (const Region& r : d.regions) parts.push_back(range_over_region(f, r));
  for (const Box& b : d.residue) parts.push_back(eval_interval(f, b));

  RangeResult out;
  out.range = union_merge(parts);
  out.exact = d.residue.empty();
  out.regions = std::move(d.regions);
  out.fallback_regions = std::move(d.residue);
  return out;
}

}  // namespace intervox
