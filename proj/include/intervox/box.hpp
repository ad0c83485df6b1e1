#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intervox/directed.hpp"
#include "intervox/errors.hpp"
#include "intervox/interval.hpp"

namespace intervox {

// Ordered list of uniquely named coordinates. Order is significant: it is the
// coordinate order used by evaluators and by bisection tie-breaks.
template <class T>
class BasicBox {
 public:
  BasicBox() = default;
  BasicBox(std::initializer_list<std::pair<std::string, T>> vars) {
    for (const auto& [name, v] : vars) push_back(name, v);
  }

  void push_back(std::string name, T value) {
    if (name.empty()) throw Error("box variable name must be nonempty");
    if (find(name)) throw Error("duplicate box variable '" + name + "'");
    names_.push_back(std::move(name));
    values_.push_back(std::move(value));
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const T> values() const noexcept { return values_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const T& operator[](std::size_t i) const { return values_.at(i); }
  const T& at(const std::string& name) const {
    if (auto i = find(name)) return values_[*i];
    throw UnboundVariable(name);
  }

  std::optional<std::size_t> find(const std::string& name) const noexcept {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  /// Copy with coordinate i replaced.
  BasicBox with(std::size_t i, T value) const {
    BasicBox out = *this;
    out.values_.at(i) = std::move(value);
    return out;
  }

  friend bool operator==(const BasicBox&, const BasicBox&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<T> values_;
};

using Box = BasicBox<Interval>;
using DirectedBox = BasicBox<DirectedInterval>;

/// Every coordinate of inner is a subset of the same-named one in outer.
bool subset_of(const Box& inner, const Box& outer);

std::string to_string(const Box& box);

}  // namespace intervox
