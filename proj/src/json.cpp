#include "intervox/json.hpp"

#include "intervox/errors.hpp"

namespace intervox {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(std::string(what) + " must be a number");
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

Sign sign_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+" || s == "pos") return Sign::Pos;
    if (s == "-" || s == "neg") return Sign::Neg;
  }
  throw Error("sign must be \"+\" or \"-\"");
}

}  // namespace

json to_json(const Interval& x) { return json::array({x.lo(), x.hi()}); }

Interval interval_from_json(const json& j) {
  if (j.is_number()) return Interval(j.get<double>());
  if (!j.is_array() || j.size() != 2) throw Error("interval must be [lo, hi]");
  return Interval(number(j[0], "interval endpoint"), number(j[1], "interval endpoint"));
}

json to_json(const IntervalSet& set) {
  json out = json::array();
  for (const Interval& x : set) out.push_back(to_json(x));
  return out;
}

IntervalSet interval_set_from_json(const json& j) {
  if (!j.is_array()) throw Error("interval set must be an array of [lo, hi]");
  std::vector<Interval> parts;
  for (const json& e : j) parts.push_back(interval_from_json(e));
  return union_merge(parts);
}

json to_json(const DirectedInterval& m) { return {{"a", m.a()}, {"b", m.b()}}; }

DirectedInterval directed_from_json(const json& j) {
  return DirectedInterval(number(field(j, "a"), "a"), number(field(j, "b"), "b"));
}

json to_json(const PseudoComplex& z) { return {{"p", z.p()}, {"q", z.q()}}; }

PseudoComplex pseudo_from_json(const json& j) {
  return PseudoComplex(number(field(j, "p"), "p"), number(field(j, "q"), "q"));
}

json to_json(const RangeResult& r) {
  return {{"range", to_json(r.range)},
          {"exact", r.exact},
          {"regions", r.regions.size()},
          {"fallback", r.fallback_regions.size()}};
}

json to_json(const Solution& s) {
  return {{"intervals", to_json(s.intervals)},
          {"status", to_string(s.status)},
          {"regions_used", s.regions_used}};
}

Solution solution_from_json(const json& j) {
  Solution s;
  s.intervals = interval_set_from_json(field(j, "intervals"));
  const json& st = field(j, "status");
  if (!st.is_string()) throw Error("status must be a string");
  const auto name = st.get<std::string>();
  if (name == "Exact") {
    s.status = SolutionStatus::Exact;
  } else if (name == "NoSolution") {
    s.status = SolutionStatus::NoSolution;
  } else if (name == "PartialEnclosure") {
    s.status = SolutionStatus::PartialEnclosure;
  } else {
    throw Error("unknown status '" + name + "'");
  }
  const json& n = field(j, "regions_used");
  if (!n.is_number_unsigned()) throw Error("regions_used must be a non-negative integer");
  s.regions_used = n.get<std::size_t>();
  return s;
}

EquationProblem problem_from_json(const json& j) {
  EquationProblem p;
  const json& f = field(j, "f");
  if (!f.is_string()) throw Error("f must be an expression string");
  p.f = parse(f.get<std::string>());

  const json& unknown = field(j, "unknown");
  if (!unknown.is_string()) throw Error("unknown must be a name");
  p.unknown = unknown.get<std::string>();

  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw Error("params must map names to [lo, hi]");
    for (const auto& [name, value] : it->items()) p.params.push_back(name, interval_from_json(value));
  }
  p.rhs = interval_from_json(field(j, "rhs"));

  if (auto it = j.find("inverse"); it != j.end() && !it->is_null()) {
    if (it->is_string()) {
      p.inverses.push_back({{}, parse(it->get<std::string>())});
    } else if (it->is_array()) {
      for (const json& br : *it) {
        InverseBranch b{{}, parse(field(br, "g").get<std::string>())};
        if (auto w = br.find("when"); w != br.end()) {
          if (!w->is_object()) throw Error("when must map names to signs");
          for (const auto& [name, s] : w->items()) b.when[name] = sign_from_json(s);
        }
        p.inverses.push_back(std::move(b));
      }
    } else {
      throw Error("inverse must be an expression or a list of branches");
    }
  }
  if (auto it = j.find("search"); it != j.end() && !it->is_null()) {
    p.search = interval_from_json(*it);
  }
  return p;
}

json to_json(const EquationProblem& p) {
  json params = json::object();
  for (std::size_t i = 0; i < p.params.size(); ++i) params[p.params.name(i)] = to_json(p.params[i]);
  json out = {{"f", render(p.f)}, {"unknown", p.unknown}, {"params", params}, {"rhs", to_json(p.rhs)}};
  if (p.inverses.size() == 1 && p.inverses[0].when.empty()) {
    out["inverse"] = render(p.inverses[0].g);
  } else if (!p.inverses.empty()) {
    json branches = json::array();
    for (const InverseBranch& b : p.inverses) {
      json when = json::object();
      for (const auto& [name, s] : b.when) when[name] = to_string(s);
      branches.push_back({{"when", when}, {"g", render(b.g)}});
    }
    out["inverse"] = branches;
  }
  if (p.search) out["search"] = to_json(*p.search);
  return out;
}

}  // namespace intervox
