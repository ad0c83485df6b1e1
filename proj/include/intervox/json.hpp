#pragma once

#include <json.hpp>

#include "intervox/directed.hpp"
#include "intervox/interval.hpp"
#include "intervox/range.hpp"
#include "intervox/solver.hpp"

namespace intervox {

using json = nlohmann::json;

// Interval <-> [lo, hi]
json to_json(const Interval& x);
Interval interval_from_json(const json& j);

json to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const json& j);

// {"a": .., "b": ..}
json to_json(const DirectedInterval& m);
DirectedInterval directed_from_json(const json& j);

// {"p": .., "q": ..}
json to_json(const PseudoComplex& z);
PseudoComplex pseudo_from_json(const json& j);

// {"range": [[lo,hi],...], "exact": bool, "regions": N, "fallback": M}
json to_json(const RangeResult& r);

// {"intervals": [[lo,hi],...], "status": "...", "regions_used": N}
json to_json(const Solution& s);
Solution solution_from_json(const json& j);

/// Problem schema:
///   {"f": "a*x+b", "unknown": "x", "params": {"a": [2,3], ...},
///    "rhs": [-8,4], "inverse": "(x0-b)/a", "search": [-100,100]}
/// "inverse" may instead be a list of {"when": {"x": "+"}, "g": "..."}.
/// Throws Error on schema violations and ParseError on bad expressions.
EquationProblem problem_from_json(const json& j);
json to_json(const EquationProblem& p);

}  // namespace intervox
