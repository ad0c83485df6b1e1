#include "intervox/cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "intervox/errors.hpp"
#include "intervox/expr.hpp"
#include "intervox/format.hpp"
#include "intervox/json.hpp"
#include "intervox/plot.hpp"
#include "intervox/range.hpp"
#include "intervox/solver.hpp"

namespace intervox {

namespace {

constexpr int kDigits = 12;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("malformed interval '" + std::string(whole) + "'");
  }
  return v;
}

struct Binding {
  std::string name;
  Interval value;
};

Binding parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error("expected name=[lo,hi], got '" + std::string(text) + "'");
  }
  return {std::string(trim(text.substr(0, eq))), parse_interval_arg(text.substr(eq + 1))};
}

// "EXPR" or "x+,a-:EXPR"
InverseBranch parse_inverse(std::string_view text) {
  InverseBranch br;
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view cond = text.substr(0, colon);
    while (!cond.empty()) {
      const auto comma = cond.find(',');
      std::string_view item = trim(cond.substr(0, comma));
      cond = comma == std::string_view::npos ? std::string_view{} : cond.substr(comma + 1);
      if (item.size() < 2 || (item.back() != '+' && item.back() != '-')) {
        throw Error("inverse condition must look like 'x+' or 'x-', got '" + std::string(item) + "'");
      }
      br.when[std::string(trim(item.substr(0, item.size() - 1)))] =
          item.back() == '+' ? Sign::Pos : Sign::Neg;
    }
    text = text.substr(colon + 1);
  }
  br.g = parse(text);
  return br;
}

struct Options {
  std::string expr;
  std::vector<std::string> vars;
  std::vector<std::string> positional;
  std::string unknown = "x";
  std::string rhs;
  std::vector<std::string> inverses;
  std::string search;
  std::string problem;
  bool linear = false;
  int max_depth = RangeConfig{}.max_depth;
  double min_width = RangeConfig{}.min_width;
  double tol = SolveConfig{}.tol;
  bool json = false;
  std::string plot;
};

// Splits positionals into the expression (when --expr is absent) and
// name=[lo,hi] bindings.
Box bindings(Options& o, bool want_expr) {
  std::vector<std::string> items = o.vars;
  for (const std::string& p : o.positional) {
    if (want_expr && o.expr.empty() && p.find('=') == std::string::npos) {
      o.expr = p;
    } else {
      items.push_back(p);
    }
  }
  Box box;
  for (const std::string& s : items) {
    Binding b = parse_binding(s);
    box.push_back(b.name, b.value);
  }
  return box;
}

RangeConfig range_config(const Options& o) {
  if (o.max_depth < 0) throw CLI::ValidationError("--max-depth", "must be non-negative");
  if (!(o.min_width > 0.0)) throw CLI::ValidationError("--min-width", "must be positive");
  RangeConfig cfg;
  cfg.max_depth = o.max_depth;
  cfg.min_width = o.min_width;
  return cfg;
}

class Runner {
 public:
  Runner(Options& o, std::ostream& out, std::ostream& err, std::shared_ptr<spdlog::logger> log)
      : o_(o), out_(out), err_(err), log_(std::move(log)) {}

  int eval() {
    Box box = bindings(o_, true);
    if (o_.expr.empty()) throw CLI::RequiredError("expression");
    const Expr f = parse(o_.expr);
    log_->debug("eval {} over {}", render(f), to_string(box));
    const Interval y = eval_interval(f, box);
    if (o_.json) {
      out_ << to_json(y).dump() << '\n';
    } else {
      out_ << format_interval(y, kDigits) << '\n';
    }
    return kExitOk;
  }

  int range() {
    Box box = bindings(o_, true);
    if (o_.expr.empty()) throw CLI::RequiredError("expression");
    const RangeConfig cfg = range_config(o_);
    const Expr f = parse(o_.expr);
    log_->debug("range {} over {}", render(f), to_string(box));
    const RangeResult r = intervox::range(f, box, cfg);
    for (const Region& reg : r.regions) {
      std::string signs;
      for (Sign s : reg.signs) signs += to_string(s);
      log_->debug("region {} signs {}", to_string(reg.box), signs);
    }
    if (o_.json) {
      out_ << to_json(r).dump() << '\n';
    } else {
      out_ << format_set(r.range, kDigits) << (r.exact ? " exact" : " enclosure") << '\n';
      out_ << "regions: " << r.regions.size() << ", residue: " << r.fallback_regions.size() << '\n';
    }
    if (!o_.plot.empty()) {
      std::ofstream file(o_.plot);
      if (!file) throw Error("cannot write plot to '" + o_.plot + "'");
      file << plot_svg(r, box);
    }
    return kExitOk;
  }

  int solve() {
    if (!(o_.tol > 0.0)) throw CLI::ValidationError("--tol", "must be positive");
    Solution s;
    if (o_.linear) {
      const Box abc = bindings(o_, false);
      for (const std::string& v : abc.names()) {
        if (v != "A" && v != "B" && v != "C") throw Error("--linear takes only A=, B= and C=");
      }
      s = solve_linear(abc.at("A"), abc.at("B"), abc.at("C"));
    } else {
      SolveConfig cfg;
      cfg.range = range_config(o_);
      cfg.tol = o_.tol;
      s = intervox::solve(problem(), cfg);
    }
    for (const std::string& line : s.diagnostics) {
      if (line.rfind("warning:", 0) == 0) {
        err_ << line << '\n';
      } else {
        log_->debug("{}", line);
      }
    }
    if (o_.json) {
      out_ << to_json(s).dump() << '\n';
    } else if (s.status == SolutionStatus::NoSolution) {
      out_ << "NoSolution\n";
    } else {
      out_ << format_set(s.intervals, kDigits) << ' ' << to_string(s.status) << '\n';
    }
    if (s.status == SolutionStatus::PartialEnclosure) {
      err_ << "warning: uncertified regions remain; the result is an enclosure\n";
    }
    return s.status == SolutionStatus::NoSolution ? kExitNoSolution : kExitOk;
  }

 private:
  EquationProblem problem() {
    if (!o_.problem.empty()) {
      std::ifstream file(o_.problem);
      if (!file) throw Error("cannot read problem file '" + o_.problem + "'");
      json j;
      try {
        j = json::parse(file);
      } catch (const json::parse_error& e) {
        throw ParseError(e.byte, {}, std::string("invalid JSON: ") + e.what());
      }
      return problem_from_json(j);
    }
    EquationProblem p;
    p.params = bindings(o_, true);
    if (o_.expr.empty()) throw CLI::RequiredError("--expr");
    if (o_.rhs.empty()) throw CLI::RequiredError("--rhs");
    p.f = parse(o_.expr);
    p.unknown = o_.unknown;
    p.rhs = parse_interval_arg(o_.rhs);
    for (const std::string& g : o_.inverses) p.inverses.push_back(parse_inverse(g));
    if (!o_.search.empty()) p.search = parse_interval_arg(o_.search);
    return p;
  }

  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::shared_ptr<spdlog::logger> log_;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("intervox", sink);
  log->set_pattern("[%l] %v");
  log->set_level(spdlog::level::off);
  if (const char* env = std::getenv("INTERVOX_LOG"); env && *env) {
    const auto level = spdlog::level::from_str(env);
    // Any value that is not a level name turns on debug output.
    log->set_level(level == spdlog::level::off && std::string_view(env) != "off" ? spdlog::level::debug
                                                                                : level);
  }
  return log;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--var", o.vars, "Variable binding name=[lo,hi] (repeatable)");
  sub->add_flag("--json", o.json, "Emit JSON");
}

void add_range_flags(CLI::App* sub, Options& o) {
  sub->add_option("--max-depth", o.max_depth, "Bisection depth limit")->capture_default_str();
  sub->add_option("--min-width", o.min_width, "Smallest width that is still bisected")
      ->capture_default_str();
}

}  // namespace

Interval parse_interval_arg(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw Error("malformed interval '" + std::string(whole) + "'");
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw Error("malformed interval '" + std::string(whole) + "'");
    return Interval(parse_number(text.substr(0, comma), whole),
                    parse_number(text.substr(comma + 1), whole));
  }
  return Interval(parse_number(text, whole));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Interval expression evaluation, ranges and equation solving", "intervox"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "Natural interval extension of an expression");
  eval->add_option("--expr", o.expr, "Expression");
  eval->add_option("args", o.positional, "Expression and name=[lo,hi] bindings");
  add_common(eval, o);

  CLI::App* range = app.add_subcommand("range", "Range of an expression by monotone regions");
  range->add_option("--expr", o.expr, "Expression");
  range->add_option("args", o.positional, "Expression and name=[lo,hi] bindings");
  range->add_option("--plot", o.plot, "Write an SVG region diagram to PATH");
  add_common(range, o);
  add_range_flags(range, o);

  CLI::App* solve = app.add_subcommand("solve", "Solve f(x, params) = rhs for x");
  solve->add_option("--expr", o.expr, "Left-hand side f");
  solve->add_option("--unknown", o.unknown, "Unknown variable")->capture_default_str();
  solve->add_option("--rhs", o.rhs, "Right-hand side [lo,hi]");
  solve->add_option("--inverse", o.inverses,
                    "Inverse in x0 and params, optionally prefixed by a sign condition like 'x+:'");
  solve->add_option("--search", o.search, "Search interval for the unknown");
  solve->add_option("--problem", o.problem, "JSON problem file");
  solve->add_flag("--linear", o.linear, "Solve A*X+B=C from A=, B=, C= bindings");
  solve->add_option("--tol", o.tol, "Verification tolerance")->capture_default_str();
  solve->add_option("args", o.positional, "name=[lo,hi] bindings");
  add_common(solve, o);
  add_range_flags(solve, o);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(o, out, err, make_logger(err));
  try {
    if (eval->parsed()) return runner.eval();
    if (range->parsed()) return runner.range();
    return runner.solve();
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace intervox
