#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "intervox/cli.hpp"
#include "intervox/errors.hpp"
#include "intervox/json.hpp"

using namespace intervox;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("intervox_test_" + name); }

}  // namespace

TEST(CliGolden, Transcripts) {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(INTERVOX_GOLDEN_DIR)) {
    if (entry.path().extension() != ".txt") continue;
    ++seen;
    std::ifstream in(entry.path());
    std::string header;
    std::getline(in, header);
    ASSERT_EQ(header.rfind("$ ", 0), 0u) << entry.path();
    int expected_code = 0;
    std::string expected, line;
    while (std::getline(in, line)) {
      if (line.rfind("# exit ", 0) == 0) {
        expected_code = std::stoi(line.substr(7));
      } else {
        expected += line + "\n";
      }
    }
    const CliRun r = run(split(header.substr(2)));
    EXPECT_EQ(r.out, expected) << entry.path();
    EXPECT_EQ(r.code, expected_code) << entry.path() << "\n" << r.err;
  }
  EXPECT_GE(seen, 9u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "x+"}).code, kExitParse);
  EXPECT_EQ(run({"eval", "ln(x)", "x=[-1,1]"}).code, kExitDomain);
  EXPECT_EQ(run({"eval", "1/x", "x=[-1,1]"}).code, kExitDomain);
  EXPECT_EQ(run({"solve", "--linear", "A=[1,1]", "B=[1,2]", "C=[0,0]"}).code, kExitNoSolution);
  EXPECT_EQ(run({"solve", "--linear", "A=[-1,1]", "B=[1,2]", "C=[0,0]"}).code, kExitDomain);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "x", "x=[2,1]"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "x", "x=[1;2]"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "x+y", "x=[0,1]"}).code, kExitUsage);
  EXPECT_EQ(run({"range", "x", "x=[0,1]", "--min-width", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--expr", "x", "--rhs", "[0,1]", "--tol", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--help"}).code, kExitOk);
}

TEST(Cli, VarFlagAndExprFlag) {
  const CliRun r = run({"eval", "--expr", "x*y", "--var", "x=[-1,0]", "--var", "y=[1,2]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[-2,0]\n");
  EXPECT_EQ(run({"eval", "x+1", "x=3"}).out, "[4,4]\n");
}

TEST(Cli, PartialEnclosureWarns) {
  const CliRun r = run({"solve", "--expr", "a*x", "a=[-1,1]", "--rhs", "[-1,1]", "--search", "[-2,2]",
                     "--inverse", "x0/a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PartialEnclosure"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, DefaultSearchWarns) {
  const CliRun r = run({"solve", "--expr", "a*x+b", "a=[1,2]", "b=[3,6]", "--rhs", "[3,8]"});
  EXPECT_EQ(r.out, "[0,1] Exact\n");
  EXPECT_NE(r.err.find("no search interval"), std::string::npos);
}

TEST(Cli, JsonOutputRoundTrips) {
  const CliRun e = run({"eval", "x+y", "x=[0,2]", "y=[-1,1]", "--json"});
  EXPECT_EQ(interval_from_json(json::parse(e.out)), Interval(-1, 3));

  const CliRun r = run({"range", "x^2-x", "x=[1,1.61803398875]", "--json"});
  const json rj = json::parse(r.out);
  EXPECT_EQ(rj.at("exact"), true);
  EXPECT_EQ(rj.at("regions"), 1);
  EXPECT_EQ(rj.at("fallback"), 0);
  EXPECT_EQ(interval_set_from_json(rj.at("range")).size(), 1u);

  const CliRun s = run({"solve", "--linear", "A=[2,3]", "B=[7,10]", "C=[-8,4]", "--json"});
  const Solution sol = solution_from_json(json::parse(s.out));
  EXPECT_EQ(sol.status, SolutionStatus::Exact);
  EXPECT_EQ(sol.intervals.parts(), std::vector{Interval(-5, -3)});
  EXPECT_EQ(sol.regions_used, 1u);
  EXPECT_EQ(to_json(sol).dump(), json::parse(s.out).dump());
}

TEST(Cli, ProblemFile) {
  const fs::path path = temp_path("problem.json");
  {
    std::ofstream f(path);
    f << R"({"f":"a*x+b","unknown":"x","params":{"a":[2,3],"b":[7,10]},"rhs":[-8,4],"inverse":"(x0-b)/a","search":[-100,100]})";
  }
  const CliRun r = run({"solve", "--problem", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[-5,-3] Exact\n");
  const CliRun j = run({"solve", "--problem", path.string(), "--json"});
  EXPECT_EQ(json::parse(j.out), json::parse(R"({"intervals":[[-5,-3]],"status":"Exact","regions_used":1})"));

  {
    std::ofstream f(path);
    f << "{not json";
  }
  EXPECT_EQ(run({"solve", "--problem", path.string()}).code, kExitParse);
  fs::remove(path);
}

TEST(Cli, PlotWritesSvg) {
  const fs::path path = temp_path("plot.svg");
  const CliRun r = run({"range", "x*y", "x=[-1,1]", "y=[0,2]", "--plot", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  EXPECT_EQ(content.str().rfind("<svg", 0), 0u);
  EXPECT_NE(content.str().find("#4caf50"), std::string::npos);
  EXPECT_NE(content.str().find("#e53935"), std::string::npos);
  EXPECT_NE(content.str().find("</svg>"), std::string::npos);
  fs::remove(path);
}

TEST(Cli, LogEnvironmentVariable) {
  setenv("INTERVOX_LOG", "debug", 1);
  const CliRun r = run({"solve", "--linear", "A=[2,3]", "B=[7,10]", "C=[-8,4]"});
  unsetenv("INTERVOX_LOG");
  EXPECT_NE(r.err.find("x>=0: rejected"), std::string::npos);
  EXPECT_EQ(run({"solve", "--linear", "A=[2,3]", "B=[7,10]", "C=[-8,4]"}).err, "");
}

TEST(Json, ProblemSchemaRoundTrip) {
  const json j = json::parse(R"json({
    "f": "x*(1-x)", "unknown": "x", "rhs": [0, 0.25], "search": [0, 1],
    "inverse": [{"when": {"x": "+"}, "g": "(1-sqrt(1-4*x0))/2"},
                {"when": {"x": "-"}, "g": "(1+sqrt(1-4*x0))/2"}]})json");
  const EquationProblem p = problem_from_json(j);
  EXPECT_EQ(p.unknown, "x");
  ASSERT_EQ(p.inverses.size(), 2u);
  EXPECT_EQ(p.inverses[1].when.at("x"), Sign::Neg);
  EXPECT_EQ(p.search, Interval(0, 1));
  const EquationProblem q = problem_from_json(to_json(p));
  EXPECT_EQ(q.f, p.f);
  EXPECT_EQ(q.inverses[0].g, p.inverses[0].g);
  EXPECT_EQ(q.inverses[1].when, p.inverses[1].when);
  EXPECT_EQ(q.rhs, p.rhs);

  EXPECT_THROW(problem_from_json(json::parse(R"({"f":"x"})")), Error);
  EXPECT_THROW(problem_from_json(json::parse(R"({"f":"x+","unknown":"x","rhs":[0,1]})")), ParseError);
  EXPECT_THROW(interval_from_json(json::parse("[1]")), Error);
}

TEST(Json, DirectedAndPseudo) {
  EXPECT_EQ(directed_from_json(to_json(DirectedInterval(3, -1))), DirectedInterval(3, -1));
  EXPECT_EQ(pseudo_from_json(to_json(PseudoComplex(1, 2))), PseudoComplex(1, 2));
  EXPECT_EQ(to_json(DirectedInterval(3, -1)).dump(), R"({"a":3.0,"b":-1.0})");
}
