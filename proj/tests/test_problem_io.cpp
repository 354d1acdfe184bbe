#include <doctest.h>

#include <string>

#include "gbinterp/errors.hpp"
#include "gbinterp/problem_io.hpp"

using namespace gbinterp;

namespace {

const char* kMinimalLagrange = R"({
  "variables": ["X"],
  "order": "lex",
  "mode": "lagrange",
  "nodes": [
    {"point": ["0"], "conditions": [{"h": [], "value": "1"}]}
  ]
})";

const char* kHermitePlane = R"({
  "variables": ["X", "Y"],
  "order": "grevlex",
  "mode": "hermite",
  "nodes": [
    {"point": ["0", "0"],
     "directions": [["1", "0"], ["0", "1"]],
     "conditions": [
       {"h": [0, 0], "value": "1/3"},
       {"h": [1, 0], "value": "0.25"},
       {"h": [0, 1], "value": "-2"}
     ]},
    {"point": ["1", "2"],
     "directions": [["1", "0"], ["0", "1"]],
     "conditions": [{"h": [0, 0], "value": "0.000015"}]}
  ]
})";

std::string patched(std::string text, const std::string& from,
                    const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("minimal problem file parses") {
  InterpolationProblem p = parse_problem_text(kMinimalLagrange);
  CHECK(p.variables == std::vector<std::string>{"X"});
  CHECK(p.mode == Mode::lagrange);
  CHECK(p.order == MonomialOrder::lex());
  REQUIRE(p.nodes.size() == 1);
  CHECK(p.nodes[0].point[0] == Rational(0));
  CHECK(p.nodes[0].conditions.entries.at(MultiIndex{}) == Rational(1));
}

TEST_CASE("numeric strings parse exactly") {
  InterpolationProblem p = parse_problem_text(kHermitePlane);
  const auto& c = p.nodes[0].conditions.entries;
  CHECK(c.at(MultiIndex{0, 0}) == Rational(1, 3));
  CHECK(c.at(MultiIndex{1, 0}) == Rational(1, 4));
  CHECK(c.at(MultiIndex{0, 1}) == Rational(-2));
  CHECK(p.nodes[1].conditions.entries.at(MultiIndex{0, 0}) ==
        Rational(15, 1000000));
}

TEST_CASE("parse failures carry field diagnostics") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_problem_text(text);
      FAIL("expected ParseError for ", needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("{", "not valid JSON");
  expect_error(R"({"order":"lex","mode":"lagrange","nodes":[]})", "variables");
  expect_error(patched(kMinimalLagrange, "\"lex\"", "\"degrevlex\""),
               "unknown order");
  expect_error(patched(kMinimalLagrange, "\"lagrange\"", "\"newton\""),
               "unknown mode");
  expect_error(patched(kMinimalLagrange, "[\"0\"]", "[\"0\", \"1\"]"),
               "nodes[0].point");
  expect_error(patched(kMinimalLagrange, "\"value\": \"1\"", "\"value\": \"one\""),
               "nodes[0].conditions[0].value");
  expect_error(patched(kHermitePlane, "{\"h\": [0, 1], \"value\": \"-2\"}",
                       "{\"h\": [1, 0], \"value\": \"-2\"}"),
               "duplicate");
  expect_error(patched(kHermitePlane, "[\"1\", \"0\"], [\"0\", \"1\"]",
                       "[\"1\", \"0\"], [\"2\", \"0\"]"),
               "directions");
}

TEST_CASE("solution documents round trip exactly") {
  InterpolationProblem problem = parse_problem_text(kHermitePlane);
  Solution sol = interpolate(problem.nodes, problem.mode, problem.order);
  std::string text = solution_to_json_text(sol, problem);

  SolutionDocument doc = parse_solution_text(text);
  CHECK(doc.variables == problem.variables);
  CHECK(doc.polynomial == sol.polynomial);
  CHECK(doc.free_parameters == sol.free_parameters);

  // Identical input gives byte-identical output.
  Solution sol2 = interpolate(problem.nodes, problem.mode, problem.order);
  CHECK(solution_to_json_text(sol2, problem) == text);

  // The reconstructed polynomial still verifies.
  CHECK(verify(doc.polynomial, problem.nodes).pass);
}

TEST_CASE("grid specs") {
  auto axes = parse_grid_spec("2:3:50,0:6.28:10", 2);
  REQUIRE(axes.size() == 2);
  CHECK(axes[0].lo == 2.0);
  CHECK(axes[0].hi == 3.0);
  CHECK(axes[0].steps == 50);
  CHECK(axes[1].steps == 10);
  CHECK_THROWS_AS(parse_grid_spec("1:2:5", 2), ParseError);
  CHECK_THROWS_AS(parse_grid_spec("1:2:0,3:4:5", 2), ParseError);
  CHECK_THROWS_AS(parse_grid_spec("1:2,3:4:5", 2), ParseError);
}

TEST_CASE("sampling a constant polynomial") {
  Polynomial c = Polynomial::constant(2, Rational(5, 2));
  std::vector<GridAxis> grid = {{0.0, 1.0, 3}, {2.0, 2.0, 1}};
  SampleResult r =
      sample_polynomial(c, {"X", "Y"}, grid, nullptr);
  CHECK(r.csv.find("X,Y,P\n") == 0);
  std::size_t count = 0;
  for (char ch : r.csv)
    if (ch == '\n') ++count;
  CHECK(count == 4);  // header + three points
  CHECK(r.csv.find("2.5") != std::string::npos);
  CHECK_FALSE(r.max_abs_difference.has_value());
}

TEST_CASE("sampling against a reference") {
  Polynomial f = Polynomial::monomial(ExponentVector{1}, Rational(2));
  std::vector<GridAxis> grid = {{0.0, 2.0, 3}};
  ReferenceTable ref;
  ref.rows = {{0.0, 0.0}, {1.0, 2.5}, {2.0, 4.0}};  // x, F(x)
  SampleResult r = sample_polynomial(f, {"X"}, grid, &ref);
  REQUIRE(r.max_abs_difference.has_value());
  CHECK(*r.max_abs_difference == doctest::Approx(0.5));
  CHECK(r.csv.find("max_abs_difference,0.5") != std::string::npos);

  ReferenceTable misaligned;
  misaligned.rows = {{0.0, 0.0}, {9.0, 2.5}, {2.0, 4.0}};
  CHECK_THROWS_AS(sample_polynomial(f, {"X"}, grid, &misaligned), ParseError);
  ReferenceTable short_table;
  short_table.rows = {{0.0, 0.0}};
  CHECK_THROWS_AS(sample_polynomial(f, {"X"}, grid, &short_table), ParseError);
}
