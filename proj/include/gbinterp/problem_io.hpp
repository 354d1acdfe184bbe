#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbinterp/errors.hpp"
#include "gbinterp/solver.hpp"

namespace gbinterp {

/// A problem file parsed into exact form. All numeric strings in the file
/// are exact decimals or fractions; nothing is rounded on the way in.
struct InterpolationProblem {
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::grevlex();
  Mode mode = Mode::lagrange;
  std::vector<NodeSpec> nodes;

  std::size_t nvars() const { return variables.size(); }
};

/// Parses problem JSON text. Throws ParseError with a field path on any
/// malformed or inconsistent content.
InterpolationProblem parse_problem_text(const std::string& json_text);
InterpolationProblem load_problem(const std::string& path);

/// Serializes a solution (variables and order/mode echo the problem;
/// coefficients are exact strings keyed by exponent).
std::string solution_to_json_text(const Solution& solution,
                                  const InterpolationProblem& problem);

/// A solution file reduced to what check/sample need.
struct SolutionDocument {
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::grevlex();
  Polynomial polynomial{0};
  std::size_t free_parameters = 0;
};

SolutionDocument parse_solution_text(const std::string& json_text);
SolutionDocument load_solution(const std::string& path);

/// One axis of a sampling grid: `steps` evenly spaced points from lo to hi
/// inclusive (a single point when steps == 1).
struct GridAxis {
  double lo = 0;
  double hi = 0;
  std::size_t steps = 1;
};

/// Parses "lo:hi:steps" per variable, comma separated.
std::vector<GridAxis> parse_grid_spec(const std::string& spec,
                                      std::size_t nvars);

/// Reference values aligned to a grid (last CSV column; leading columns,
/// when present, are checked against the grid coordinates).
struct ReferenceTable {
  std::vector<std::vector<double>> rows;
};

ReferenceTable load_reference_csv(const std::string& path);

/// Evaluates the polynomial in double precision over the grid and renders
/// a CSV (header, one row per point, first variable slowest). With a
/// reference the CSV gains reference/difference columns and a final
/// "max_abs_difference" summary row, also returned numerically.
struct SampleResult {
  std::string csv;
  std::optional<double> max_abs_difference;
};

SampleResult sample_polynomial(const Polynomial& polynomial,
                               const std::vector<std::string>& variables,
                               const std::vector<GridAxis>& grid,
                               const ReferenceTable* reference);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gbinterp
