#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "gbinterp/problem_io.hpp"

namespace {

using namespace gbinterp;

std::string format_multi_index(const MultiIndex& h) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < h.size(); ++k) os << (k ? "," : "") << h[k];
  os << ')';
  return os.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

int run_solve(const std::string& problem_path, const std::string& order_flag,
              const std::string& mode_flag, const std::string& out_path) {
  InterpolationProblem problem = load_problem(problem_path);
  if (!order_flag.empty()) problem.order = *MonomialOrder::from_name(order_flag);
  if (!mode_flag.empty()) problem.mode = *mode_from_name(mode_flag);

  Solution solution = interpolate(problem.nodes, problem.mode, problem.order);
  for (const auto& w : solution.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "staircase size: " << solution.staircase.size()
            << "\nfree parameters: " << solution.free_parameters << "\n";
  emit(out_path, solution_to_json_text(solution, problem));
  return 0;
}

int run_check(const std::string& problem_path, const std::string& solution_path) {
  InterpolationProblem problem = load_problem(problem_path);
  SolutionDocument solution = load_solution(solution_path);
  if (solution.variables.size() != problem.variables.size())
    throw ParseError("solution and problem have different variable counts");

  VerifyReport report = verify(solution.polynomial, problem.nodes);
  for (const auto& entry : report.entries) {
    std::cout << "node " << entry.node_index << " h="
              << format_multi_index(entry.h) << " residual "
              << entry.residual.str() << "\n";
  }
  std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.entries.size()
            << " conditions checked\n";
  return report.pass ? 0 : 3;
}

int run_sample(const std::string& solution_path, const std::string& grid_spec,
               const std::string& reference_path, const std::string& out_path) {
  SolutionDocument solution = load_solution(solution_path);
  std::vector<GridAxis> grid =
      parse_grid_spec(grid_spec, solution.variables.size());

  ReferenceTable reference;
  bool have_reference = !reference_path.empty();
  if (have_reference) reference = load_reference_csv(reference_path);

  SampleResult result =
      sample_polynomial(solution.polynomial, solution.variables, grid,
                        have_reference ? &reference : nullptr);
  if (result.max_abs_difference)
    std::cerr << "max_abs_difference " << *result.max_abs_difference << "\n";
  emit(out_path, result.csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact multivariate Lagrange, Hermite and Birkhoff interpolation "
      "through Groebner bases over the rationals"};
  app.require_subcommand(1);

  std::string problem_path, solution_path, out_path, order_flag, mode_flag;
  std::string grid_spec, reference_path;

  CLI::App* solve = app.add_subcommand("solve", "Solve a problem file");
  solve->add_option("problem", problem_path, "Problem JSON file")->required();
  solve->add_option("--order", order_flag, "Monomial order override")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  solve->add_option("--mode", mode_flag, "Mode override")
      ->check(CLI::IsMember({"lagrange", "hermite", "birkhoff"}));
  solve->add_option("--out", out_path, "Solution JSON path (default stdout)");

  CLI::App* check = app.add_subcommand("check", "Verify a solution file");
  check->add_option("problem", problem_path, "Problem JSON file")->required();
  check->add_option("solution", solution_path, "Solution JSON file")->required();

  CLI::App* sample =
      app.add_subcommand("sample", "Evaluate a solution over a grid (CSV)");
  sample->add_option("solution", solution_path, "Solution JSON file")->required();
  sample->add_option("--grid", grid_spec, "Per-variable lo:hi:steps, comma separated")
      ->required();
  sample->add_option("--reference", reference_path,
                     "Reference CSV aligned to the grid");
  sample->add_option("--out", out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed())
      return run_solve(problem_path, order_flag, mode_flag, out_path);
    if (check->parsed()) return run_check(problem_path, solution_path);
    if (sample->parsed())
      return run_sample(solution_path, grid_spec, reference_path, out_path);
  } catch (const gbinterp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gbinterp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
