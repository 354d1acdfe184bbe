#include "gbinterp/solver.hpp"

#include <sstream>

#include "gbinterp/errors.hpp"

namespace gbinterp {

LinearSystem assemble_system(const Staircase& staircase,
                             std::span<const NodeSpec> nodes) {
  LinearSystem sys;
  sys.columns = staircase.exponents;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeSpec& node = nodes[i];
    for (const auto& [h, value] : node.conditions.entries) {
      RationalRow row;
      row.reserve(sys.columns.size());
      for (const auto& beta : sys.columns) {
        Polynomial d = iterated_derivative(Polynomial::monomial(beta),
                                           node.directions, h);
        row.push_back(d.evaluate(node.point));
      }
      sys.matrix.push_back(std::move(row));
      sys.rhs.push_back(value);
      sys.row_labels.emplace_back(i, h);
    }
  }
  return sys;
}

ExactSolveResult solve_exact(const LinearSystem& system) {
  try {
    return solve_linear(system.matrix, system.rhs);
  } catch (const NoSolutionError& e) {
    std::ostringstream os;
    os << e.what();
    if (e.row < system.row_labels.size()) {
      const auto& [node, h] = system.row_labels[e.row];
      os << " (node " << node << ", derivative order (";
      for (std::size_t k = 0; k < h.size(); ++k) os << (k ? "," : "") << h[k];
      os << "))";
    }
    throw NoSolutionError(os.str(), e.row);
  }
}

namespace {

Polynomial combine(const RationalRow& coeffs,
                   const std::vector<ExponentVector>& columns,
                   std::size_t nvars) {
  Polynomial p(nvars);
  for (std::size_t k = 0; k < columns.size(); ++k)
    p.add_term(columns[k], coeffs[k]);
  return p;
}

Solution solve_over_ideal(GroebnerBasis ideal, std::span<const NodeSpec> nodes,
                          Mode mode, std::vector<std::string> warnings) {
  const std::size_t nvars = nodes.front().point.dim();
  Solution sol;
  sol.ideal = std::move(ideal);
  sol.staircase = staircase(sol.ideal);
  LinearSystem sys = assemble_system(sol.staircase, nodes);

  ExactSolveResult res;
  try {
    res = solve_exact(sys);
  } catch (const NoSolutionError& e) {
    if (mode == Mode::birkhoff)
      throw InternalError(
          std::string("gap-filled system reported inconsistent, which the "
                      "existence theorem rules out: ") +
          e.what());
    throw;
  }

  sol.polynomial = combine(res.particular, sys.columns, nvars);
  for (const auto& vec : res.nullspace)
    sol.nullspace.push_back(combine(vec, sys.columns, nvars));
  sol.rank = res.rank;
  sol.free_parameters = sys.columns.size() - res.rank;
  sol.warnings = std::move(warnings);
  if (mode != Mode::birkhoff && sol.free_parameters > 0)
    sol.warnings.push_back(
        "staircase larger than the condition count: the interpolant is not "
        "unique modulo the ideal (" +
        std::to_string(sol.free_parameters) + " free parameters)");
  return sol;
}

std::vector<std::string> collect_warnings(const std::vector<NodeIdeal>& ideals) {
  std::vector<std::string> warnings;
  for (const auto& ni : ideals)
    for (const auto& w : ni.warnings)
      warnings.push_back("node " + std::to_string(ni.node_index) + ": " + w);
  return warnings;
}

}  // namespace

Solution interpolate(std::span<const NodeSpec> nodes, Mode mode,
                     const MonomialOrder& order) {
  if (nodes.empty()) throw ModeError("interpolation problem without nodes");
  const std::size_t nvars = nodes.front().point.dim();
  for (const auto& node : nodes) node.validate(nvars);

  std::vector<NodeIdeal> ideals = build_node_ideals(nodes, mode, order);
  GroebnerBasis ideal = fold_intersection(ideals, order);
  return solve_over_ideal(std::move(ideal), nodes, mode,
                          collect_warnings(ideals));
}

const Solution& ProblemState::add_node(const NodeSpec& node) {
  const std::size_t nvars = node.point.dim();
  node.validate(nvars);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].point == node.point)
      throw DuplicateNodeError("new node shares its point with node " +
                               std::to_string(i));

  NodeIdeal ni = node_ideal(node, mode_, order_);
  ni.node_index = nodes_.size();
  for (const auto& w : ni.warnings)
    warnings_.push_back("node " + std::to_string(ni.node_index) + ": " + w);

  ideal_ = ideal_ ? intersect(*ideal_, ni.basis) : std::move(ni.basis);
  nodes_.push_back(node);
  solution_ = solve_over_ideal(*ideal_, nodes_, mode_, warnings_);
  return *solution_;
}

VerifyReport verify(const Polynomial& candidate,
                    std::span<const NodeSpec> nodes) {
  VerifyReport report;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeSpec& node = nodes[i];
    for (const auto& [h, value] : node.conditions.entries) {
      Polynomial d = iterated_derivative(candidate, node.directions, h);
      Rational actual = d.evaluate(node.point);
      Rational residual = actual - value;
      if (!residual.is_zero()) report.pass = false;
      report.entries.push_back({i, h, value, std::move(actual), std::move(residual)});
    }
  }
  return report;
}

VerifyReport verify(const Solution& solution, std::span<const NodeSpec> nodes) {
  return verify(solution.polynomial, nodes);
}

}  // namespace gbinterp
