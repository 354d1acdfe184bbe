#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gbinterp/linalg.hpp"
#include "gbinterp/vanishing.hpp"

namespace gbinterp {

/// Exact linear system over the staircase basis: one row per prescribed
/// condition (nodes in order, condition indices graded-lex within a node),
/// one column per staircase exponent (ascending in the ambient order).
struct LinearSystem {
  RationalMatrix matrix;
  RationalRow rhs;
  std::vector<std::pair<std::size_t, MultiIndex>> row_labels;  // (node, h)
  std::vector<ExponentVector> columns;
};

LinearSystem assemble_system(const Staircase& staircase,
                             std::span<const NodeSpec> nodes);

/// Exact echelon solve of the assembled system; the particular solution
/// sets every free variable to zero. Throws NoSolutionError carrying the
/// offending row when the system is inconsistent.
ExactSolveResult solve_exact(const LinearSystem& system);

/// Interpolation result: a particular interpolant supported on the
/// staircase, the condition ideal it is unique modulo, and the homogeneous
/// solutions (one per free parameter).
struct Solution {
  Polynomial polynomial;
  GroebnerBasis ideal;
  Staircase staircase;
  std::size_t free_parameters = 0;
  std::vector<Polynomial> nullspace;
  std::size_t rank = 0;
  std::vector<std::string> warnings;
};

Solution interpolate(std::span<const NodeSpec> nodes, Mode mode,
                     const MonomialOrder& order);

/// Incremental solving: nodes are added one at a time and the condition
/// ideal is extended by a single intersection instead of recomputing the
/// whole fold, so the result matches the batch solve exactly.
class ProblemState {
 public:
  ProblemState(Mode mode, MonomialOrder order)
      : mode_(mode), order_(std::move(order)) {}

  const Solution& add_node(const NodeSpec& node);

  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  Mode mode() const { return mode_; }
  const MonomialOrder& order() const { return order_; }
  const std::optional<Solution>& solution() const { return solution_; }

 private:
  Mode mode_;
  MonomialOrder order_;
  std::vector<NodeSpec> nodes_;
  std::optional<GroebnerBasis> ideal_;
  std::vector<std::string> warnings_;
  std::optional<Solution> solution_;
};

/// One residual D^(h) F(p_i) - v_{i,h} per prescribed condition.
struct VerifyEntry {
  std::size_t node_index;
  MultiIndex h;
  Rational expected;
  Rational actual;
  Rational residual;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool pass = true;
};

VerifyReport verify(const Polynomial& candidate, std::span<const NodeSpec> nodes);
VerifyReport verify(const Solution& solution, std::span<const NodeSpec> nodes);

}  // namespace gbinterp
