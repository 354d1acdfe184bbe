#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gbinterp/rational.hpp"

namespace gbinterp {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

/// Outcome of exact elimination on [A | b].
struct ExactSolveResult {
  /// One solution with every free variable set to zero. Empty when the
  /// system was solved without a right-hand side.
  RationalRow particular;
  /// Basis of the homogeneous solution space, one vector per free column.
  RationalMatrix nullspace;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Solves A x = b exactly. Rows are scaled to integers and eliminated
/// fraction-free (Bareiss); back-substitution restores rationals.
/// Throws NoSolutionError (carrying the input row index) when inconsistent.
ExactSolveResult solve_linear(const RationalMatrix& matrix,
                              const RationalRow& rhs);

/// Rank of the matrix alone.
std::size_t matrix_rank(const RationalMatrix& matrix);

/// Basis of {x : A x = 0}; columns = width of the matrix.
RationalMatrix kernel_basis(const RationalMatrix& matrix, std::size_t ncols);

}  // namespace gbinterp
