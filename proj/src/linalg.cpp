#include "gbinterp/linalg.hpp"

#include <gmpxx.h>

#include <utility>

#include "gbinterp/errors.hpp"

namespace gbinterp {

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // integer, rhs appended if present
  std::vector<std::size_t> pivot_columns;    // one per eliminated row
  std::vector<std::size_t> original_row;     // working row -> input row index
  std::size_t ncols = 0;                     // coefficient columns only
  bool with_rhs = false;
};

// Scales [A | b] rows to integers, strips content, then runs one-step
// fraction-free (Bareiss) elimination with leftmost-column pivoting.
Echelon eliminate(const RationalMatrix& matrix, const RationalRow* rhs,
                  std::size_t ncols) {
  const std::size_t nrows = matrix.size();
  Echelon ech;
  ech.ncols = ncols;
  ech.with_rhs = rhs != nullptr;
  ech.rows.resize(nrows);
  ech.original_row.resize(nrows);

  for (std::size_t i = 0; i < nrows; ++i) {
    if (matrix[i].size() != ncols)
      throw DimensionError("ragged matrix row");
    ech.original_row[i] = i;
    std::vector<mpz_class> row(ncols + (rhs ? 1 : 0));
    mpz_class scale = 1;
    auto fold_den = [&scale](const Rational& v) {
      mpz_class den = v.denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      scale = scale / g * den;
    };
    for (const auto& v : matrix[i]) fold_den(v);
    if (rhs) fold_den((*rhs)[i]);
    auto to_int = [&scale](const Rational& v) -> mpz_class {
      return v.numerator() * (scale / v.denominator());
    };
    for (std::size_t j = 0; j < ncols; ++j) row[j] = to_int(matrix[i][j]);
    if (rhs) row[ncols] = to_int((*rhs)[i]);

    mpz_class content = 0;
    for (const auto& x : row)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
      for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    ech.rows[i] = std::move(row);
  }

  const std::size_t width = ncols + (rhs ? 1 : 0);
  mpz_class prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = nrows;
    for (std::size_t i = rank; i < nrows; ++i) {
      if (ech.rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == nrows) continue;
    if (pivot != rank) {
      std::swap(ech.rows[pivot], ech.rows[rank]);
      std::swap(ech.original_row[pivot], ech.original_row[rank]);
    }
    const auto& prow = ech.rows[rank];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      auto& row = ech.rows[i];
      if (row[col] == 0) {
        // Still rescale so later exact divisions stay valid.
        for (std::size_t j = col + 1; j < width; ++j) {
          mpz_class t = prow[col] * row[j];
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
          row[j] = std::move(t);
        }
        continue;
      }
      for (std::size_t j = col + 1; j < width; ++j) {
        mpz_class t = prow[col] * row[j] - row[col] * prow[j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        row[j] = std::move(t);
      }
      row[col] = 0;
    }
    ech.pivot_columns.push_back(col);
    prev_pivot = prow[col];
    ++rank;
  }
  return ech;
}

// Solves the echelon system for fixed values of the free columns.
RationalRow back_substitute(const Echelon& ech, const RationalRow& free_values,
                            bool homogeneous) {
  const std::size_t ncols = ech.ncols;
  RationalRow x = free_values;  // pivot positions will be overwritten
  for (std::size_t k = ech.pivot_columns.size(); k-- > 0;) {
    const std::size_t pc = ech.pivot_columns[k];
    const auto& row = ech.rows[k];
    Rational acc = homogeneous ? Rational(0)
                               : Rational(mpq_class(row[ncols]));
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      if (row[j] != 0 && !x[j].is_zero())
        acc -= Rational(mpq_class(row[j])) * x[j];
    }
    x[pc] = acc / Rational(mpq_class(row[pc]));
  }
  return x;
}

}  // namespace

ExactSolveResult solve_linear(const RationalMatrix& matrix,
                              const RationalRow& rhs) {
  if (matrix.size() != rhs.size())
    throw DimensionError("matrix and right-hand side of different heights");
  const std::size_t ncols = matrix.empty() ? 0 : matrix.front().size();
  Echelon ech = eliminate(matrix, &rhs, ncols);

  const std::size_t rank = ech.pivot_columns.size();
  for (std::size_t i = rank; i < ech.rows.size(); ++i) {
    if (ech.rows[i][ncols] != 0)
      throw NoSolutionError(
          "inconsistent linear system: condition row " +
              std::to_string(ech.original_row[i]) + " cannot be satisfied",
          ech.original_row[i]);
  }

  ExactSolveResult result;
  result.rank = rank;
  result.pivot_columns = ech.pivot_columns;
  result.particular = back_substitute(ech, RationalRow(ncols, Rational(0)),
                                      /*homogeneous=*/false);

  std::vector<bool> is_pivot(ncols, false);
  for (auto pc : ech.pivot_columns) is_pivot[pc] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RationalRow unit(ncols, Rational(0));
    unit[f] = Rational(1);
    result.nullspace.push_back(back_substitute(ech, unit, /*homogeneous=*/true));
  }
  return result;
}

std::size_t matrix_rank(const RationalMatrix& matrix) {
  const std::size_t ncols = matrix.empty() ? 0 : matrix.front().size();
  return eliminate(matrix, nullptr, ncols).pivot_columns.size();
}

RationalMatrix kernel_basis(const RationalMatrix& matrix, std::size_t ncols) {
  for (const auto& row : matrix)
    if (row.size() != ncols) throw DimensionError("ragged matrix row");
  Echelon ech = eliminate(matrix, nullptr, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto pc : ech.pivot_columns) is_pivot[pc] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RationalRow unit(ncols, Rational(0));
    unit[f] = Rational(1);
    basis.push_back(back_substitute(ech, unit, /*homogeneous=*/true));
  }
  return basis;
}

}  // namespace gbinterp
