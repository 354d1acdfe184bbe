#pragma once

#include <functional>
#include <vector>

#include "gbinterp/polynomial.hpp"

namespace gbinterp {

/// Groebner basis of a polynomial ideal for a fixed monomial order.
/// Generators are monic and sorted ascending by leading exponent; when
/// `reduced` holds, no term of a generator is divisible by another
/// generator's leading exponent, making the basis canonical for the pair
/// (ideal, order).
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;
  std::vector<ExponentVector> leading_exponents;  // parallel to generators
  bool reduced = false;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const {
    return !generators.empty() && leading_exponents.front().is_zero();
  }
};

/// Buchberger's algorithm with normal pair selection (smallest lcm first,
/// ties broken lexicographically) and the standard pair-pruning criteria.
/// Zero generators are ignored; an empty input yields the zero ideal.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order);

/// Remainder of multivariate division of f by the basis: no term of the
/// result is divisible by any leading exponent, f - result lies in the
/// ideal, and the map is idempotent. The zero-ideal basis returns f.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Ideal intersection through a single auxiliary elimination variable:
/// the basis of <t*A, (1-t)*B> is computed under a block order that
/// eliminates t, and the t-free generators are returned under the callers'
/// (shared) order.
GroebnerBasis intersect(const GroebnerBasis& a, const GroebnerBasis& b);

/// Finite complement of the leading-exponent ideal: the standard monomials
/// indexing a vector-space basis of the quotient ring.
struct Staircase {
  std::vector<ExponentVector> exponents;  // ascending under the basis order

  std::size_t size() const { return exponents.size(); }
  bool contains(const ExponentVector& e) const;
};

/// Enumerates the staircase by scanning the bounding box spanned by the
/// leading exponents and filtering out divisible entries. Requires a
/// cofinite ideal: every variable must appear as a pure power among the
/// leading exponents (else NonCofiniteError).
Staircase staircase(const GroebnerBasis& gb);

namespace detail {

/// Buchberger variant that lets the caller drop S-pairs between *initial*
/// generators that are known to reduce to zero (the caller is responsible
/// for that guarantee). `keep_initial_pair(i, j)` is consulted only when
/// both indices refer to input generators.
GroebnerBasis buchberger_filtered(
    const std::vector<Polynomial>& generators, const MonomialOrder& order,
    const std::function<bool(std::size_t, std::size_t)>& keep_initial_pair);

}  // namespace detail

}  // namespace gbinterp
