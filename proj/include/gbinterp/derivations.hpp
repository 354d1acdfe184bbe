#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "gbinterp/polynomial.hpp"

namespace gbinterp {

/// Orders of differentiation along a node's direction list, e.g. (2,0,1)
/// for "twice along the first direction, once along the third".
using MultiIndex = std::vector<std::uint32_t>;

std::uint32_t total_order(const MultiIndex& h);

/// Row/key ordering used everywhere conditions are enumerated:
/// by total order first, then plain lexicographically.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Nonzero, linearly independent derivative directions attached to a node.
/// Directions are arbitrary rational vectors; they are not normalized, so
/// prescribed derivative values are relative to the vectors as given.
class DirectionSet {
 public:
  DirectionSet() = default;
  /// Validates: each vector nonzero of length nvars, jointly independent,
  /// and at most nvars of them. Throws InvalidDirectionError / DimensionError.
  DirectionSet(std::size_t nvars, std::vector<std::vector<Rational>> vectors);

  std::size_t nvars() const { return nvars_; }
  std::size_t count() const { return vectors_.size(); }
  std::span<const Rational> vector(std::size_t i) const { return vectors_[i]; }
  const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::vector<Rational>> vectors_;
};

/// Prescribed derivative conditions at one node: multi-index -> value.
struct ConditionSet {
  std::map<MultiIndex, Rational, GradedLexLess> entries;

  std::size_t size() const { return entries.size(); }
  /// Common multi-index length; conditions must agree (checked by NodeSpec).
  std::size_t index_length() const {
    return entries.empty() ? 0 : entries.begin()->first.size();
  }
};

/// One interpolation node: a point, its directions, and its conditions.
struct NodeSpec {
  Point point;
  DirectionSet directions;
  ConditionSet conditions;

  /// Checks dimensional consistency (throws DimensionError / ModeError on
  /// empty conditions or mismatched multi-index lengths).
  void validate(std::size_t nvars) const;
};

/// Derivative of f along direction u: sum_j u_j * df/dX_j.
Polynomial directional_derivative(const Polynomial& f,
                                  std::span<const Rational> direction);

/// Composition D^{h_1}_{u_1} ... D^{h_s}_{u_s} f.
Polynomial iterated_derivative(const Polynomial& f, const DirectionSet& dirs,
                               const MultiIndex& h);

using MultiIndexSet = std::set<MultiIndex, GradedLexLess>;

/// True when h in H and h - e componentwise nonnegative imply h - e in H.
bool is_lower_set(const MultiIndexSet& H);

/// Smallest lower-set superset of H.
MultiIndexSet lower_set_closure(const MultiIndexSet& H);

/// Gap completion of a condition index set.
struct GapFill {
  MultiIndexSet filled;     // every multi-index of total order <= max_order
  std::uint32_t max_order;  // largest total order present in the input
};

/// Computes max_order = max |h| over H and fills to all |h| <= max_order.
/// Throws ModeError when H is empty.
GapFill fill_gaps(const MultiIndexSet& H);

/// All multi-indices of length s with total order exactly d (graded-lex order).
std::vector<MultiIndex> multi_indices_of_order(std::size_t s, std::uint32_t d);

}  // namespace gbinterp
