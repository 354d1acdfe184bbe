#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbinterp/derivations.hpp"
#include "gbinterp/groebner.hpp"

namespace gbinterp {

enum class Mode { lagrange, hermite, birkhoff };

std::string mode_name(Mode mode);
std::optional<Mode> mode_from_name(std::string_view name);

/// The ideal of all polynomials satisfying one node's homogeneous
/// conditions, together with its quotient codimension.
struct NodeIdeal {
  std::size_t node_index = 0;
  GroebnerBasis basis;
  std::size_t codimension = 0;
  std::vector<std::string> warnings;
};

/// <X_1 - p_1, ..., X_n - p_n>.
GroebnerBasis point_ideal(const Point& p, const MonomialOrder& order);

/// Ideal of all F with D^(h) F(p) = 0 for every condition index h.
/// Built degree by degree at the origin: the degree-l generators span the
/// kernel of the exact matrix of level-l derivative functionals applied to
/// generic degree-l forms; monomials one past the top order close it off.
/// Requires the condition index set to be a lower set (ModeError otherwise;
/// apply lower_set_closure or use Birkhoff mode instead).
NodeIdeal hermite_node_ideal(const NodeSpec& node, const MonomialOrder& order);

/// Gap-filled node ideal: the (b+1)-st power of the maximal ideal at the
/// node's point, where b is the largest prescribed total derivative order.
/// When the node has fewer directions than variables this imposes more
/// vanishing than the filled conditions alone; a warning records that.
NodeIdeal birkhoff_node_ideal(const NodeSpec& node, const MonomialOrder& order);

/// Mode dispatch (Lagrange nodes must carry exactly one order-zero value).
NodeIdeal node_ideal(const NodeSpec& node, Mode mode, const MonomialOrder& order);

/// Per-node ideals with node indices assigned; checks points are pairwise
/// distinct (DuplicateNodeError otherwise).
std::vector<NodeIdeal> build_node_ideals(std::span<const NodeSpec> nodes,
                                         Mode mode, const MonomialOrder& order);

/// Left fold of intersections over the given ideals, in order.
GroebnerBasis fold_intersection(std::span<const NodeIdeal> ideals,
                                const MonomialOrder& order);

/// Left fold of per-node ideal intersections, in node order.
/// Throws DuplicateNodeError when two nodes share a point.
GroebnerBasis problem_ideal(std::span<const NodeSpec> nodes, Mode mode,
                            const MonomialOrder& order);

/// Exponent vectors of total degree d in n variables (graded-lex ascending).
std::vector<ExponentVector> exponents_of_degree(std::size_t nvars,
                                                std::uint32_t d);

}  // namespace gbinterp
