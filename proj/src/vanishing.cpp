#include "gbinterp/vanishing.hpp"

#include <algorithm>

#include "gbinterp/errors.hpp"
#include "gbinterp/linalg.hpp"

namespace gbinterp {

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::lagrange:
      return "lagrange";
    case Mode::hermite:
      return "hermite";
    case Mode::birkhoff:
      return "birkhoff";
  }
  return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
  if (name == "lagrange") return Mode::lagrange;
  if (name == "hermite") return Mode::hermite;
  if (name == "birkhoff") return Mode::birkhoff;
  return std::nullopt;
}

std::vector<ExponentVector> exponents_of_degree(std::size_t nvars,
                                                std::uint32_t d) {
  std::vector<ExponentVector> out;
  for (auto& h : multi_indices_of_order(nvars, d))
    out.emplace_back(std::vector<std::uint32_t>(h.begin(), h.end()));
  return out;
}

GroebnerBasis point_ideal(const Point& p, const MonomialOrder& order) {
  const std::size_t n = p.dim();
  std::vector<Polynomial> gens;
  gens.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial g = Polynomial::variable(n, j);
    g.add_term(ExponentVector(n), -p[j]);
    gens.push_back(std::move(g));
  }
  return buchberger(gens, order);
}

namespace {

MultiIndexSet condition_indices(const NodeSpec& node) {
  MultiIndexSet H;
  for (const auto& [h, v] : node.conditions.entries) H.insert(h);
  return H;
}

NodeIdeal finish_node_ideal(std::vector<Polynomial> gens,
                            const MonomialOrder& order,
                            std::vector<std::string> warnings) {
  NodeIdeal ideal;
  ideal.basis = buchberger(gens, order);
  ideal.codimension = staircase(ideal.basis).size();
  ideal.warnings = std::move(warnings);
  return ideal;
}

}  // namespace

NodeIdeal hermite_node_ideal(const NodeSpec& node, const MonomialOrder& order) {
  const std::size_t n = node.point.dim();
  node.validate(n);
  MultiIndexSet H = condition_indices(node);
  if (!is_lower_set(H))
    throw ModeError(
        "condition indices do not form a lower set; use birkhoff mode, or "
        "complete them with lower_set_closure and supply the missing values");

  std::uint32_t r = 0;
  for (const auto& h : H) r = std::max(r, total_order(h));

  if (r == 0)
    return {0, point_ideal(node.point, order), 1, {}};

  // Work at the origin; the grading decouples the levels there.
  std::vector<Polynomial> gens;
  for (std::uint32_t l = 1; l <= r; ++l) {
    std::vector<ExponentVector> alphas = exponents_of_degree(n, l);
    std::vector<MultiIndex> level;
    for (const auto& h : H)
      if (total_order(h) == l) level.push_back(h);

    RationalMatrix functional_rows;
    functional_rows.reserve(level.size());
    const Point origin{std::vector<Rational>(n, Rational(0))};
    for (const auto& h : level) {
      RationalRow row;
      row.reserve(alphas.size());
      for (const auto& alpha : alphas) {
        Polynomial d = iterated_derivative(Polynomial::monomial(alpha),
                                           node.directions, h);
        row.push_back(d.evaluate(origin));
      }
      functional_rows.push_back(std::move(row));
    }

    for (const auto& coeffs : kernel_basis(functional_rows, alphas.size())) {
      Polynomial g(n);
      for (std::size_t k = 0; k < alphas.size(); ++k)
        g.add_term(alphas[k], coeffs[k]);
      gens.push_back(std::move(g));
    }
  }
  for (const auto& alpha : exponents_of_degree(n, r + 1))
    gens.push_back(Polynomial::monomial(alpha));

  // Move the origin-centered generators to the node's point.
  const Point minus_p = node.point.negated();
  for (auto& g : gens) g = g.translate(minus_p);

  return finish_node_ideal(std::move(gens), order, {});
}

NodeIdeal birkhoff_node_ideal(const NodeSpec& node, const MonomialOrder& order) {
  const std::size_t n = node.point.dim();
  node.validate(n);
  GapFill fill = fill_gaps(condition_indices(node));

  std::vector<std::string> warnings;
  if (node.directions.count() < n && fill.max_order > 0)
    warnings.push_back(
        "node has fewer directions than variables: the gap-filled ideal is "
        "the full maximal-ideal power, which vanishes more than the filled "
        "conditions require");

  std::vector<Polynomial> gens;
  for (const auto& e : exponents_of_degree(n, fill.max_order + 1)) {
    Polynomial g = Polynomial::constant(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      Polynomial lin = Polynomial::variable(n, j);
      lin.add_term(ExponentVector(n), -node.point[j]);
      for (std::uint32_t k = 0; k < e[j]; ++k) g = g * lin;
    }
    gens.push_back(std::move(g));
  }
  return finish_node_ideal(std::move(gens), order, std::move(warnings));
}

NodeIdeal node_ideal(const NodeSpec& node, Mode mode,
                     const MonomialOrder& order) {
  switch (mode) {
    case Mode::lagrange: {
      node.validate(node.point.dim());
      if (node.conditions.size() != 1 ||
          total_order(node.conditions.entries.begin()->first) != 0)
        throw ModeError(
            "lagrange mode admits exactly one order-zero condition per node");
      return {0, point_ideal(node.point, order), 1, {}};
    }
    case Mode::hermite:
      return hermite_node_ideal(node, order);
    case Mode::birkhoff:
      return birkhoff_node_ideal(node, order);
  }
  throw InternalError("unreachable mode");
}

std::vector<NodeIdeal> build_node_ideals(std::span<const NodeSpec> nodes,
                                         Mode mode,
                                         const MonomialOrder& order) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].point == nodes[j].point)
        throw DuplicateNodeError("nodes " + std::to_string(i) + " and " +
                                 std::to_string(j) + " share a point");
  std::vector<NodeIdeal> ideals;
  ideals.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ideals.push_back(node_ideal(nodes[i], mode, order));
    ideals.back().node_index = i;
  }
  return ideals;
}

GroebnerBasis fold_intersection(std::span<const NodeIdeal> ideals,
                                const MonomialOrder& order) {
  if (ideals.empty()) {
    GroebnerBasis gb;
    gb.order = order;
    gb.reduced = true;
    return gb;
  }
  GroebnerBasis acc = ideals.front().basis;
  for (std::size_t i = 1; i < ideals.size(); ++i)
    acc = intersect(acc, ideals[i].basis);
  return acc;
}

GroebnerBasis problem_ideal(std::span<const NodeSpec> nodes, Mode mode,
                            const MonomialOrder& order) {
  return fold_intersection(build_node_ideals(nodes, mode, order), order);
}

}  // namespace gbinterp
