#include <doctest.h>

#include <random>

#include "gbinterp/errors.hpp"
#include "gbinterp/linalg.hpp"
#include "gbinterp/vanishing.hpp"
#include "oracles.hpp"
#include "problem_gen.hpp"
#include "test_util.hpp"

using namespace gbinterp;
using namespace gbinterp::testing;

namespace {

NodeSpec node_at(std::vector<long> coords,
                 std::vector<std::vector<long>> directions,
                 std::vector<MultiIndex> indices) {
  std::vector<Rational> p;
  for (long c : coords) p.emplace_back(c);
  std::vector<std::vector<Rational>> dirs;
  for (const auto& d : directions) {
    std::vector<Rational> v;
    for (long c : d) v.emplace_back(c);
    dirs.push_back(std::move(v));
  }
  ConditionSet conditions;
  for (auto& h : indices) conditions.entries.emplace(std::move(h), Rational(1));
  NodeSpec node;
  node.point = Point(std::move(p));
  node.directions = DirectionSet(coords.size(), std::move(dirs));
  node.conditions = std::move(conditions);
  return node;
}

}  // namespace

TEST_CASE("hermite node ideal in one variable with value and slope") {
  NodeSpec node = node_at({0}, {{1}}, {{0}, {1}});
  NodeIdeal ideal = hermite_node_ideal(node, MonomialOrder::lex());
  CHECK(ideal.codimension == 2);
  REQUIRE(ideal.basis.generators.size() == 1);
  CHECK(ideal.basis.generators[0] == mono({2}));
}

TEST_CASE("hermite node ideal with full first-order data in the plane") {
  NodeSpec node = node_at({0, 0}, {{1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}});
  NodeIdeal ideal = hermite_node_ideal(node, MonomialOrder::grevlex());
  CHECK(ideal.codimension == 3);
  GroebnerBasis expected = buchberger(
      {mono({2, 0}), mono({1, 1}), mono({0, 2})}, MonomialOrder::grevlex());
  CHECK(same_ideal(ideal.basis, expected));
}

TEST_CASE("order-zero hermite node is the point ideal") {
  NodeSpec node = node_at({3, -2}, {{1, 0}, {0, 1}}, {{0, 0}});
  NodeIdeal ideal = hermite_node_ideal(node, MonomialOrder::lex());
  CHECK(ideal.codimension == 1);
  for (const auto& g : ideal.basis.generators)
    CHECK(g.evaluate(node.point) == Rational(0));
  CHECK(same_ideal(ideal.basis, point_ideal(node.point, MonomialOrder::lex())));
}

TEST_CASE("hermite rejects condition sets with gaps") {
  NodeSpec node = node_at({0, 0}, {{1, 0}, {0, 1}}, {{0, 0}, {2, 0}});
  CHECK_THROWS_AS(hermite_node_ideal(node, MonomialOrder::lex()), ModeError);
}

TEST_CASE("node ideal generators satisfy every homogeneous condition") {
  std::mt19937 rng(20240620);
  Point origin({Rational(0), Rational(0)});
  for (int trial = 0; trial < 10; ++trial) {
    DirectionSet dirs = spanning_directions(rng, 2);
    MultiIndexSet H = random_lower_set(rng, 2, 2);
    NodeSpec node = make_node(distinct_points(rng, 1, 2)[0], dirs,
                              with_random_values(H, rng));
    NodeIdeal ideal = hermite_node_ideal(node, MonomialOrder::grevlex());
    for (const auto& g : ideal.basis.generators)
      for (const auto& h : H)
        CHECK(iterated_derivative(g, dirs, h).evaluate(node.point) ==
              Rational(0));
    CHECK(ideal.codimension == H.size());
  }
}

TEST_CASE("hermite ideal equals the brute-force kernel ideal") {
  // Exhaustive at desk scale: every lower set with b <= 2, several points
  // and direction sets, one and two variables.
  MonomialOrder order = MonomialOrder::grevlex();

  for (const auto& H : all_lower_sets(1, 2)) {
    for (long coord : {0L, 2L}) {
      NodeSpec node = node_at({coord}, {{1}}, {});
      for (const auto& h : H) node.conditions.entries.emplace(h, Rational(1));
      NodeIdeal ideal = hermite_node_ideal(node, order);
      GroebnerBasis oracle = buchberger(brute_force_generators(node), order);
      CHECK(same_ideal(ideal.basis, oracle));
    }
  }

  std::vector<std::vector<std::vector<long>>> direction_choices = {
      {{1, 0}, {0, 1}}, {{1, 2}, {1, -1}}, {{2, 1}}};
  std::vector<std::vector<long>> point_choices = {{0, 0}, {1, -2}};
  for (const auto& dirs : direction_choices) {
    const std::size_t s = dirs.size();
    for (const auto& H : all_lower_sets(s, 2)) {
      for (const auto& pt : point_choices) {
        NodeSpec node = node_at(pt, dirs, {});
        for (const auto& h : H) node.conditions.entries.emplace(h, Rational(1));
        NodeIdeal ideal = hermite_node_ideal(node, order);
        GroebnerBasis oracle = buchberger(brute_force_generators(node), order);
        CHECK(same_ideal(ideal.basis, oracle));
      }
    }
  }
}

TEST_CASE("hermite ideals are translation covariant") {
  std::mt19937 rng(20240621);
  for (int trial = 0; trial < 8; ++trial) {
    DirectionSet dirs = spanning_directions(rng, 2);
    MultiIndexSet H = random_lower_set(rng, 2, 2);
    Point p = distinct_points(rng, 1, 2)[0];

    NodeSpec at_p = make_node(p, dirs, with_random_values(H, rng));
    NodeSpec at_origin = make_node(Point({Rational(0), Rational(0)}), dirs,
                                   at_p.conditions);
    MonomialOrder order = MonomialOrder::grevlex();
    NodeIdeal ideal_p = hermite_node_ideal(at_p, order);
    NodeIdeal ideal_0 = hermite_node_ideal(at_origin, order);

    std::vector<Polynomial> moved;
    for (const auto& g : ideal_0.basis.generators)
      moved.push_back(g.translate(p.negated()));
    CHECK(same_ideal(ideal_p.basis, buchberger(moved, order)));
  }
}

TEST_CASE("birkhoff node ideal is the shifted power ideal") {
  NodeSpec node = node_at({1, 2}, {{1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}});
  NodeIdeal ideal = birkhoff_node_ideal(node, MonomialOrder::grevlex());
  CHECK(ideal.codimension == 3);
  auto x = X(2, 0), y = X(2, 1);
  Polynomial xm1 = x - C(2, Rational(1)), ym2 = y - C(2, Rational(2));
  GroebnerBasis expected =
      buchberger({xm1 * xm1, xm1 * ym2, ym2 * ym2}, MonomialOrder::grevlex());
  CHECK(same_ideal(ideal.basis, expected));
  CHECK(ideal.warnings.empty());
}

TEST_CASE("order-zero birkhoff node is the point ideal") {
  NodeSpec node = node_at({5}, {{1}}, {{0}});
  NodeIdeal ideal = birkhoff_node_ideal(node, MonomialOrder::lex());
  CHECK(ideal.codimension == 1);
  CHECK(same_ideal(ideal.basis, point_ideal(node.point, MonomialOrder::lex())));
}

TEST_CASE("birkhoff codimension is the binomial count") {
  NodeSpec node = node_at({1, 2, 3}, {{1, 1, 0}, {1, 1, 1}, {1, 0, 0}},
                          {{0, 0, 0}, {0, 0, 2}});
  NodeIdeal ideal = birkhoff_node_ideal(node, MonomialOrder::grevlex());
  CHECK(ideal.codimension == 10);  // C(3+2,3) = 1 + 3 + 6
}

TEST_CASE("birkhoff warns when directions do not span") {
  NodeSpec node = node_at({0, 0}, {{1, 1}}, {{0}, {2}});
  NodeIdeal ideal = birkhoff_node_ideal(node, MonomialOrder::grevlex());
  CHECK(ideal.warnings.size() == 1);
  // The ideal vanishes for every completed condition even so.
  GapFill fill = fill_gaps({MultiIndex{0}, MultiIndex{1}, MultiIndex{2}});
  for (const auto& g : ideal.basis.generators)
    for (const auto& h : fill.filled)
      CHECK(iterated_derivative(g, node.directions, h).evaluate(node.point) ==
            Rational(0));
}

TEST_CASE("problem ideal of two aligned points") {
  std::vector<NodeSpec> nodes = {node_at({0, 0}, {}, {MultiIndex{}}),
                                 node_at({1, 0}, {}, {MultiIndex{}})};
  GroebnerBasis ideal = problem_ideal(nodes, Mode::lagrange,
                                      MonomialOrder::lex());
  auto x = X(2, 0), y = X(2, 1);
  GroebnerBasis expected = buchberger({y, x * x - x}, MonomialOrder::lex());
  CHECK(same_ideal(ideal, expected));
  CHECK(staircase(ideal).size() == 2);
}

TEST_CASE("single-node problem ideal is that node's ideal") {
  NodeSpec node = node_at({2, -1}, {{1, 0}, {0, 1}}, {{0, 0}, {1, 0}});
  std::vector<NodeSpec> nodes = {node};
  GroebnerBasis folded =
      problem_ideal(nodes, Mode::hermite, MonomialOrder::grevlex());
  NodeIdeal single = hermite_node_ideal(node, MonomialOrder::grevlex());
  CHECK(same_ideal(folded, single.basis));
}

TEST_CASE("duplicate points are rejected") {
  std::vector<NodeSpec> nodes = {node_at({1, 1}, {}, {MultiIndex{}}),
                                 node_at({1, 1}, {}, {MultiIndex{}})};
  CHECK_THROWS_AS(problem_ideal(nodes, Mode::lagrange, MonomialOrder::lex()),
                  DuplicateNodeError);
}

TEST_CASE("lagrange mode rejects derivative conditions") {
  NodeSpec node = node_at({0}, {{1}}, {{0}, {1}});
  CHECK_THROWS_AS(node_ideal(node, Mode::lagrange, MonomialOrder::lex()),
                  ModeError);
}

TEST_CASE("codimension is additive across nodes") {
  std::mt19937 rng(20240622);
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t nvars = 1 + rng() % 2;
    std::size_t count = 1 + rng() % 3;
    std::vector<NodeSpec> nodes =
        random_birkhoff_problem(rng, nvars, count, 2, false);
    std::size_t total = 0;
    for (const auto& node : nodes)
      total += node_ideal(node, Mode::birkhoff, MonomialOrder::grevlex())
                   .codimension;
    GroebnerBasis ideal =
        problem_ideal(nodes, Mode::birkhoff, MonomialOrder::grevlex());
    CHECK(staircase(ideal).size() == total);
  }
}

TEST_CASE("node ideals at distinct points are comaximal") {
  std::mt19937 rng(20240623);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<NodeSpec> nodes = random_full_hermite_problem(rng, 2, 2, 2);
    MonomialOrder order = MonomialOrder::grevlex();
    NodeIdeal a = hermite_node_ideal(nodes[0], order);
    NodeIdeal b = hermite_node_ideal(nodes[1], order);
    std::vector<Polynomial> joined = a.basis.generators;
    joined.insert(joined.end(), b.basis.generators.begin(),
                  b.basis.generators.end());
    GroebnerBasis sum = buchberger(joined, order);
    CHECK(sum.is_unit_ideal());
    CHECK(normal_form(C(2, Rational(1)), sum).is_zero());
  }
}
