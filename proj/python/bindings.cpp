#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gbinterp/problem_io.hpp"

namespace py = pybind11;
using namespace gbinterp;

namespace {

MonomialOrder order_from(const std::string& name) {
  auto order = MonomialOrder::from_name(name);
  if (!order) throw ParseError("unknown monomial order '" + name + "'");
  return *order;
}

Mode mode_from(const std::string& name) {
  auto mode = mode_from_name(name);
  if (!mode) throw ParseError("unknown mode '" + name + "'");
  return *mode;
}

ExponentVector exponent_from(const std::vector<std::uint32_t>& e) {
  return ExponentVector(std::vector<std::uint32_t>(e));
}

std::vector<Rational> rationals_from(const std::vector<std::string>& strs) {
  std::vector<Rational> out;
  out.reserve(strs.size());
  for (const auto& s : strs) out.push_back(Rational::from_string(s));
  return out;
}

Polynomial make_polynomial(
    std::size_t nvars,
    const std::vector<std::pair<std::vector<std::uint32_t>, std::string>>& terms) {
  Polynomial p(nvars);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars)
      throw DimensionError("exponent length does not match variable count");
    p.add_term(exponent_from(e), Rational::from_string(c));
  }
  return p;
}

py::dict terms_dict(const Polynomial& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) {
    py::tuple key(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
    out[key] = c.str();
  }
  return out;
}

NodeSpec make_node(
    const std::vector<std::string>& point,
    const std::vector<std::vector<std::string>>& directions,
    const std::vector<std::pair<std::vector<std::uint32_t>, std::string>>&
        conditions) {
  NodeSpec node;
  node.point = Point(rationals_from(point));
  std::vector<std::vector<Rational>> dirs;
  dirs.reserve(directions.size());
  for (const auto& d : directions) dirs.push_back(rationals_from(d));
  node.directions = DirectionSet(point.size(), std::move(dirs));
  for (const auto& [h, v] : conditions) {
    if (!node.conditions.entries
             .emplace(MultiIndex(h.begin(), h.end()), Rational::from_string(v))
             .second)
      throw ParseError("duplicate derivative multi-index in conditions");
  }
  return node;
}

py::list staircase_list(const Staircase& staircase) {
  py::list out;
  for (const auto& e : staircase.exponents) {
    py::tuple key(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
    out.append(key);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact multivariate Lagrange/Hermite/Birkhoff interpolation "
            "through Groebner bases over the rationals";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init(&make_polynomial), py::arg("nvars"), py::arg("terms"))
      .def_property_readonly("nvars", &Polynomial::nvars)
      .def("terms", &terms_dict)
      .def("total_degree", &Polynomial::total_degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("evaluate",
           [](const Polynomial& p, const std::vector<std::string>& point) {
             return p.evaluate(Point(rationals_from(point))).str();
           })
      .def("translate",
           [](const Polynomial& p, const std::vector<std::string>& point) {
             return p.translate(Point(rationals_from(point)));
           })
      .def(
          "to_string",
          [](const Polynomial& p, const std::string& order) {
            return p.to_string(order_from(order));
          },
          py::arg("order") = "grevlex")
      .def("__repr__", [](const Polynomial& p) {
        return p.to_string(MonomialOrder::grevlex());
      });

  py::class_<GroebnerBasis>(m, "GroebnerBasis")
      .def_readonly("generators", &GroebnerBasis::generators)
      .def_readonly("reduced", &GroebnerBasis::reduced)
      .def_property_readonly("order",
                             [](const GroebnerBasis& gb) { return gb.order.name(); })
      .def("__len__",
           [](const GroebnerBasis& gb) { return gb.generators.size(); });

  py::class_<NodeSpec>(m, "Node").def(
      py::init(&make_node), py::arg("point"),
      py::arg("directions") = std::vector<std::vector<std::string>>{},
      py::arg("conditions") =
          std::vector<std::pair<std::vector<std::uint32_t>, std::string>>{});

  py::class_<Solution>(m, "Solution")
      .def_readonly("polynomial", &Solution::polynomial)
      .def_readonly("nullspace", &Solution::nullspace)
      .def_readonly("free_parameters", &Solution::free_parameters)
      .def_readonly("rank", &Solution::rank)
      .def_readonly("warnings", &Solution::warnings)
      .def_property_readonly(
          "groebner_basis",
          [](const Solution& s) { return s.ideal; })
      .def_property_readonly(
          "staircase",
          [](const Solution& s) { return staircase_list(s.staircase); });

  m.def(
      "buchberger",
      [](const std::vector<Polynomial>& gens, const std::string& order) {
        return buchberger(gens, order_from(order));
      },
      py::arg("generators"), py::arg("order") = "grevlex",
      "Reduced Groebner basis of the generated ideal.");

  m.def(
      "normal_form",
      [](const Polynomial& f, const GroebnerBasis& gb) {
        return normal_form(f, gb);
      },
      py::arg("f"), py::arg("basis"),
      "Remainder of multivariate division by the basis.");

  m.def("intersect_ideals", &gbinterp::intersect, py::arg("a"), py::arg("b"),
        "Intersection of two ideals given by bases under the same order.");

  m.def(
      "staircase",
      [](const GroebnerBasis& gb) { return staircase_list(staircase(gb)); },
      py::arg("basis"),
      "Standard monomials of the quotient ring (requires a cofinite ideal).");

  m.def(
      "interpolate",
      [](const std::vector<NodeSpec>& nodes, const std::string& mode,
         const std::string& order) {
        return interpolate(nodes, mode_from(mode), order_from(order));
      },
      py::arg("nodes"), py::arg("mode") = "lagrange",
      py::arg("order") = "grevlex");

  m.def(
      "verify",
      [](const Polynomial& candidate, const std::vector<NodeSpec>& nodes) {
        VerifyReport report = verify(candidate, nodes);
        py::list entries;
        for (const auto& e : report.entries) {
          py::tuple h(e.h.size());
          for (std::size_t k = 0; k < e.h.size(); ++k) h[k] = e.h[k];
          entries.append(py::make_tuple(e.node_index, h, e.residual.str()));
        }
        return py::make_tuple(report.pass, entries);
      },
      py::arg("polynomial"), py::arg("nodes"),
      "Exact residual of every prescribed condition; pass iff all zero.");

  m.def(
      "solve_problem",
      [](const std::string& problem_json) {
        InterpolationProblem problem = parse_problem_text(problem_json);
        Solution solution =
            interpolate(problem.nodes, problem.mode, problem.order);
        return solution_to_json_text(solution, problem);
      },
      py::arg("problem_json"),
      "Solves a problem document and returns the solution document.");
}
