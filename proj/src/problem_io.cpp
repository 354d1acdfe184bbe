#include "gbinterp/problem_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gbinterp/errors.hpp"

namespace gbinterp {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& field(const json& obj, const std::string& path,
                  const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::string string_at(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

Rational rational_at(const json& value, const std::string& path) {
  try {
    return Rational::from_string(string_at(value, path));
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

std::vector<Rational> rational_vector(const json& value,
                                      const std::string& path,
                                      std::size_t expected_len) {
  if (!value.is_array()) fail(path, "expected an array");
  if (value.size() != expected_len)
    fail(path, "expected " + std::to_string(expected_len) + " entries, got " +
                   std::to_string(value.size()));
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(rational_at(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

MultiIndex multi_index_at(const json& value, const std::string& path,
                          std::size_t expected_len) {
  if (!value.is_array()) fail(path, "expected an array of integers");
  if (value.size() != expected_len)
    fail(path, "expected " + std::to_string(expected_len) +
                   " derivative orders, got " + std::to_string(value.size()));
  MultiIndex h;
  h.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& x = value[i];
    if (!x.is_number_unsigned())
      fail(path + "[" + std::to_string(i) + "]", "expected a natural number");
    h.push_back(x.get<std::uint32_t>());
  }
  return h;
}

}  // namespace

InterpolationProblem parse_problem_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") + e.what());
  }

  InterpolationProblem problem;

  const json& vars = field(doc, "problem", "variables");
  if (!vars.is_array() || vars.empty())
    fail("variables", "expected a nonempty array of names");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string name = string_at(vars[i], "variables[" + std::to_string(i) + "]");
    if (name.empty() || !seen.insert(name).second)
      fail("variables[" + std::to_string(i) + "]", "empty or duplicate name");
    problem.variables.push_back(std::move(name));
  }
  const std::size_t n = problem.variables.size();

  std::string order_name = string_at(field(doc, "problem", "order"), "order");
  auto order = MonomialOrder::from_name(order_name);
  if (!order) fail("order", "unknown order '" + order_name +
                            "' (expected lex, grlex, or grevlex)");
  problem.order = *order;

  std::string mode_str = string_at(field(doc, "problem", "mode"), "mode");
  auto mode = mode_from_name(mode_str);
  if (!mode) fail("mode", "unknown mode '" + mode_str +
                          "' (expected lagrange, hermite, or birkhoff)");
  problem.mode = *mode;

  const json& nodes = field(doc, "problem", "nodes");
  if (!nodes.is_array() || nodes.empty())
    fail("nodes", "expected a nonempty array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string npath = "nodes[" + std::to_string(i) + "]";
    const json& jnode = nodes[i];
    NodeSpec node;
    node.point = Point(rational_vector(field(jnode, npath, "point"),
                                       npath + ".point", n));

    std::vector<std::vector<Rational>> dirs;
    if (jnode.contains("directions")) {
      const json& jdirs = jnode["directions"];
      if (!jdirs.is_array()) fail(npath + ".directions", "expected an array");
      for (std::size_t d = 0; d < jdirs.size(); ++d)
        dirs.push_back(rational_vector(
            jdirs[d], npath + ".directions[" + std::to_string(d) + "]", n));
    }
    try {
      node.directions = DirectionSet(n, std::move(dirs));
    } catch (const Error& e) {
      fail(npath + ".directions", e.what());
    }

    const json& jconds = field(jnode, npath, "conditions");
    if (!jconds.is_array() || jconds.empty())
      fail(npath + ".conditions", "expected a nonempty array");
    for (std::size_t c = 0; c < jconds.size(); ++c) {
      const std::string cpath = npath + ".conditions[" + std::to_string(c) + "]";
      const json& jcond = jconds[c];
      MultiIndex h = multi_index_at(field(jcond, cpath, "h"), cpath + ".h",
                                    node.directions.count());
      Rational value = rational_at(field(jcond, cpath, "value"), cpath + ".value");
      if (!node.conditions.entries.emplace(std::move(h), std::move(value)).second)
        fail(cpath + ".h", "duplicate derivative multi-index");
    }
    problem.nodes.push_back(std::move(node));
  }
  return problem;
}

InterpolationProblem load_problem(const std::string& path) {
  return parse_problem_text(read_text_file(path));
}

std::string solution_to_json_text(const Solution& solution,
                                  const InterpolationProblem& problem) {
  ordered_json doc;
  doc["variables"] = problem.variables;
  doc["order"] = problem.order.name();
  doc["mode"] = mode_name(problem.mode);
  doc["polynomial_text"] =
      solution.polynomial.to_string(problem.variables, problem.order);

  ordered_json coeffs = ordered_json::array();
  for (const auto& [e, c] : solution.polynomial.terms()) {
    ordered_json entry;
    entry["exponent"] = std::vector<std::uint32_t>(e.values().begin(),
                                                   e.values().end());
    entry["value"] = c.str();
    coeffs.push_back(std::move(entry));
  }
  doc["coefficients"] = std::move(coeffs);

  ordered_json stairs = ordered_json::array();
  for (const auto& e : solution.staircase.exponents)
    stairs.push_back(std::vector<std::uint32_t>(e.values().begin(),
                                                e.values().end()));
  doc["staircase"] = std::move(stairs);
  doc["free_parameters"] = solution.free_parameters;

  ordered_json basis = ordered_json::array();
  for (const auto& g : solution.ideal.generators)
    basis.push_back(g.to_string(problem.variables, problem.order));
  doc["groebner_basis"] = std::move(basis);

  ordered_json null_basis = ordered_json::array();
  for (const auto& g : solution.nullspace)
    null_basis.push_back(g.to_string(problem.variables, problem.order));
  doc["nullspace"] = std::move(null_basis);

  return doc.dump(2) + "\n";
}

SolutionDocument parse_solution_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution file is not valid JSON: ") + e.what());
  }
  SolutionDocument out;
  const json& vars = field(doc, "solution", "variables");
  if (!vars.is_array() || vars.empty())
    fail("variables", "expected a nonempty array of names");
  for (std::size_t i = 0; i < vars.size(); ++i)
    out.variables.push_back(
        string_at(vars[i], "variables[" + std::to_string(i) + "]"));
  const std::size_t n = out.variables.size();

  if (doc.contains("order")) {
    auto order = MonomialOrder::from_name(string_at(doc["order"], "order"));
    if (!order) fail("order", "unknown order");
    out.order = *order;
  }
  if (doc.contains("free_parameters")) {
    if (!doc["free_parameters"].is_number_unsigned())
      fail("free_parameters", "expected a natural number");
    out.free_parameters = doc["free_parameters"].get<std::size_t>();
  }

  out.polynomial = Polynomial(n);
  const json& coeffs = field(doc, "solution", "coefficients");
  if (!coeffs.is_array()) fail("coefficients", "expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string cpath = "coefficients[" + std::to_string(i) + "]";
    const json& entry = coeffs[i];
    MultiIndex e = multi_index_at(field(entry, cpath, "exponent"),
                                  cpath + ".exponent", n);
    Rational value = rational_at(field(entry, cpath, "value"), cpath + ".value");
    out.polynomial.add_term(
        ExponentVector(std::vector<std::uint32_t>(e.begin(), e.end())), value);
  }
  return out;
}

SolutionDocument load_solution(const std::string& path) {
  return parse_solution_text(read_text_file(path));
}

std::vector<GridAxis> parse_grid_spec(const std::string& spec,
                                      std::size_t nvars) {
  std::vector<GridAxis> axes;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    GridAxis axis;
    double lo, hi;
    long steps;
    char extra;
    if (std::sscanf(part.c_str(), "%lf:%lf:%ld%c", &lo, &hi, &steps, &extra) != 3 ||
        steps < 1)
      throw ParseError("bad grid axis '" + part +
                       "' (expected lo:hi:steps with steps >= 1)");
    axis.lo = lo;
    axis.hi = hi;
    axis.steps = static_cast<std::size_t>(steps);
    axes.push_back(axis);
  }
  if (axes.size() != nvars)
    throw ParseError("grid spec has " + std::to_string(axes.size()) +
                     " axes for " + std::to_string(nvars) + " variables");
  return axes;
}

ReferenceTable load_reference_csv(const std::string& path) {
  std::string text = read_text_file(path);
  std::stringstream ss(text);
  std::string line;
  ReferenceTable table;
  bool header = true;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {  // column names, skipped
      header = false;
      continue;
    }
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("reference CSV cell '" + cell + "' is not numeric");
      }
    }
    if (row.empty()) throw ParseError("empty reference CSV row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

SampleResult sample_polynomial(const Polynomial& polynomial,
                               const std::vector<std::string>& variables,
                               const std::vector<GridAxis>& grid,
                               const ReferenceTable* reference) {
  const std::size_t n = variables.size();
  if (polynomial.nvars() != n)
    throw DimensionError("polynomial arity does not match variable names");
  if (grid.size() != n) throw DimensionError("grid arity mismatch");

  std::size_t total = 1;
  for (const auto& axis : grid) total *= axis.steps;
  if (reference && reference->rows.size() != total)
    throw ParseError("reference CSV has " +
                     std::to_string(reference->rows.size()) + " rows, grid has " +
                     std::to_string(total) + " points");

  // Double view of the exact polynomial.
  struct DTerm {
    std::vector<std::uint32_t> e;
    double c;
  };
  std::vector<DTerm> terms;
  terms.reserve(polynomial.term_count());
  for (const auto& [e, c] : polynomial.terms())
    terms.push_back({{e.values().begin(), e.values().end()}, c.to_double()});

  std::ostringstream csv;
  for (std::size_t j = 0; j < n; ++j) csv << variables[j] << ',';
  csv << 'P';
  if (reference) csv << ",reference,difference";
  csv << '\n';

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n, 0.0);
  double max_diff = 0.0;
  for (std::size_t row = 0; row < total; ++row) {
    // Decode row -> per-axis index, first variable slowest.
    std::size_t rem = row;
    for (std::size_t j = n; j-- > 0;) {
      idx[j] = rem % grid[j].steps;
      rem /= grid[j].steps;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const GridAxis& a = grid[j];
      x[j] = a.steps == 1 ? a.lo
                          : a.lo + static_cast<double>(idx[j]) * (a.hi - a.lo) /
                                       static_cast<double>(a.steps - 1);
    }
    double value = 0.0;
    for (const auto& t : terms) {
      double m = t.c;
      for (std::size_t j = 0; j < n; ++j)
        for (std::uint32_t k = 0; k < t.e[j]; ++k) m *= x[j];
      value += m;
    }
    for (std::size_t j = 0; j < n; ++j) csv << format_double(x[j]) << ',';
    csv << format_double(value);
    if (reference) {
      const auto& ref_row = reference->rows[row];
      if (ref_row.size() >= n + 1) {
        for (std::size_t j = 0; j < n; ++j)
          if (std::fabs(ref_row[j] - x[j]) > 1e-9)
            throw ParseError("reference CSV row " + std::to_string(row) +
                             " does not align with the grid");
      }
      double ref = ref_row.back();
      double diff = value - ref;
      max_diff = std::max(max_diff, std::fabs(diff));
      csv << ',' << format_double(ref) << ',' << format_double(diff);
    }
    csv << '\n';
  }

  SampleResult result;
  if (reference) {
    csv << "max_abs_difference," << format_double(max_diff) << '\n';
    result.max_abs_difference = max_diff;
  }
  result.csv = csv.str();
  return result;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
}

}  // namespace gbinterp
