#include "gbinterp/derivations.hpp"

#include <algorithm>

#include "gbinterp/errors.hpp"
#include "gbinterp/linalg.hpp"

namespace gbinterp {

std::uint32_t total_order(const MultiIndex& h) {
  std::uint32_t d = 0;
  for (auto x : h) d += x;
  return d;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto da = total_order(a), db = total_order(b);
  if (da != db) return da < db;
  return a < b;
}

DirectionSet::DirectionSet(std::size_t nvars,
                           std::vector<std::vector<Rational>> vectors)
    : nvars_(nvars), vectors_(std::move(vectors)) {
  if (vectors_.size() > nvars_)
    throw InvalidDirectionError("more directions than variables");
  for (const auto& v : vectors_) {
    if (v.size() != nvars_)
      throw DimensionError("direction vector of wrong dimension");
    if (std::all_of(v.begin(), v.end(),
                    [](const Rational& x) { return x.is_zero(); }))
      throw InvalidDirectionError("zero direction vector");
  }
  if (!vectors_.empty()) {
    RationalMatrix rows(vectors_.begin(), vectors_.end());
    if (matrix_rank(rows) != vectors_.size())
      throw InvalidDirectionError("linearly dependent direction vectors");
  }
}

void NodeSpec::validate(std::size_t nvars) const {
  if (point.dim() != nvars)
    throw DimensionError("node point of wrong dimension");
  if (directions.nvars() != nvars && directions.count() > 0)
    throw DimensionError("node directions of wrong dimension");
  if (conditions.entries.empty())
    throw ModeError("node without conditions");
  for (const auto& [h, v] : conditions.entries) {
    if (h.size() != directions.count())
      throw DimensionError("condition multi-index length " +
                           std::to_string(h.size()) + " does not match " +
                           std::to_string(directions.count()) + " directions");
  }
}

Polynomial directional_derivative(const Polynomial& f,
                                  std::span<const Rational> direction) {
  if (direction.size() != f.nvars())
    throw DimensionError("direction of wrong dimension");
  if (std::all_of(direction.begin(), direction.end(),
                  [](const Rational& x) { return x.is_zero(); }))
    throw InvalidDirectionError("derivative along the zero vector");

  Polynomial result(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t j = 0; j < f.nvars(); ++j) {
      if (e[j] == 0 || direction[j].is_zero()) continue;
      std::vector<std::uint32_t> d(e.values().begin(), e.values().end());
      --d[j];
      result.add_term(ExponentVector(std::move(d)),
                      c * direction[j] * Rational(static_cast<long>(e[j])));
    }
  }
  return result;
}

Polynomial iterated_derivative(const Polynomial& f, const DirectionSet& dirs,
                               const MultiIndex& h) {
  if (h.size() != dirs.count())
    throw DimensionError("derivative multi-index length does not match "
                         "direction count");
  Polynomial g = f;
  for (std::size_t l = 0; l < h.size(); ++l)
    for (std::uint32_t k = 0; k < h[l]; ++k) {
      if (g.is_zero()) return g;
      g = directional_derivative(g, dirs.vector(l));
    }
  return g;
}

namespace {

void check_equal_lengths(const MultiIndexSet& H) {
  if (H.empty()) return;
  std::size_t s = H.begin()->size();
  for (const auto& h : H)
    if (h.size() != s)
      throw DimensionError("multi-indices of mixed lengths");
}

}  // namespace

bool is_lower_set(const MultiIndexSet& H) {
  check_equal_lengths(H);
  for (const auto& h : H) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] == 0) continue;
      MultiIndex below = h;
      --below[i];
      if (!H.count(below)) return false;
    }
  }
  return true;
}

MultiIndexSet lower_set_closure(const MultiIndexSet& H) {
  check_equal_lengths(H);
  MultiIndexSet closed;
  std::vector<MultiIndex> stack(H.begin(), H.end());
  while (!stack.empty()) {
    MultiIndex h = std::move(stack.back());
    stack.pop_back();
    if (!closed.insert(h).second) continue;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] == 0) continue;
      MultiIndex below = h;
      --below[i];
      stack.push_back(std::move(below));
    }
  }
  return closed;
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t s, std::uint32_t d) {
  std::vector<MultiIndex> out;
  if (s == 0) {
    if (d == 0) out.push_back(MultiIndex{});
    return out;
  }
  MultiIndex current(s, 0);
  // Recursive enumeration; the final sort fixes the canonical order.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
    if (pos + 1 == s) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (std::uint32_t k = 0; k <= remaining; ++k) {
      current[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

GapFill fill_gaps(const MultiIndexSet& H) {
  if (H.empty()) throw ModeError("empty condition set");
  check_equal_lengths(H);
  const std::size_t s = H.begin()->size();
  GapFill fill;
  fill.max_order = 0;
  for (const auto& h : H) fill.max_order = std::max(fill.max_order, total_order(h));
  for (std::uint32_t d = 0; d <= fill.max_order; ++d)
    for (auto& h : multi_indices_of_order(s, d)) fill.filled.insert(std::move(h));
  return fill;
}

}  // namespace gbinterp
