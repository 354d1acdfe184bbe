#include "gbinterp/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "gbinterp/errors.hpp"

namespace gbinterp {

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t var) {
  ExponentVector e(nvars);
  e.e_.at(var) = 1;
  return e;
}

std::uint32_t ExponentVector::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint32_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
}

namespace {

void check_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
}

}  // namespace

bool ExponentVector::divides(const ExponentVector& other) const {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  check_same_size(*this, o);
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::minus(const ExponentVector& o) const {
  check_same_size(*this, o);
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw Error("exponent difference would be negative");
    r[i] = e_[i] - o.e_[i];
  }
  return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::lcm(const ExponentVector& a, const ExponentVector& b) {
  check_same_size(a, b);
  std::vector<std::uint32_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  return os << ')';
}

MonomialOrder MonomialOrder::block(std::size_t split, OrderKind front,
                                   OrderKind back) {
  if (front == OrderKind::block || back == OrderKind::block)
    throw Error("nested block orders are not supported");
  MonomialOrder o(OrderKind::block);
  o.split_ = split;
  o.front_ = front;
  o.back_ = back;
  return o;
}

namespace {

using Span = std::span<const std::uint32_t>;

std::strong_ordering lex_span(Span a, Span b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::uint32_t deg_span(Span a) {
  std::uint32_t d = 0;
  for (auto x : a) d += x;
  return d;
}

std::strong_ordering compare_span(OrderKind kind, Span a, Span b) {
  switch (kind) {
    case OrderKind::lex:
      return lex_span(a, b);
    case OrderKind::grlex: {
      if (auto c = deg_span(a) <=> deg_span(b); c != 0) return c;
      return lex_span(a, b);
    }
    case OrderKind::grevlex: {
      if (auto c = deg_span(a) <=> deg_span(b); c != 0) return c;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case OrderKind::block:
      break;
  }
  throw InternalError("unreachable order kind");
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const {
  if (a.size() != b.size())
    throw DimensionError("comparing exponent vectors of different lengths");
  Span sa = a.values(), sb = b.values();
  if (kind_ != OrderKind::block) return compare_span(kind_, sa, sb);
  if (split_ > a.size())
    throw DimensionError("block split exceeds variable count");
  if (auto c = compare_span(front_, sa.first(split_), sb.first(split_)); c != 0)
    return c;
  return compare_span(back_, sa.subspan(split_), sb.subspan(split_));
}

namespace {

std::string kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grlex:
      return "grlex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::block:
      return "block";
  }
  return "?";
}

}  // namespace

std::string MonomialOrder::name() const {
  if (kind_ != OrderKind::block) return kind_name(kind_);
  return "block(" + std::to_string(split_) + ";" + kind_name(front_) + "," +
         kind_name(back_) + ")";
}

std::optional<MonomialOrder> MonomialOrder::from_name(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  if (name == "grevlex") return grevlex();
  return std::nullopt;
}

}  // namespace gbinterp
