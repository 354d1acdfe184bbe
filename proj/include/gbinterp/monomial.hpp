#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gbinterp {

/// Exponent vector of a monomial in a fixed number of variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit ExponentVector(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static ExponentVector unit(std::size_t nvars, std::size_t var);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::span<const std::uint32_t> values() const { return e_; }

  std::uint32_t total_degree() const;
  bool is_zero() const;

  /// Componentwise divisibility: this | other.
  bool divides(const ExponentVector& other) const;

  ExponentVector plus(const ExponentVector& o) const;
  /// Componentwise difference; requires o.divides(*this).
  ExponentVector minus(const ExponentVector& o) const;
  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

  bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
  /// Structural (plain lexicographic) compare, used for canonical map keys.
  auto operator<=>(const ExponentVector& o) const { return e_ <=> o.e_; }

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& e);

 private:
  std::vector<std::uint32_t> e_;
};

enum class OrderKind { lex, grlex, grevlex, block };

/// Total multiplicative well-order on exponent vectors: lexicographic,
/// graded lexicographic, graded reverse lexicographic, or a two-block
/// elimination order (front block compared first).
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  /// Block order: the first `split` variables are compared with `front`;
  /// ties fall through to `back` on the remaining variables. Eliminating
  /// the front block is what makes this usable for ideal intersection.
  static MonomialOrder block(std::size_t split, OrderKind front, OrderKind back);

  OrderKind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  OrderKind front_kind() const { return front_; }
  OrderKind back_kind() const { return back_; }

  std::strong_ordering compare(const ExponentVector& a,
                               const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string name() const;
  static std::optional<MonomialOrder> from_name(std::string_view name);

  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind_;
  std::size_t split_ = 0;
  OrderKind front_ = OrderKind::lex;
  OrderKind back_ = OrderKind::grevlex;
};

}  // namespace gbinterp
