#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gbinterp/monomial.hpp"
#include "gbinterp/rational.hpp"

namespace gbinterp {

/// Point of the affine space, with exact rational coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  std::span<const Rational> coords() const { return c_; }
  Point negated() const;

  bool operator==(const Point& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Stored coefficients are never zero; terms are kept in a canonical
/// (plain lexicographic) key order so iteration is deterministic.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, Rational c);
  static Polynomial monomial(ExponentVector e, Rational c = Rational(1));
  /// The single variable X_var.
  static Polynomial variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// Coefficient of X^e (zero if absent).
  Rational coeff(const ExponentVector& e) const;
  bool is_constant() const;
  Rational constant_term() const;
  std::uint32_t total_degree() const;  // 0 for the zero polynomial

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  /// this * c * X^shift
  Polynomial times_monomial(const ExponentVector& shift, const Rational& c) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rational evaluate(const Point& p) const;
  /// Returns g with g(q) = f(q + p): substitutes X_j -> X_j + p_j.
  Polynomial translate(const Point& p) const;

  ExponentVector leading_exponent(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;
  /// this / leading coefficient.
  Polynomial monic(const MonomialOrder& order) const;

  /// Terms in descending `order`, exact fraction coefficients,
  /// e.g. "3/2*X^2*Y - 1".
  std::string to_string(std::span<const std::string> names,
                        const MonomialOrder& order) const;
  std::string to_string(const MonomialOrder& order) const;

  /// Inserts (or accumulates onto) one term, dropping it if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// "X,Y,Z,T" for up to four variables, "X1..Xn" beyond that.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace gbinterp
