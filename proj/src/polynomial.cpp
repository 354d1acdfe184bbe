#include "gbinterp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gbinterp/errors.hpp"

namespace gbinterp {

Point Point::negated() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(-x);
  return Point(std::move(r));
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(ExponentVector(nvars), std::move(c));
  return p;
}

Polynomial Polynomial::monomial(ExponentVector e, Rational c) {
  Polynomial p(e.size());
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  return monomial(ExponentVector::unit(nvars, var));
}

Rational Polynomial::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Polynomial::constant_term() const {
  return coeff(ExponentVector(nvars_));
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (c.is_zero()) return;
  if (e.size() != nvars_)
    throw DimensionError("term arity does not match polynomial arity");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("polynomials in " + std::to_string(a.nvars()) +
                         " and " + std::to_string(b.nvars()) + " variables");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea.plus(eb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Polynomial Polynomial::times_monomial(const ExponentVector& shift,
                                      const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e.plus(shift), v * c);
  return r;
}

Rational Polynomial::evaluate(const Point& p) const {
  if (p.dim() != nvars_)
    throw DimensionError("evaluating at a point of wrong dimension");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t j = 0; j < nvars_; ++j)
      if (e[j] != 0) term *= p[j].pow(e[j]);
    total += term;
  }
  return total;
}

Polynomial Polynomial::translate(const Point& p) const {
  if (p.dim() != nvars_)
    throw DimensionError("translating by a point of wrong dimension");
  Polynomial result(nvars_);
  for (const auto& [e, c] : terms_) {
    // c * prod_j (X_j + p_j)^{e_j}, expanded one variable at a time.
    Polynomial acc = Polynomial::constant(nvars_, c);
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (p[j].is_zero()) {
        std::vector<std::uint32_t> raw(nvars_, 0);
        raw[j] = e[j];
        acc = acc.times_monomial(ExponentVector(std::move(raw)), Rational(1));
        continue;
      }
      Polynomial binom(nvars_);
      mpz_class ck;
      for (std::uint32_t k = 0; k <= e[j]; ++k) {
        mpz_bin_uiui(ck.get_mpz_t(), e[j], k);
        std::vector<std::uint32_t> raw(nvars_, 0);
        raw[j] = k;
        binom.add_term(ExponentVector(std::move(raw)),
                       Rational(mpq_class(ck)) * p[j].pow(e[j] - k));
      }
      acc = acc * binom;
    }
    result += acc;
  }
  return result;
}

ExponentVector Polynomial::leading_exponent(const MonomialOrder& order) const {
  if (terms_.empty())
    throw ZeroPolynomialError("leading exponent of the zero polynomial");
  auto it = terms_.begin();
  const ExponentVector* best = &it->first;
  for (++it; it != terms_.end(); ++it)
    if (order.greater(it->first, *best)) best = &it->first;
  return *best;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_exponent(order));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  Rational lc = leading_coefficient(order);
  return scaled(lc.inverse());
}

std::string Polynomial::to_string(std::span<const std::string> names,
                                  const MonomialOrder& order) const {
  if (names.size() != nvars_)
    throw DimensionError("variable name list does not match arity");
  if (terms_.empty()) return "0";

  std::vector<const std::pair<const ExponentVector, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return order.greater(a->first, b->first); });

  std::ostringstream os;
  bool first = true;
  for (auto* t : sorted) {
    const auto& [e, c] = *t;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += names[j];
      if (e[j] > 1) vars += "^" + std::to_string(e[j]);
    }
    if (vars.empty()) {
      os << a.str();
    } else if (a.is_one()) {
      os << vars;
    } else {
      os << a.str() << '*' << vars;
    }
  }
  return os.str();
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
  auto names = default_variable_names(nvars_);
  return to_string(names, order);
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  static const char* kShort[] = {"X", "Y", "Z", "T"};
  std::vector<std::string> names;
  names.reserve(nvars);
  if (nvars <= 4) {
    for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(kShort[i]);
  } else {
    for (std::size_t i = 0; i < nvars; ++i)
      names.push_back("X" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace gbinterp
