#include "gbinterp/rational.hpp"

#include <cctype>
#include <ostream>

#include "gbinterp/errors.hpp"

namespace gbinterp {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(unsigned long e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  mpq_class r(num, den);  // den > 0 and gcd(num,den)=1 already
  return Rational(std::move(r));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw ParseError("invalid numeric literal '" + std::string(text) +
                   "' (expected integer, fraction a/b, or exact decimal)");
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_literal(text);

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(n, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_literal(text);
    mpz_class n(std::string(whole) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    value = mpq_class(n, d);
    value.canonicalize();
  } else {
    if (!all_digits(s)) bad_literal(text);
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gbinterp
