#pragma once

#include <random>
#include <vector>

#include "gbinterp/polynomial.hpp"

namespace gbinterp::testing {

inline Polynomial X(std::size_t nvars, std::size_t var) {
  return Polynomial::variable(nvars, var);
}

inline Polynomial C(std::size_t nvars, Rational c) {
  return Polynomial::constant(nvars, std::move(c));
}

inline Polynomial mono(std::vector<std::uint32_t> e, Rational c = Rational(1)) {
  return Polynomial::monomial(ExponentVector(std::move(e)), std::move(c));
}

inline Rational random_rational(std::mt19937& rng, long max_num = 20,
                                long max_den = 10) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, long max_num = 20,
                                        long max_den = 10) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

inline ExponentVector random_exponent(std::mt19937& rng, std::size_t nvars,
                                      std::uint32_t max_per_var = 3) {
  std::uniform_int_distribution<std::uint32_t> d(0, max_per_var);
  std::vector<std::uint32_t> e(nvars);
  for (auto& x : e) x = d(rng);
  return ExponentVector(std::move(e));
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t nvars,
                                    std::size_t max_terms = 5,
                                    std::uint32_t max_per_var = 3) {
  std::uniform_int_distribution<std::size_t> nt(0, max_terms);
  Polynomial p(nvars);
  std::size_t terms = nt(rng);
  for (std::size_t k = 0; k < terms; ++k)
    p.add_term(random_exponent(rng, nvars, max_per_var), random_rational(rng));
  return p;
}

inline Point random_point(std::mt19937& rng, std::size_t nvars,
                          long max_num = 5, long max_den = 3) {
  std::vector<Rational> coords;
  coords.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    coords.push_back(random_rational(rng, max_num, max_den));
  return Point(std::move(coords));
}

}  // namespace gbinterp::testing
