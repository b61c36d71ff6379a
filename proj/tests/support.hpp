#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jetspace/groebner.hpp"
#include "jetspace/parser.hpp"
#include "jetspace/polynomial.hpp"

namespace jetspace::testing {

inline Ring make_ring(std::initializer_list<const char*> names) {
  return Ring(std::vector<std::string>(names.begin(), names.end()));
}

inline Polynomial P(const Ring& ring, std::string_view text) { return parse_polynomial(text, ring); }

/// Random polynomials with small integer or half-integer coefficients.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient() {
    int num = 0;
    while (num == 0) num = uniform(-5, 5);
    return Rational(num, uniform(0, 3) == 0 ? 2 : 1);
  }

  Monomial monomial(std::size_t arity, int max_degree) {
    std::vector<Exponent> e(arity, 0);
    const int d = uniform(0, max_degree);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))];
    return Monomial(std::move(e));
  }

  /// Nonzero.
  Polynomial polynomial(const Ring& ring, int max_terms, int max_degree) {
    while (true) {
      std::vector<Term> terms;
      const int n = uniform(1, max_terms);
      for (int k = 0; k < n; ++k) terms.push_back(Term{monomial(ring.size(), max_degree), coefficient()});
      Polynomial p = Polynomial::from_terms(ring, std::move(terms));
      if (!p.is_zero()) return p;
    }
  }

  Polynomial nonconstant(const Ring& ring, int max_terms, int max_degree) {
    while (true) {
      Polynomial p = polynomial(ring, max_terms, max_degree);
      if (!p.is_constant()) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jetspace::testing

