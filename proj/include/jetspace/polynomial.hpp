#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetspace/monomial.hpp"
#include "jetspace/rational.hpp"
#include "jetspace/ring.hpp"

namespace jetspace {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

using Point = std::vector<Rational>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in strictly decreasing grevlex order with no zero
/// coefficients, so equal polynomials have identical term vectors. Values are
/// immutable once built; every operation returns a new polynomial.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, Monomial m, Rational c = 1);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  /// Total degree; std::nullopt stands for the degree of the zero polynomial (-inf).
  std::optional<std::uint64_t> degree() const;
  /// Lowest total degree of a term; std::nullopt for zero.
  std::optional<std::uint64_t> low_degree() const;
  bool is_homogeneous() const;
  /// Grevlex-leading term. Requires a nonzero polynomial.
  const Term& leading_term() const;
  Rational coefficient(const Monomial& m) const;
  Polynomial homogeneous_part(std::uint64_t d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Scaled so the grevlex-leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  /// Moves variable i of this ring to variable index_map[i] of `target`.
  Polynomial remap(const Ring& target, std::span<const std::size_t> index_map) const;
  /// Replaces variable `var` by the polynomial `value` (same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  /// Canonical text: decreasing grevlex, explicit `*` and `^`.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::string_view var);

/// Lowest-degree homogeneous part. Throws PreconditionError for zero.
Polynomial initial_form(const Polynomial& p);

/// p(x + point).
Polynomial translate_to_origin(const Polynomial& p, std::span<const Rational> point);

/// f / g when g divides f exactly, std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace jetspace
