#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jetspace/polynomial.hpp"
#include "jetspace/term_order.hpp"

namespace jetspace {

/// Caps for a single Gröbner basis computation. Exceeding either one raises
/// BudgetExhausted.
struct Budget {
  /// S-pairs reduced (after the criteria have discarded what they can).
  std::size_t max_pairs = 500000;
  /// Largest total degree allowed for a basis element.
  std::uint64_t max_degree = 96;
};

/// Finitely generated ideal of a polynomial ring. Zero generators are dropped.
///
/// Reduced Gröbner bases are cached per term order. The cache is shared by
/// copies of the ideal, filled at most once per order and safe to read from
/// several threads.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced basis, monic, sorted by increasing leading monomial.
  const std::vector<Polynomial>& basis(const TermOrder& order, const Budget& budget = {}) const;

  /// Records a basis computed elsewhere (for instance by elimination).
  void seed_basis(const TermOrder& order, std::vector<Polynomial> basis) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Largest term of p under `order`. Requires p != 0.
const Term& leading_term(const Polynomial& p, const TermOrder& order);

/// Runs Buchberger's algorithm with the coprime and chain criteria under the
/// normal selection strategy (smallest lcm first, ties by index).
std::vector<Polynomial> compute_groebner_basis(const Ring& ring, const std::vector<Polynomial>& generators,
                                               const TermOrder& order, const Budget& budget = {});

/// The ideal generated by the reduced basis of I under `order`.
Ideal groebner_basis(const Ideal& I, const TermOrder& order, const Budget& budget = {});

/// Remainder of p modulo the reduced basis; zero iff p lies in I.
Polynomial normal_form(const Polynomial& p, const Ideal& I, const TermOrder& order = TermOrder::grevlex(),
                       const Budget& budget = {});

bool contains(const Ideal& I, const Polynomial& p, const Budget& budget = {});
/// I ⊆ J.
bool is_subset(const Ideal& I, const Ideal& J, const Budget& budget = {});
bool same_ideal(const Ideal& I, const Ideal& J, const Budget& budget = {});
bool is_unit_ideal(const Ideal& I, const Budget& budget = {});

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// I ∩ Q[x_{k+1}, ..., x_N], returned in the ring of the surviving variables.
Ideal eliminate(const Ideal& I, std::size_t k, const Budget& budget = {});

struct DimensionResult {
  /// Dimension of V(I); -1 when V(I) is empty (1 ∈ I).
  int dim = -1;
  /// Indices of a maximal independent variable set.
  std::vector<std::size_t> witness;
};

/// Dimension of V(I) over the algebraic closure from the grevlex leading
/// monomials: the size of the largest variable set containing the support of
/// no leading monomial.
DimensionResult krull_dimension(const Ideal& I, const Budget& budget = {});

/// Largest variable set avoiding every given support (bitmask per monomial).
/// Exposed for testing; `supports` are index lists.
std::vector<std::size_t> max_independent_set(std::size_t arity, const std::vector<std::vector<std::size_t>>& supports);

/// (I : f^∞) via an auxiliary variable w and elimination of w from I + (1 - w f).
Ideal saturate(const Ideal& I, const Polynomial& f, const Budget& budget = {});

/// I ∩ J via t I + (1 - t) J and elimination of t.
Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget = {});

/// gcd(f, g) = f g / lcm(f, g) with the lcm read off (f) ∩ (g); grevlex-monic.
Polynomial gcd_poly(const Polynomial& f, const Polynomial& g, const Budget& budget = {});

/// Ideal of lowest-degree forms of I at the origin (the tangent cone ideal),
/// by homogenizing with a fresh variable h, computing a basis under an order
/// where larger powers of h win ties of total degree, and dehomogenizing.
Ideal initial_ideal_at_origin(const Ideal& I, const Budget& budget = {});

/// A variable name derived from `stem` that does not occur in `ring`.
std::string fresh_variable_name(const Ring& ring, std::string_view stem);

}  // namespace jetspace
