#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jetspace/monomial.hpp"

namespace jetspace {

/// Monomial order. All kinds are multiplicative well-orders with 1 minimal.
///
/// - lex, grlex, grevlex: the usual orders with x_1 > x_2 > ... > x_N.
/// - block(k, inner): compare the first k exponents with `inner`, then the
///   remaining ones; eliminates the first k variables.
/// - weight(w, tiebreak): compare w.a, then fall back to `tiebreak`.
///   Weights must be non-negative.
class TermOrder {
 public:
  enum class Kind { lex, grlex, grevlex, block, weight };

  static TermOrder lex() { return TermOrder(Kind::lex); }
  static TermOrder grlex() { return TermOrder(Kind::grlex); }
  static TermOrder grevlex() { return TermOrder(Kind::grevlex); }
  static TermOrder block(std::size_t split, const TermOrder& inner);
  static TermOrder weight(std::vector<std::int64_t> weights, const TermOrder& tiebreak);

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare_range(a, b, 0, a.arity());
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Stable textual key, e.g. "block(2,grevlex)"; used as a cache key.
  const std::string& key() const { return key_; }

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.key_ == b.key_; }

 private:
  explicit TermOrder(Kind kind);

  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) const;

  Kind kind_;
  std::size_t split_ = 0;
  std::vector<std::int64_t> weights_;
  std::shared_ptr<const TermOrder> inner_;
  std::string key_;
};

}  // namespace jetspace
