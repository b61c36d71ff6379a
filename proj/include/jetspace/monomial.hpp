#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace jetspace {

using Exponent = std::uint32_t;

/// Exponent vector over a fixed arity. Caches the total degree and a 64-bit
/// support signature (bit i % 64 set iff some variable with that residue
/// occurs) used to reject divisibility tests early.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  std::uint64_t signature() const { return signature_; }
  bool is_one() const { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// True iff the supports are disjoint.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial pow(Exponent k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  void refresh();

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t signature_ = 0;
};

}  // namespace jetspace

template <>
struct std::hash<jetspace::Monomial> {
  std::size_t operator()(const jetspace::Monomial& m) const noexcept { return m.hash(); }
};
