#include "jetspace/monomial.hpp"

#include <algorithm>
#include <limits>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw PreconditionError("exponent overflow");
  return a + b;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { refresh(); }

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  Monomial m(arity);
  m.exps_.at(index) = power;
  m.refresh();
  return m;
}

void Monomial::refresh() {
  degree_ = 0;
  signature_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) signature_ |= std::uint64_t{1} << (i % 64);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (signature_ & ~other.signature_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((signature_ & other.signature_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked_add(r.exps_[i], other.exps_[i]);
  r.degree_ = degree_ + other.degree_;
  r.signature_ = signature_ | other.signature_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t{exps_[i]} * k;
    if (e > std::numeric_limits<Exponent>::max()) throw PreconditionError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace jetspace
