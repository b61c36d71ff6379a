#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jetspace/polynomial.hpp"

namespace jetspace {

/// Coordinate ring of the jet space of A^N at level m: variables x_i^(j)
/// named `<x_i>_<j>`, ordered level-major (all level-0 coordinates, then all
/// level-1 coordinates, ...). Levels <= p form a prefix, so truncation to
/// level p drops trailing variables.
///
/// With first_level == 1 the level-0 coordinates are omitted; this is the
/// ring of jets based at the origin.
class JetRing {
 public:
  JetRing(Ring base, unsigned level, unsigned first_level = 0);

  const Ring& base() const { return base_; }
  const Ring& ring() const { return ring_; }
  unsigned level() const { return level_; }
  unsigned first_level() const { return first_; }
  std::size_t arity() const { return ring_.size(); }
  std::size_t index(std::size_t var, unsigned j) const { return (j - first_) * base_.size() + var; }

 private:
  Ring base_;
  unsigned level_;
  unsigned first_;
  Ring ring_;
};

std::string jet_variable_name(std::string_view base, unsigned level);

/// Coefficients of t^0..t^m of p(sum_j x_1^(j) t^j, ..., sum_j x_N^(j) t^j)
/// in the level-m jet ring. Throws PreconditionError for negative m.
std::vector<Polynomial> t_expand(const Polynomial& p, int m);

/// Same expansion into an explicit jet ring over p's ring; when the jet ring
/// omits level 0 the series start at t^1.
std::vector<Polynomial> t_expand(const Polynomial& p, const JetRing& jets);

/// Truncated product of two t-series of equal length.
std::vector<Polynomial> series_product(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

}  // namespace jetspace
