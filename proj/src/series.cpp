#include "jetspace/series.hpp"

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

Ring make_jet_names(const Ring& base, unsigned level, unsigned first) {
  std::vector<std::string> names;
  names.reserve(base.size() * (level + 1 - first));
  for (unsigned j = first; j <= level; ++j)
    for (const auto& n : base.names()) names.push_back(jet_variable_name(n, j));
  return Ring(std::move(names));
}

}  // namespace

JetRing::JetRing(Ring base, unsigned level, unsigned first_level)
    : base_(std::move(base)),
      level_(level),
      first_(first_level),
      ring_(first_level > level + 1 ? throw PreconditionError("jet ring first level exceeds level + 1")
                                    : make_jet_names(base_, level, first_level)) {}

std::string jet_variable_name(std::string_view base, unsigned level) {
  return std::string(base) + "_" + std::to_string(level);
}

std::vector<Polynomial> series_product(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size() || a.empty()) throw PreconditionError("series length mismatch");
  const Ring& ring = a.front().ring();
  std::vector<Polynomial> out(a.size(), Polynomial(ring));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Polynomial> t_expand(const Polynomial& p, int m) {
  if (m < 0) throw PreconditionError("jet level must be non-negative");
  return t_expand(p, JetRing(p.ring(), static_cast<unsigned>(m)));
}

std::vector<Polynomial> t_expand(const Polynomial& p, const JetRing& jets) {
  require_same_ring(p.ring(), jets.base(), "t_expand");
  const Ring& ring = jets.ring();
  const std::size_t n = jets.base().size();
  const unsigned m = jets.level();
  const unsigned first = jets.first_level();
  const std::size_t len = m + 1;

  // powers[i][k] = (sum_j x_i^(j) t^j)^k truncated, built lazily.
  std::vector<std::vector<std::vector<Polynomial>>> powers(n);
  auto power = [&](std::size_t i, Exponent k) -> const std::vector<Polynomial>& {
    auto& cache = powers[i];
    if (cache.empty()) {
      std::vector<Polynomial> one(len, Polynomial(ring));
      one[0] = Polynomial::constant(ring, 1);
      cache.push_back(std::move(one));
    }
    while (cache.size() <= k) {
      std::vector<Polynomial> s(len, Polynomial(ring));
      for (unsigned j = first; j <= m; ++j) s[j] = Polynomial::variable(ring, jets.index(i, j));
      cache.push_back(series_product(cache.back(), s));
    }
    return cache[k];
  };

  std::vector<Polynomial> out(len, Polynomial(ring));
  for (const auto& t : p.terms()) {
    // Every factor starts at t^first, so high-degree terms vanish below t^(deg*first).
    if (first > 0 && t.monomial.degree() * first > m) continue;
    std::vector<Polynomial> acc(len, Polynomial(ring));
    acc[0] = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 0) continue;
      acc = series_product(acc, power(i, t.monomial[i]));
    }
    for (std::size_t k = 0; k < len; ++k) out[k] += acc[k];
  }
  return out;
}

}  // namespace jetspace
