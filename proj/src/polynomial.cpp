#include "jetspace/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.arity(); i > 0; --i)
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1];
  return false;
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.monomial, y.monomial); });
}

// Merge `a + sign * b`, both sorted.
std::vector<Term> merge_add(const std::vector<Term>& a, std::span<const Term> b, bool negate) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j]);
      if (negate) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = negate ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(ring.size()), c});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring.size()) throw PreconditionError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back(Term{Monomial::variable(ring.size(), index), 1});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  const std::size_t i = ring.require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational c) {
  if (m.arity() != ring.size()) throw PreconditionError("monomial arity does not match ring");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (const auto& t : terms)
    if (t.monomial.arity() != p.ring_.size()) throw PreconditionError("monomial arity does not match ring");
  sort_terms(terms);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::optional<std::uint64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();  // grevlex is degree-compatible
}

std::optional<std::uint64_t> Polynomial::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().monomial.degree();
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::homogeneous_part(std::uint64_t d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "addition");
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "subtraction");
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "multiplication");
  Polynomial p(a.ring_);
  if (a.is_zero() || b.is_zero()) return p;
  if (a.size() == 1) return b.times(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.size() == 1) return a.times(b.terms_[0].monomial, b.terms_[0].coeff);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coeff * y.coeff;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back(Term{m, std::move(c)});
  sort_terms(p.terms_);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return p;  // grevlex is multiplicative, order is preserved
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_.size()) throw PreconditionError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const Exponent e = t.monomial[var];
    if (e == 0) continue;
    out.push_back(Term{t.monomial / Monomial::variable(ring_.size(), var), t.coeff * Rational(e)});
  }
  return from_terms(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_.size()) throw PreconditionError("point length does not match ring arity");
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i)
      for (Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(Rational(1) / terms_.front().coeff);
}

Polynomial Polynomial::remap(const Ring& target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_.size()) throw PreconditionError("remap index map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e(target.size(), 0);
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= target.size()) throw PreconditionError("remap target index out of range");
      e[index_map[i]] += t.monomial[i];
    }
    out.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  require_same_ring(ring_, value.ring_, "substitution");
  if (var >= ring_.size()) throw PreconditionError("variable index out of range");
  std::vector<Polynomial> powers{constant(ring_, 1)};
  Polynomial result(ring_);
  for (const auto& t : terms_) {
    const Exponent e = t.monomial[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    std::vector<Exponent> rest(t.monomial.exponents().begin(), t.monomial.exponents().end());
    rest[var] = 0;
    result += powers[e].times(Monomial(std::move(rest)), t.coeff);
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? -t.coeff : t.coeff;
    bool wrote = false;
    if (t.monomial.is_one() || !mag.is_one()) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      const Exponent e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << ring_.name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return p.derivative(p.ring().require_index(var));
}

Polynomial initial_form(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("initial form of the zero polynomial");
  return p.homogeneous_part(*p.low_degree());
}

Polynomial translate_to_origin(const Polynomial& p, std::span<const Rational> point) {
  const Ring& ring = p.ring();
  if (point.size() != ring.size()) throw PreconditionError("point length does not match ring arity");
  Polynomial result = p;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (point[i].is_zero()) continue;
    result = result.substitute(i, Polynomial::variable(ring, i) + Polynomial::constant(ring, point[i]));
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "division");
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const Ring& ring = f.ring();
  const Term& lead = g.leading_term();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Term q{t.monomial / lead.monomial, t.coeff / lead.coeff};
    rest -= g.times(q.monomial, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

}  // namespace jetspace
