#include "jetspace/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

using Terms = std::vector<Term>;

void sort_by(Terms& terms, const TermOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
}

void make_monic(Terms& terms) {
  if (terms.empty() || terms.front().coeff.is_one()) return;
  const Rational inv = Rational(1) / terms.front().coeff;
  for (auto& t : terms) t.coeff *= inv;
}

// a[start..] - c * q * b[1..], all sorted by `ord`. The leading terms of
// a[start] and c*q*b[0] cancel by construction and are skipped.
Terms subtract_multiple(const Terms& a, std::size_t start, const Terms& b, const Monomial& q, const Rational& c,
                        const TermOrder& ord) {
  Terms out;
  out.reserve(a.size() - start + b.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial m = b[j].monomial * q;
    if (i == a.size()) {
      out.push_back(Term{std::move(m), -(b[j].coeff * c)});
      ++j;
      continue;
    }
    const auto cmp = ord.compare(a[i].monomial, m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(m), -(b[j].coeff * c)});
      ++j;
    } else {
      Rational v = a[i].coeff - b[j].coeff * c;
      if (!v.is_zero()) out.push_back(Term{std::move(m), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Reduces `cur` by the polynomials in `divisors`. With `full` every term is
// reduced, otherwise only the head.
Terms reduce(Terms cur, const std::vector<const Terms*>& divisors, bool full, const TermOrder& ord) {
  Terms rem;
  std::size_t start = 0;
  while (start < cur.size()) {
    const Term& lt = cur[start];
    const Terms* d = nullptr;
    for (const Terms* cand : divisors) {
      if (cand->front().monomial.divides(lt.monomial)) {
        d = cand;
        break;
      }
    }
    if (d != nullptr) {
      const Monomial q = lt.monomial / d->front().monomial;
      const Rational c = lt.coeff / d->front().coeff;
      cur = subtract_multiple(cur, start, *d, q, c, ord);
      start = 0;
    } else if (full) {
      rem.push_back(std::move(cur[start]));
      ++start;
    } else {
      rem.insert(rem.end(), std::make_move_iterator(cur.begin() + static_cast<std::ptrdiff_t>(start)),
                 std::make_move_iterator(cur.end()));
      break;
    }
  }
  return rem;
}

class Buchberger {
 public:
  Buchberger(const TermOrder& ord, const Budget& budget) : ord_(ord), budget_(budget), pairs_(PairLess{&ord}) {}

  std::vector<Terms> run(std::vector<Terms> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      add(reduce(std::move(f), active_list(), true, ord_));
      if (unit_) return {unit_terms()};
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed > budget_.max_pairs)
        throw BudgetExhausted("Groebner basis exceeded " + std::to_string(budget_.max_pairs) + " S-pairs");
      add(reduce(spoly(p.i, p.j), active_list(), true, ord_));
      if (unit_) return {unit_terms()};
    }
    return interreduce();
  }

 private:
  struct Pair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
  };
  struct PairLess {
    const TermOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (auto c = ord->compare(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  const Monomial& lm(std::size_t i) const { return polys_[i].front().monomial; }

  std::vector<const Terms*> active_list() const {
    std::vector<const Terms*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(&polys_[i]);
    return out;
  }

  Terms unit_terms() const {
    const std::size_t arity = polys_.back().front().monomial.arity();
    return Terms{Term{Monomial(arity), 1}};
  }

  Terms spoly(std::size_t i, std::size_t j) const {
    const Terms& f = polys_[i];
    const Terms& g = polys_[j];
    const Monomial l = lm(i).lcm(lm(j));
    const Monomial qf = l / lm(i);
    const Monomial qg = l / lm(j);
    // (l/lm f) f - (l/lm g) g with both monic: drop both heads.
    Terms shifted;
    shifted.reserve(f.size());
    shifted.push_back(Term{l, 1});
    for (std::size_t k = 1; k < f.size(); ++k) shifted.push_back(Term{f[k].monomial * qf, f[k].coeff});
    return subtract_multiple(shifted, 0, g, qg, Rational(1), ord_);
  }

  void add(Terms h) {
    if (h.empty()) return;
    make_monic(h);
    if (h.front().monomial.is_one()) {
      polys_.push_back(std::move(h));
      active_.push_back(1);
      unit_ = true;
      return;
    }
    std::uint64_t deg = 0;
    for (const auto& t : h) deg = std::max(deg, t.monomial.degree());
    if (deg > budget_.max_degree)
      throw BudgetExhausted("Groebner basis element exceeded degree " + std::to_string(budget_.max_degree));
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(1);
    update(hi);
  }

  // Gebauer-Moeller installation of the new element `h`.
  void update(std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g]) candidates.push_back(g);

    std::vector<Monomial> lcms;
    lcms.reserve(candidates.size());
    for (std::size_t g : candidates) lcms.push_back(lh.lcm(lm(g)));

    // Chain criterion among the new pairs.
    std::vector<char> state(candidates.size(), 0);  // 0 pending, 1 kept, 2 dropped
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = lh.coprime(lm(candidates[a]));
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size(); ++b) {
          if (b == a || state[b] == 2) continue;
          if (lcms[b].divides(lcms[a])) {
            keep = false;
            break;
          }
        }
      }
      state[a] = keep ? 1 : 2;
    }

    // Old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (lh.divides(it->lcm) && !(lh.lcm(lm(it->i)) == it->lcm) && !(lh.lcm(lm(it->j)) == it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }

    // Coprime criterion.
    for (std::size_t a = 0; a < candidates.size(); ++a)
      if (state[a] == 1 && !lh.coprime(lm(candidates[a]))) pairs_.insert(Pair{lcms[a], candidates[a], h});

    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lh.divides(lm(g))) active_[g] = 0;
  }

  std::vector<Terms> interreduce() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) keep.push_back(i);
    std::vector<Terms> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) {
      std::vector<const Terms*> others;
      for (std::size_t j : keep)
        if (j != i) others.push_back(&polys_[j]);
      Terms head{polys_[i].front()};
      Terms tail(polys_[i].begin() + 1, polys_[i].end());
      Terms reduced = reduce(std::move(tail), others, true, ord_);
      head.insert(head.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
      out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(),
              [&](const Terms& a, const Terms& b) { return ord_.greater(b.front().monomial, a.front().monomial); });
    return out;
  }

  const TermOrder& ord_;
  Budget budget_;
  std::vector<Terms> polys_;
  std::vector<char> active_;
  std::set<Pair, PairLess> pairs_;
  bool unit_ = false;
};

Terms to_work(const Polynomial& p, const TermOrder& ord) {
  Terms t(p.terms().begin(), p.terms().end());
  sort_by(t, ord);
  return t;
}

Polynomial from_work(const Ring& ring, Terms terms) { return Polynomial::from_terms(ring, std::move(terms)); }

std::vector<std::size_t> identity_map(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal generators");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::basis(const TermOrder& order, const Budget& budget) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(order.key()); it != cache_->bases.end()) return *it->second;
  }
  auto computed = std::make_shared<const std::vector<Polynomial>>(compute_groebner_basis(ring_, gens_, order, budget));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order.key(), std::move(computed));
  return *it->second;
}

void Ideal::seed_basis(const TermOrder& order, std::vector<Polynomial> basis) const {
  std::lock_guard lock(cache_->mutex);
  cache_->bases.emplace(order.key(), std::make_shared<const std::vector<Polynomial>>(std::move(basis)));
}

const Term& leading_term(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const auto terms = p.terms();
  const Term* best = &terms.front();
  for (const auto& t : terms.subspan(1))
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

std::vector<Polynomial> compute_groebner_basis(const Ring& ring, const std::vector<Polynomial>& generators,
                                               const TermOrder& order, const Budget& budget) {
  std::vector<Terms> input;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring(), "groebner basis");
    if (!g.is_zero()) input.push_back(to_work(g, order));
  }
  if (input.empty()) return {};
  Buchberger engine(order, budget);
  std::vector<Polynomial> out;
  for (auto& t : engine.run(std::move(input))) out.push_back(from_work(ring, std::move(t)));
  return out;
}

Ideal groebner_basis(const Ideal& I, const TermOrder& order, const Budget& budget) {
  const auto& b = I.basis(order, budget);
  Ideal out(I.ring(), b);
  out.seed_basis(order, b);
  return out;
}

Polynomial normal_form(const Polynomial& p, const Ideal& I, const TermOrder& order, const Budget& budget) {
  require_same_ring(p.ring(), I.ring(), "normal form");
  const auto& basis = I.basis(order, budget);
  std::vector<Terms> work;
  work.reserve(basis.size());
  for (const auto& g : basis) work.push_back(to_work(g, order));
  std::vector<const Terms*> divisors;
  for (const auto& w : work) divisors.push_back(&w);
  return from_work(p.ring(), reduce(to_work(p, order), divisors, true, order));
}

bool contains(const Ideal& I, const Polynomial& p, const Budget& budget) {
  return normal_form(p, I, TermOrder::grevlex(), budget).is_zero();
}

bool is_subset(const Ideal& I, const Ideal& J, const Budget& budget) {
  require_same_ring(I.ring(), J.ring(), "ideal inclusion");
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Polynomial& g) { return contains(J, g, budget); });
}

bool same_ideal(const Ideal& I, const Ideal& J, const Budget& budget) {
  return I.basis(TermOrder::grevlex(), budget) == J.basis(TermOrder::grevlex(), budget);
}

bool is_unit_ideal(const Ideal& I, const Budget& budget) {
  const auto& b = I.basis(TermOrder::grevlex(), budget);
  return b.size() == 1 && b.front().is_constant();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& I, std::size_t k, const Budget& budget) {
  const Ring& ring = I.ring();
  if (k >= ring.size()) throw PreconditionError("eliminate: k must be smaller than the ring arity");
  std::vector<std::string> names(ring.names().begin() + static_cast<std::ptrdiff_t>(k), ring.names().end());
  Ring sub(std::move(names));
  const TermOrder order = TermOrder::block(k, TermOrder::grevlex());
  const auto& basis = I.basis(order, budget);

  std::vector<std::size_t> back(ring.size(), 0);
  for (std::size_t i = k; i < ring.size(); ++i) back[i] = i - k;
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool free_of_eliminated = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < k && free_of_eliminated; ++i)
        if (t.monomial[i] != 0) free_of_eliminated = false;
      if (!free_of_eliminated) break;
    }
    if (free_of_eliminated) kept.push_back(g.remap(sub, back));
  }
  // The block order restricted to the surviving variables is grevlex, so the
  // kept elements are already the reduced grevlex basis of the elimination ideal.
  std::sort(kept.begin(), kept.end(), [](const Polynomial& a, const Polynomial& b) {
    return TermOrder::grevlex().greater(b.leading_term().monomial, a.leading_term().monomial);
  });
  Ideal out(sub, kept);
  out.seed_basis(TermOrder::grevlex(), std::move(kept));
  return out;
}

std::vector<std::size_t> max_independent_set(std::size_t arity,
                                             const std::vector<std::vector<std::size_t>>& supports) {
  // Equivalent to a minimum hitting set T of the supports; answer = complement of T.
  std::vector<std::vector<std::size_t>> sets;
  for (auto s : supports) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& s : sets) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!redundant) minimal.push_back(s);
  }

  std::vector<char> chosen(arity, 0);
  std::vector<char> best(arity, 1);
  std::size_t best_size = arity;
  std::size_t chosen_size = 0;

  auto hit = [&](const std::vector<std::size_t>& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v] != 0; });
  };

  auto search = [&](auto&& self) -> void {
    if (chosen_size >= best_size) return;
    const std::vector<std::size_t>* branch = nullptr;
    // Lower bound: greedily pack pairwise disjoint unhit sets.
    std::vector<char> used(arity, 0);
    std::size_t packing = 0;
    for (const auto& s : minimal) {
      if (hit(s)) continue;
      if (branch == nullptr) branch = &s;
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return used[v] != 0; })) {
        ++packing;
        for (std::size_t v : s) used[v] = 1;
      }
    }
    if (branch == nullptr) {
      best = chosen;
      best_size = chosen_size;
      return;
    }
    if (chosen_size + packing >= best_size) return;
    for (std::size_t v : *branch) {
      chosen[v] = 1;
      ++chosen_size;
      self(self);
      chosen[v] = 0;
      --chosen_size;
    }
  };
  if (!minimal.empty() && minimal.front().empty()) return {};  // a unit: nothing is independent
  search(search);

  std::vector<std::size_t> independent;
  for (std::size_t v = 0; v < arity; ++v)
    if (!best[v]) independent.push_back(v);
  return independent;
}

DimensionResult krull_dimension(const Ideal& I, const Budget& budget) {
  const auto& basis = I.basis(TermOrder::grevlex(), budget);
  const std::size_t n = I.ring().size();
  if (basis.size() == 1 && basis.front().is_constant()) return DimensionResult{-1, {}};
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : basis) {
    const Monomial& m = g.leading_term().monomial;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  auto witness = max_independent_set(n, supports);
  return DimensionResult{static_cast<int>(witness.size()), std::move(witness)};
}

std::string fresh_variable_name(const Ring& ring, std::string_view stem) {
  std::string name(stem);
  for (int k = 0; ring.index_of(name); ++k) name = std::string(stem) + std::to_string(k);
  return name;
}

Ideal saturate(const Ideal& I, const Polynomial& f, const Budget& budget) {
  require_same_ring(I.ring(), f.ring(), "saturation");
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  const Ring& ring = I.ring();
  if (f.is_constant()) return groebner_basis(I, TermOrder::grevlex(), budget);
  std::vector<std::string> names{fresh_variable_name(ring, "_w")};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  Ring ext(std::move(names));
  const auto shift = identity_map(ring.size(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(ext, shift));
  const Polynomial w = Polynomial::variable(ext, 0);
  gens.push_back(Polynomial::constant(ext, 1) - w * f.remap(ext, shift));
  // The surviving variables carry the same names, so the result lives in an equal ring.
  return eliminate(Ideal(ext, std::move(gens)), 1, budget);
}

Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
  require_same_ring(I.ring(), J.ring(), "intersection");
  const Ring& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  std::vector<std::string> names{fresh_variable_name(ring, "_t")};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  Ring ext(std::move(names));
  const auto shift = identity_map(ring.size(), 1);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.remap(ext, shift));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.remap(ext, shift));
  return eliminate(Ideal(ext, std::move(gens)), 1, budget);
}

Polynomial gcd_poly(const Polynomial& f, const Polynomial& g, const Budget& budget) {
  require_same_ring(f.ring(), g.ring(), "gcd");
  const Ring& ring = f.ring();
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(ring, 1);
  const Ideal lcm_ideal = intersect(Ideal(ring, {f}), Ideal(ring, {g}), budget);
  const auto& gens = lcm_ideal.basis(TermOrder::grevlex());
  if (gens.size() != 1) throw ConsistencyError("intersection of principal ideals is not principal");
  auto quotient = divide_exact(f * g, gens.front());
  if (!quotient) throw ConsistencyError("lcm does not divide f*g");
  return quotient->monic();
}

Ideal initial_ideal_at_origin(const Ideal& I, const Budget& budget) {
  const Ring& ring = I.ring();
  const std::size_t n = ring.size();
  std::vector<std::string> names = ring.names();
  names.push_back(fresh_variable_name(ring, "_h"));
  Ring ext(std::move(names));

  std::vector<Polynomial> homogenized;
  for (const auto& f : I.generators()) {
    const std::uint64_t d = *f.degree();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      std::vector<Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
      e.push_back(static_cast<Exponent>(d - t.monomial.degree()));
      terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    homogenized.push_back(Polynomial::from_terms(ext, std::move(terms)));
  }
  std::vector<std::int64_t> h_weight(n + 1, 0);
  h_weight[n] = 1;
  const TermOrder order =
      TermOrder::weight(std::vector<std::int64_t>(n + 1, 1), TermOrder::weight(h_weight, TermOrder::grevlex()));
  const Ideal H(ext, homogenized);

  std::vector<Polynomial> forms;
  std::vector<std::size_t> back(n + 1, 0);
  std::iota(back.begin(), back.end(), 0);
  for (const auto& g : H.basis(order, budget)) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().end() - 1);
      terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    const Polynomial dehomogenized = Polynomial::from_terms(ring, std::move(terms));
    if (!dehomogenized.is_zero()) forms.push_back(initial_form(dehomogenized));
  }
  return Ideal(ring, std::move(forms));
}

}  // namespace jetspace
