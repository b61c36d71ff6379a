#include <doctest.h>

#include <algorithm>

#include "jetspace/errors.hpp"
#include "jetspace/groebner.hpp"
#include "support.hpp"

using namespace jetspace;
using jetspace::testing::make_ring;
using jetspace::testing::P;
using jetspace::testing::PolyGen;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// dim V(I) for a monomial ideal by enumerating coordinate subspaces.
int brute_force_monomial_dim(std::size_t n, const std::vector<Monomial>& gens) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const bool inside = std::all_of(gens.begin(), gens.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0 && !(mask & (1u << i))) return true;
      return false;
    });
    if (inside) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("lex basis of circle and line") {
  const Ring r = make_ring({"x", "y"});
  const Ideal I(r, {P(r, "x^2 + y^2 - 1"), P(r, "x - y")});
  const auto gb = compute_groebner_basis(r, I.generators(), TermOrder::lex());
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P(r, "y^2 - 1/2"));
  CHECK(gb[1] == P(r, "x - y"));
}

TEST_CASE("twisted cubic elimination") {
  const Ring r = make_ring({"t", "x", "y", "z"});
  const Ideal I(r, {P(r, "x - t"), P(r, "y - t^2"), P(r, "z - t^3")});
  const Ideal J = eliminate(I, 1);
  CHECK(J.ring() == make_ring({"x", "y", "z"}));
  const Ring& s = J.ring();
  const auto& b = J.basis(TermOrder::grevlex());
  CHECK(b.size() == 3);
  CHECK(contains(J, P(s, "y - x^2")));
  CHECK(contains(J, P(s, "z - x^3")));
  CHECK(contains(J, P(s, "y^3 - z^2")));
  CHECK_FALSE(contains(J, P(s, "z - x^2")));
  CHECK(krull_dimension(J).dim == 1);
}

TEST_CASE("basis is reduced and independent of generator order") {
  const Ring r = make_ring({"x", "y", "z"});
  const std::vector<Polynomial> gens{P(r, "x*y - z^2"), P(r, "x^2 - y*z"), P(r, "y^2 - x*z")};
  std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
  const auto a = compute_groebner_basis(r, gens, TermOrder::grevlex());
  const auto b = compute_groebner_basis(r, reversed, TermOrder::grevlex());
  CHECK(strings(a) == strings(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].leading_term().coeff.is_one());
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : a[j].terms()) CHECK_FALSE(a[i].leading_term().monomial.divides(t.monomial));
    }
  }
}

TEST_CASE("unit and zero ideals") {
  const Ring r = make_ring({"x", "y"});
  const Ideal unit(r, {P(r, "x"), P(r, "x + 1")});
  CHECK(is_unit_ideal(unit));
  CHECK(krull_dimension(unit).dim == -1);
  const Ideal zero = Ideal::zero(r);
  CHECK(krull_dimension(zero).dim == 2);
  CHECK(zero.basis(TermOrder::grevlex()).empty());
}

TEST_CASE("dimension examples") {
  const Ring r = make_ring({"x", "y", "z", "w"});
  CHECK(krull_dimension(Ideal(r, {P(r, "x*y - z*w")})).dim == 3);
  CHECK(krull_dimension(Ideal(r, {P(r, "x"), P(r, "z")})).dim == 2);
  CHECK(krull_dimension(Ideal(r, {P(r, "x*y"), P(r, "z*w")})).dim == 2);
  CHECK(krull_dimension(Ideal(r, {P(r, "x*z"), P(r, "x*w"), P(r, "y*z"), P(r, "y*w")})).dim == 2);
  const auto res = krull_dimension(Ideal(r, {P(r, "x^2"), P(r, "y^3")}));
  CHECK(res.dim == 2);
  CHECK(res.witness == std::vector<std::size_t>{2, 3});
}

TEST_CASE("property: monomial dimension matches subset enumeration") {
  const Ring r = make_ring({"x", "y", "z"});
  // All ideals with one or two monomial generators of degree <= 2 in 3 variables.
  std::vector<Monomial> monos;
  for (Exponent a = 0; a <= 2; ++a)
    for (Exponent b = 0; a + b <= 2; ++b)
      for (Exponent c = 0; a + b + c <= 2; ++c) monos.push_back(Monomial(std::vector<Exponent>{a, b, c}));
  int checked = 0;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = i; j < monos.size(); ++j) {
      std::vector<Monomial> gens{monos[i]};
      if (j != i) gens.push_back(monos[j]);
      std::vector<Polynomial> polys;
      for (const auto& m : gens) polys.push_back(Polynomial::monomial(r, m));
      CHECK(krull_dimension(Ideal(r, polys)).dim == brute_force_monomial_dim(3, gens));
      ++checked;
    }
  }
  CHECK(checked == 55);
}

TEST_CASE("property: constructed combinations are members") {
  const Ring r = make_ring({"x", "y", "z"});
  PolyGen gen(21);
  for (int k = 0; k < 30; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(gen.nonconstant(r, 3, 2));
    const Ideal I(r, gens);
    Polynomial combo(r);
    for (const auto& g : gens) combo += gen.polynomial(r, 3, 2) * g;
    CHECK(contains(I, combo));
    CHECK(normal_form(combo, I).is_zero());
    // The normal form is canonical.
    const Polynomial extra = gen.polynomial(r, 3, 2);
    CHECK(normal_form(combo + extra, I) == normal_form(extra, I));
  }
}

TEST_CASE("saturation") {
  const Ring r = make_ring({"x", "y"});
  // (x^2, xy) : x^inf = (1); (x^2, xy) : y^inf = (x).
  const Ideal I(r, {P(r, "x^2"), P(r, "x*y")});
  CHECK(is_unit_ideal(saturate(I, P(r, "x"))));
  CHECK(same_ideal(saturate(I, P(r, "y")), Ideal(r, {P(r, "x")})));
  // Removing the line x = 0 from the union of two lines leaves y = 0.
  const Ideal union_lines(r, {P(r, "x*y")});
  CHECK(same_ideal(saturate(union_lines, P(r, "x")), Ideal(r, {P(r, "y")})));
  CHECK_THROWS_AS(saturate(I, Polynomial(r)), PreconditionError);
}

TEST_CASE("saturation with a ring already using w") {
  const Ring r = make_ring({"x", "y", "z", "w", "_w"});
  const Ideal I(r, {P(r, "x*w"), P(r, "_w*w")});
  CHECK(same_ideal(saturate(I, P(r, "w")), Ideal(r, {P(r, "x"), P(r, "_w")})));
}

TEST_CASE("intersection and gcd") {
  const Ring r = make_ring({"x", "y"});
  const Ideal a(r, {P(r, "x")});
  const Ideal b(r, {P(r, "y")});
  CHECK(same_ideal(intersect(a, b), Ideal(r, {P(r, "x*y")})));
  const Ideal c(r, {P(r, "x"), P(r, "y")});
  const Ideal d(r, {P(r, "x - 1")});
  CHECK(same_ideal(intersect(c, d), Ideal(r, {P(r, "x^2 - x"), P(r, "x*y - y")})));
  CHECK(gcd_poly(P(r, "x^2 - y^2"), P(r, "x^2 + 2*x*y + y^2")) == P(r, "x + y"));
  CHECK(gcd_poly(P(r, "x^2"), P(r, "y")) == P(r, "1"));
  CHECK(gcd_poly(P(r, "2*x*y"), Polynomial(r)) == P(r, "x*y"));
}

TEST_CASE("property: gcd times lcm is the product") {
  const Ring r = make_ring({"x", "y", "z"});
  PolyGen gen(23);
  for (int k = 0; k < 20; ++k) {
    const Polynomial common = gen.nonconstant(r, 2, 2);
    const Polynomial f = common * gen.nonconstant(r, 2, 2);
    const Polynomial g = common * gen.nonconstant(r, 2, 2);
    const Polynomial h = gcd_poly(f, g);
    const Ideal cap = intersect(Ideal(r, {f}), Ideal(r, {g}));
    const auto& lcm = cap.basis(TermOrder::grevlex());
    REQUIRE(lcm.size() == 1);
    CHECK((h * lcm.front()).monic() == (f * g).monic());
    CHECK(divide_exact(h, common.monic()).has_value());
  }
}

TEST_CASE("budget exhaustion is reported") {
  const Ring r = make_ring({"x", "y", "z"});
  const Ideal I(r, {P(r, "x^5 - y*z^3"), P(r, "y^4 - x*z^2"), P(r, "z^5 - x^2*y")});
  CHECK_THROWS_AS(I.basis(TermOrder::lex(), Budget{3, 96}), BudgetExhausted);
  CHECK_THROWS_AS(I.basis(TermOrder::lex(), Budget{500000, 6}), BudgetExhausted);
}

TEST_CASE("max independent set") {
  CHECK(max_independent_set(3, {}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(max_independent_set(3, {{0}, {1, 2}}) == std::vector<std::size_t>{2});
  CHECK(max_independent_set(4, {{0, 1}, {2, 3}, {0, 2}}).size() == 2);
}
