#include <doctest.h>

#include "jetspace/errors.hpp"
#include "jetspace/invariants.hpp"
#include "support.hpp"

using namespace jetspace;
using jetspace::testing::make_ring;
using jetspace::testing::P;
using jetspace::testing::PolyGen;

namespace {

Point origin(std::size_t n) { return Point(n, Rational(0)); }

Ideal principal(const Ring& r, std::string_view f) { return Ideal(r, {P(r, f)}); }

}  // namespace

TEST_CASE("tangent cones") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  auto cone = tangent_cone(principal(r2, "x^2 - y^3"), origin(2));
  CHECK(cone.source == ConeSource::hypersurface_initial_form);
  CHECK(cone.ideal.generators() == std::vector<Polynomial>{P(r2, "x^2")});
  CHECK(tangent_cone(principal(r4, "x*y - z*w"), origin(4)).ideal.generators() ==
        std::vector<Polynomial>{P(r4, "x*y - z*w")});
  CHECK(tangent_cone(principal(r2, "y^2 - x^2 - x^3"), origin(2)).ideal.generators() ==
        std::vector<Polynomial>{P(r2, "y^2 - x^2")});
  // Away from the origin: the cusp at (1, 1) is smooth with tangent line 2x - 3y.
  CHECK(tangent_cone(principal(r2, "x^2 - y^3"), Point{Rational(1), Rational(1)}).ideal.generators() ==
        std::vector<Polynomial>{P(r2, "2*x - 3*y")});
  CHECK_THROWS_AS(tangent_cone(principal(r2, "x"), Point{Rational(1), Rational(0)}), PreconditionError);
}

TEST_CASE("tangent cones through the homogenization basis") {
  const Ring r3 = make_ring({"x", "y", "z"});
  // Twisted cubic (t, t^2, t^3): tangent cone is the line y = z = 0.
  const Ideal cubic(r3, {P(r3, "y - x^2"), P(r3, "z - x^3")});
  auto c = tangent_cone(cubic, origin(3));
  CHECK(c.source == ConeSource::homogenization_gb);
  CHECK(same_ideal(c.ideal, Ideal(r3, {P(r3, "y"), P(r3, "z")})));
  // Space cusp (t^2, t^3, 0) cut by two equations: cone is the double line y^2 = z = 0.
  const Ideal space_cusp(r3, {P(r3, "y^2 - x^3"), P(r3, "z")});
  CHECK(same_ideal(tangent_cone(space_cusp, origin(3)).ideal, Ideal(r3, {P(r3, "y^2"), P(r3, "z")})));
  // (t^3, t^4, t^5): initial forms yz, y^2 - xz, z^2 (Hilbert function 1, 3, 3, ...).
  const Ideal monomial_curve(r3, {P(r3, "x^3 - y*z"), P(r3, "y^2 - x*z"), P(r3, "z^2 - x^2*y")});
  const auto mc = tangent_cone(monomial_curve, origin(3));
  CHECK(same_ideal(mc.ideal, Ideal(r3, {P(r3, "y*z"), P(r3, "y^2 - x*z"), P(r3, "z^2")})));
}

TEST_CASE("multiplicity-one factors") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  auto a = has_multiplicity_one_factor(P(r2, "x^2"));
  CHECK_FALSE(a.verdict);
  CHECK(a.certificate.is_constant());
  auto b = has_multiplicity_one_factor(P(r2, "x^2*y"));
  CHECK(b.verdict);
  CHECK(b.certificate == P(r2, "y"));
  auto c = has_multiplicity_one_factor(P(r4, "x*y - z*w"));
  CHECK(c.verdict);
  CHECK(c.certificate == P(r4, "x*y - z*w"));
  auto d = has_multiplicity_one_factor(P(r2, "(x+y)^2*(x-y)"));
  CHECK(d.verdict);
  CHECK(d.certificate == P(r2, "x - y"));
  CHECK_THROWS_AS(has_multiplicity_one_factor(P(r2, "3")), PreconditionError);
}

TEST_CASE("property: powers have no multiplicity-one factor, coprime products do") {
  const Ring r3 = make_ring({"x", "y", "z"});
  for (const char* f : {"x", "x*y", "x^2 - y^3", "x*y - z^2", "x^2 + y^2 + z^2", "x^2 - y^2*z"}) {
    for (unsigned k = 2; k <= 3; ++k) CHECK_FALSE(has_multiplicity_one_factor(P(r3, f).pow(k)).verdict);
  }
  PolyGen gen(41);
  int tested = 0;
  while (tested < 15) {
    const Polynomial f = gen.nonconstant(r3, 3, 2);
    const Polynomial g = gen.nonconstant(r3, 3, 2);
    // Squarefree, coprime factors.
    if (!gcd_poly(f, g).is_constant()) continue;
    if (has_multiplicity_one_factor(f).certificate != f.monic()) continue;
    if (has_multiplicity_one_factor(g).certificate != g.monic()) continue;
    CHECK(has_multiplicity_one_factor(f * g).verdict);
    CHECK(has_multiplicity_one_factor(f * g * g).certificate == f.monic());
    ++tested;
  }
}

TEST_CASE("main criterion") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r3 = make_ring({"x", "y", "z"});
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  auto node = check_mld_hat_equals_n(principal(r2, "x*y"), origin(2), true);
  CHECK(node.reduced_component == true);
  CHECK(node.lambda_verdict == true);
  CHECK(node.mld_hat_equals_n == true);

  auto cusp = check_mld_hat_equals_n(principal(r2, "x^2 - y^3"), origin(2), true);
  CHECK(cusp.reduced_component == false);
  CHECK(cusp.lambda_verdict == false);
  CHECK(cusp.lambda_cross_check->rows[0].lambda0 == 1);

  auto umbrella = check_mld_hat_equals_n(principal(r3, "x^2 - y^2*z"), origin(3), true);
  CHECK(umbrella.reduced_component == false);
  CHECK(umbrella.lambda_verdict == false);

  auto cone = check_mld_hat_equals_n(principal(r4, "x*y - z*w"), origin(4), true);
  CHECK(cone.reduced_component == true);
  CHECK(cone.lambda_verdict == true);

  // Smooth plane in A^4 given by two equations.
  auto plane = check_mld_hat_equals_n(Ideal(r4, {P(r4, "x"), P(r4, "z")}), origin(4), true);
  CHECK(plane.reduced_component == true);
  CHECK(plane.lambda_verdict == true);
}

TEST_CASE("non-principal tangent cones are undecided unless they collapse") {
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  // Two planes meeting in a point: cone (x, y) ∩ (z, w) is not principal.
  const Ideal planes(r4, {P(r4, "x*z"), P(r4, "x*w"), P(r4, "y*z"), P(r4, "y*w")});
  auto r = check_mld_hat_equals_n(planes, origin(4), false);
  CHECK_FALSE(r.reduced_component.has_value());
  CHECK_FALSE(r.mld_hat_equals_n.has_value());
  // Cusp times a line inside a hyperplane: cone (w, x^2) collapses to x^2 in (x, y, z).
  const Ideal embedded(r4, {P(r4, "w - y^2"), P(r4, "x^2 - y^3")});
  auto e = check_mld_hat_equals_n(embedded, origin(4), false);
  REQUIRE(e.reduced_component.has_value());
  CHECK_FALSE(*e.reduced_component);
}

TEST_CASE("lct bounds on smooth ambient space") {
  const Ring r1 = make_ring({"x"});
  const Ring r2 = make_ring({"x", "y"});
  auto a = lct_hat_bound(std::nullopt, Ideal(r2, {P(r2, "x"), P(r2, "y")}), 3);
  for (const auto& row : a.rows) CHECK(row.codim == 2 * row.m);
  CHECK(a.bound == Rational(2));
  auto b = lct_hat_bound(std::nullopt, principal(r1, "x^2"), 2);
  CHECK(b.rows[1].codim == 1);
  CHECK(b.bound == Rational(1, 2));
  auto c = lct_hat_bound(std::nullopt, Ideal(r2, {P(r2, "x^2"), P(r2, "y^3")}), 6);
  // Independent count: ord x >= ceil(m/2) and ord y >= ceil(m/3).
  for (const auto& row : c.rows) CHECK(row.codim == (row.m + 1) / 2 + (row.m + 2) / 3);
  CHECK(c.bound == Rational(5, 6));
  CHECK(c.argmin == 6);
}

TEST_CASE("property: lct bound does not increase with M") {
  const Ring r2 = make_ring({"x", "y"});
  const Ideal a(r2, {P(r2, "x^2"), P(r2, "x*y^2"), P(r2, "y^3")});
  Rational previous(1000);
  for (int M = 1; M <= 4; ++M) {
    const auto t = lct_hat_bound(std::nullopt, a, M);
    CHECK(*t.bound <= previous);
    previous = *t.bound;
  }
}

TEST_CASE("lct bound on a singular variety") {
  const Ring r2 = make_ring({"x", "y"});
  // On the smooth line x = 0 the ideal (y) has lct 1, as on A^1.
  auto line = lct_hat_bound(principal(r2, "x"), principal(r2, "y"), 3);
  CHECK(line.bound == Rational(1));
  for (const auto& row : line.rows) CHECK(row.codim == row.m);
  // Maximal ideal of the node: every arc through the point has order >= 1 and
  // the node's arcs through 0 sit over two lines.
  auto node = lct_hat_bound(principal(r2, "x*y"), Ideal(r2, {P(r2, "x"), P(r2, "y")}), 2);
  CHECK(node.rows[0].codim == 1);
  CHECK(node.bound == Rational(1));
}

TEST_CASE("mld bounds") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  auto trivial = mld_hat_bound({MldClause{principal(r2, "1"), Rational(1)}}, origin(2), 1);
  CHECK(trivial.bound == Rational(2));
  auto maximal = mld_hat_bound({MldClause{Ideal(r2, {P(r2, "x"), P(r2, "y")}), Rational(1)}}, origin(2), 2);
  CHECK(maximal.bound == Rational(1));
  CHECK(maximal.argmin == std::vector<int>{1});
  const Ideal product = ideal_product(Ideal(r4, {P(r4, "x"), P(r4, "z")}), principal(r4, "x*y - z*w"));
  auto ex = mld_hat_bound({MldClause{product, Rational(1)}}, origin(4), 3);
  CHECK(ex.bound == Rational(1));
  CHECK(ex.argmin == std::vector<int>{3});
  CHECK(ex.rows[3].codim == 4);
  CHECK_THROWS_AS(mld_hat_bound({MldClause{product, Rational(0)}}, origin(4), 3), PreconditionError);
}

TEST_CASE("mld bound with two clauses and a non-point center") {
  const Ring r2 = make_ring({"x", "y"});
  // mld(W; A^2, x^(1/2) y^(1/2)) with W = the line y = 0.
  auto t = mld_hat_bound({MldClause{principal(r2, "x"), Rational(1, 2)}, MldClause{principal(r2, "y"), Rational(1, 2)}},
                         Center{principal(r2, "y")}, 2);
  CHECK(t.rows.size() == 9);
  // m = (0, 1): arcs with y(0) = 0, codim 1, value 1 - 1/2.
  CHECK(t.rows[1].codim == 1);
  CHECK(t.rows[1].value == Rational(1, 2));
  CHECK(t.bound == Rational(1, 2));
}

TEST_CASE("ord along the blow-up of the origin") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  const Ideal product = ideal_product(Ideal(r4, {P(r4, "x"), P(r4, "z")}), principal(r4, "x*y - z*w"));
  const auto o = ord_blowup_origin(product);
  CHECK(o.ord == 3);
  CHECK(o.k_E == 3);
  CHECK(o.value == 1);
  CHECK(ord_blowup_origin(Ideal(r2, {P(r2, "x"), P(r2, "y")})).ord == 1);
  CHECK(ord_blowup_origin(principal(r2, "x^2 + y^3")).ord == 2);
  CHECK_THROWS_AS(ord_blowup_origin(Ideal::zero(r2)), PreconditionError);
}

TEST_CASE("mld from lambda and inversion of adjunction on the plane") {
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  const Ideal plane(r4, {P(r4, "x"), P(r4, "z")});
  const auto lr = lambda_sequence(plane, origin(4), 2, 2);
  CHECK(mld_hat_from_lambda(lr) == Rational(2));
  // The ambient side: mld(0; A^4, I_X^2).
  const auto amb = mld_hat_bound({MldClause{plane, Rational(2)}}, origin(4), 3);
  CHECK(amb.bound == Rational(2));

  LambdaReport partial = lr;
  partial.stabilized = false;
  CHECK_THROWS_AS(mld_hat_from_lambda(partial), PreconditionError);
}
