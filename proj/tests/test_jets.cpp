#include <doctest.h>

#include "jetspace/errors.hpp"
#include "jetspace/jets.hpp"
#include "support.hpp"

using namespace jetspace;
using jetspace::testing::make_ring;
using jetspace::testing::P;
using jetspace::testing::PolyGen;

namespace {

Point origin(std::size_t n) { return Point(n, Rational(0)); }

Ideal principal(const Ring& r, std::string_view f) { return Ideal(r, {P(r, f)}); }

}  // namespace

TEST_CASE("jet ideals") {
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  const JetIdeal cone = jet_ideal(principal(r4, "x*y - z*w"), 1);
  const Ring& j = cone.jets.ring();
  CHECK(cone.jets.arity() == 8);
  REQUIRE(cone.ideal.generators().size() == 2);
  CHECK(cone.ideal.generators()[0] == P(j, "x_0*y_0 - z_0*w_0"));
  CHECK(cone.ideal.generators()[1] == P(j, "x_0*y_1 + x_1*y_0 - z_0*w_1 - z_1*w_0"));

  const Ring r1 = make_ring({"x"});
  const JetIdeal line = jet_ideal(principal(r1, "x"), 2);
  const Ring& k = line.jets.ring();
  CHECK(same_ideal(line.ideal, Ideal(k, {P(k, "x_0"), P(k, "x_1"), P(k, "x_2")})));
  CHECK_THROWS_AS(jet_ideal(principal(r1, "x"), -1), PreconditionError);
}

TEST_CASE("contact ideals") {
  const Ring r1 = make_ring({"x"});
  const auto c = contact_ideal({ContactClause{principal(r1, "x"), Relation::at_least, 2}}, 2);
  const Ring& k = c.closed.jets.ring();
  CHECK(same_ideal(c.closed.ideal, Ideal(k, {P(k, "x_0"), P(k, "x_1")})));
  CHECK(krull_dimension(c.closed.ideal).dim == 1);

  const Ring r2 = make_ring({"x", "y"});
  const auto fiber = contact_ideal({ContactClause{Ideal(r2, {P(r2, "x"), P(r2, "y")}), Relation::at_least, 1}}, 1);
  const Ring& f = fiber.closed.jets.ring();
  CHECK(same_ideal(fiber.closed.ideal, Ideal(f, {P(f, "x_0"), P(f, "y_0")})));

  const auto mono =
      contact_ideal({ContactClause{Ideal(r2, {P(r2, "x^2"), P(r2, "y^3")}), Relation::at_least, 2}}, 1);
  CHECK(mono.closed.ideal.generators().size() == 4);
  CHECK(krull_dimension(mono.closed.ideal).dim == 2);

  const auto exact = contact_ideal({ContactClause{principal(r1, "x"), Relation::exactly, 1}}, 2);
  REQUIRE(exact.excluded.size() == 1);
  CHECK(exact.excluded[0] == P(exact.closed.jets.ring(), "x_1"));

  CHECK_THROWS_AS(contact_ideal({ContactClause{principal(r1, "x"), Relation::at_least, 4}}, 2), PreconditionError);
  CHECK_THROWS_AS(contact_ideal({ContactClause{principal(r1, "x"), Relation::exactly, 3}}, 2), PreconditionError);
}

TEST_CASE("jacobian ideals") {
  const Ring r4 = make_ring({"x", "y", "z", "w"});
  CHECK(same_ideal(jacobian_ideal(principal(r4, "x*y - z*w"), 1),
                   Ideal(r4, {P(r4, "x"), P(r4, "y"), P(r4, "z"), P(r4, "w")})));
  CHECK(is_unit_ideal(jacobian_ideal(Ideal(r4, {P(r4, "x"), P(r4, "z")}), 2)));
  const Ring r2 = make_ring({"x", "y"});
  CHECK(same_ideal(jacobian_ideal(principal(r2, "x^2 - y^3"), 1), Ideal(r2, {P(r2, "x"), P(r2, "y^2")})));
  CHECK_THROWS_AS(jacobian_ideal(principal(r2, "x"), 2), PreconditionError);
  // 2x2 minors of (x y z; y z x) in three variables.
  const Ring r3 = make_ring({"x", "y", "z"});
  const Ideal two(r3, {P(r3, "x*y"), P(r3, "y*z")});
  CHECK(same_ideal(jacobian_ideal(two, 2), Ideal(r3, {P(r3, "y^2"), P(r3, "x*y"), P(r3, "y*z")})));
}

TEST_CASE("liftable image dimensions") {
  const Ring r2 = make_ring({"x", "y"});
  CHECK(liftable_image_dim(principal(r2, "x"), origin(2), 2, 0) == 2);
  CHECK(liftable_image_dim(principal(r2, "x^2 - y^3"), origin(2), 3, 3) == 2);
  CHECK(liftable_image_dim(principal(r2, "x*y"), origin(2), 2, 1) == 2);
  // The singular point has no arcs of Jacobian contact 0.
  CHECK(liftable_image_dim(principal(r2, "x*y"), origin(2), 2, 0) == -1);
  CHECK_THROWS_AS(liftable_image_dim(principal(r2, "x*y"), origin(2), 1, 2), PreconditionError);
  CHECK_THROWS_AS(liftable_image_dim(principal(r2, "x*y"), Point{Rational(1), Rational(1)}, 1, 0),
                  PreconditionError);
}

TEST_CASE("property: smooth points fibre with fiber A^n") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r3 = make_ring({"x", "y", "z"});
  struct Case {
    Ideal I;
    Point p;
    int n;
  };
  const std::vector<Case> cases{
      {principal(r2, "x*y"), Point{Rational(1), Rational(0)}, 1},
      {principal(r2, "x^2 - y^3"), Point{Rational(1), Rational(1)}, 1},
      {principal(r2, "x^2 - y^4"), Point{Rational(4), Rational(2)}, 1},
      {principal(r3, "x*y - z"), Point{Rational(1), Rational(2), Rational(2)}, 2},
      {principal(r3, "x^2 - y^2*z"), Point{Rational(1), Rational(1), Rational(1)}, 2},
  };
  for (const auto& c : cases)
    for (int m = 1; m <= 3; ++m) CHECK(liftable_image_dim(c.I, c.p, m, 0) == m * c.n);
}

TEST_CASE("property: image dimensions never exceed m n") {
  const Ring r2 = make_ring({"x", "y"});
  for (const char* f : {"x*y", "x^2 - y^3", "x^2 - y^4"}) {
    const Ideal I = principal(r2, f);
    const Ideal jac = jacobian_ideal(I, 1);
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned e = 0; e <= 3; ++e) CHECK(liftable_image_dim_any(I, jac, origin(2), m, e) <= static_cast<int>(m));
  }
}

TEST_CASE("property: lifting one level further does not change the image") {
  const Ring r2 = make_ring({"x", "y"});
  for (const char* f : {"x*y", "x^2 - y^3"}) {
    const Ideal I = principal(r2, f);
    const Ideal jac = jacobian_ideal(I, 1);
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned e = 0; e <= 3; ++e)
        CHECK(liftable_image_dim_any(I, jac, origin(2), m, e, 0) == liftable_image_dim_any(I, jac, origin(2), m, e, 1));
  }
}

TEST_CASE("property: truncating jets keeps the lower jet ideal") {
  const Ring r = make_ring({"x", "y", "z"});
  PolyGen gen(31);
  for (int k = 0; k < 20; ++k) {
    const Ideal I(r, {gen.nonconstant(r, 3, 3), gen.nonconstant(r, 3, 3)});
    const int m = gen.uniform(1, 3);
    const int p = gen.uniform(0, m - 1);
    const JetIdeal high = jet_ideal(I, m);
    const JetIdeal low = jet_ideal(I, p);
    // Every generator of X_p is a generator of X_m written in the prefix variables.
    const std::size_t prefix = low.jets.arity();
    std::vector<std::size_t> embed(prefix);
    for (std::size_t i = 0; i < prefix; ++i) embed[i] = i;
    for (const auto& g : low.ideal.generators()) CHECK(contains(high.ideal, g.remap(high.jets.ring(), embed)));
  }
}

TEST_CASE("property: truncated arcs satisfy the contact ideals") {
  const Ring r2 = make_ring({"x", "y"});
  PolyGen gen(32);
  // Node branches (0, s) and (s, 0); cusp arcs (s^3, s^2).
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> s(5, Rational(0));
    for (std::size_t j = 1; j < 5; ++j) s[j] = Rational(gen.uniform(-4, 4));
    auto power = [&](int e) {
      std::vector<Rational> acc(5, Rational(0));
      acc[0] = 1;
      for (int i = 0; i < e; ++i) {
        std::vector<Rational> next(5, Rational(0));
        for (std::size_t a = 0; a < 5; ++a)
          for (std::size_t b = 0; a + b < 5; ++b) next[a + b] += acc[a] * s[b];
        acc = next;
      }
      return acc;
    };
    const auto s2 = power(2);
    const auto s3 = power(3);
    const int m = 4;
    const Ideal cusp = principal(r2, "x^2 - y^3");
    const auto c = contact_ideal({ContactClause{cusp, Relation::at_least, 5},
                                  ContactClause{jacobian_ideal(cusp, 1), Relation::at_least, 3}},
                                 m, origin(2));
    // Coordinates of the level 1..4 jets of (s^3, s^2).
    std::vector<Rational> coords;
    for (std::size_t j = 1; j <= 4; ++j) {
      coords.push_back(s3[j]);
      coords.push_back(s2[j]);
    }
    for (const auto& g : c.closed.ideal.generators()) CHECK(g.evaluate(coords).is_zero());

    const Ideal node = principal(r2, "x*y");
    const auto d = contact_ideal({ContactClause{node, Relation::at_least, 5}}, m, origin(2));
    std::vector<Rational> branch;
    for (std::size_t j = 1; j <= 4; ++j) {
      branch.push_back(Rational(0));
      branch.push_back(s[j]);
    }
    for (const auto& g : d.closed.ideal.generators()) CHECK(g.evaluate(branch).is_zero());
  }
}

TEST_CASE("lambda sequences") {
  const Ring r2 = make_ring({"x", "y"});
  const Ring r4 = make_ring({"x", "y", "z", "w"});

  const LambdaReport node = lambda_sequence(principal(r2, "x*y"), origin(2), 2, 2);
  REQUIRE(node.rows.size() == 2);
  CHECK(node.rows[0].lambda0 == 0);
  CHECK(node.rows[1].lambda0 == 0);
  CHECK(node.stabilized);
  CHECK(node.isolated);
  CHECK(node.mld_hat == Rational(1));

  const LambdaReport cusp = lambda_sequence(principal(r2, "x^2 - y^3"), origin(2), 3, 3);
  for (const auto& row : cusp.rows) {
    CHECK(row.lambda0 == 1);
    CHECK(row.converged);
  }
  CHECK(cusp.mld_hat == Rational(2));

  const LambdaReport cone = lambda_sequence(principal(r4, "x*y - z*w"), origin(4), 2, 2);
  for (const auto& row : cone.rows) CHECK(row.lambda0 == 0);
  CHECK(cone.mld_hat == Rational(3));

  const Ring r3 = make_ring({"x", "y", "z"});
  const LambdaReport umbrella = lambda_sequence(principal(r3, "x^2 - y^2*z"), origin(3), 1, 3);
  CHECK(umbrella.rows[0].lambda0 == 1);
  CHECK_FALSE(umbrella.isolated);
}

TEST_CASE("lambda at a smooth point is zero") {
  const Ring r2 = make_ring({"x", "y"});
  const LambdaReport line = lambda_sequence(principal(r2, "x"), origin(2), 2, 1);
  CHECK(line.rows[0].lambda0 == 0);
  CHECK(line.mld_hat == Rational(1));
  CHECK(line.isolated);
}
