#include "jetspace/invariants.hpp"

#include <algorithm>

#include "jetspace/errors.hpp"
#include "jetspace/parallel.hpp"

namespace jetspace {

namespace {

std::vector<Polynomial> translated(const Ideal& I, const Point& point) {
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) out.push_back(translate_to_origin(g, point));
  return out;
}

// Splits a homogeneous reduced basis into linear forms and the rest. The rest
// avoids the leading variables of the linear forms, so the cone is V(rest)
// inside the linear space, with the non-leading variables as coordinates.
struct LinearSplit {
  std::vector<Polynomial> linear;
  std::vector<Polynomial> rest;
  std::vector<std::size_t> free_vars;
};

LinearSplit split_linear(const Ideal& cone, const Budget& budget) {
  LinearSplit out;
  const std::size_t n = cone.ring().size();
  std::vector<char> pivot(n, 0);
  for (const auto& g : cone.basis(TermOrder::grevlex(), budget)) {
    if (g.degree() == 1u) {
      out.linear.push_back(g);
      const auto& lm = g.leading_term().monomial;
      for (std::size_t i = 0; i < n; ++i)
        if (lm[i] != 0) pivot[i] = 1;
    } else {
      out.rest.push_back(g);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) out.free_vars.push_back(i);
  return out;
}

template <class Outcomes>
void rethrow_first_error(const Outcomes& outcomes) {
  for (const auto& o : outcomes)
    if (o.error) std::rethrow_exception(o.error);
}

}  // namespace

TangentCone tangent_cone(const Ideal& I, const Point& point, const Budget& budget) {
  if (I.is_zero()) throw PreconditionError("tangent cone of the zero ideal");
  if (!on_variety(I, point)) throw PreconditionError("point is not on the variety");
  const Ideal moved(I.ring(), translated(I, point));
  if (moved.generators().size() == 1)
    return TangentCone{Ideal(I.ring(), {initial_form(moved.generators().front())}),
                       ConeSource::hypersurface_initial_form};
  const Ideal cone = initial_ideal_at_origin(moved, budget);
  return TangentCone{groebner_basis(cone, TermOrder::grevlex(), budget), ConeSource::homogenization_gb};
}

FactorVerdict has_multiplicity_one_factor(const Polynomial& f, const Budget& budget) {
  if (f.is_constant()) throw PreconditionError("multiplicity-one test needs a nonconstant polynomial");
  Polynomial g = f;
  for (std::size_t i = 0; i < f.ring().size(); ++i) {
    const Polynomial d = f.derivative(i);
    if (!d.is_zero()) g = gcd_poly(g, d, budget);
  }
  const auto rad = divide_exact(f, g);
  if (!rad) throw ConsistencyError("gcd(f, df) does not divide f");
  const Polynomial shared = gcd_poly(g, *rad, budget);
  const auto q = divide_exact(*rad, shared);
  if (!q) throw ConsistencyError("gcd(g, rad) does not divide rad");
  return FactorVerdict{!q->is_constant(), q->monic()};
}

InvariantReport check_mld_hat_equals_n(const Ideal& I, const Point& point, bool cross_check, int e_max,
                                       const Budget& budget, int jobs) {
  if (!on_variety(I, point)) throw PreconditionError("point is not on the variety");
  const int n = krull_dimension(I, budget).dim;
  if (n < 1) throw PreconditionError("variety must have positive dimension");

  InvariantReport report{n, tangent_cone(I, point, budget), {}, {}, {}, {}, {}, {}, false, true, {}};
  const LinearSplit split = split_linear(report.tangent_cone.ideal, budget);
  if (split.rest.size() > 1) {
    report.notes.push_back("undecided by (v): tangent cone is not principal");
  } else {
    // A single form in the free coordinates; no form means the cone is a linear space.
    const Ring& ring = I.ring();
    std::vector<std::string> names;
    std::vector<std::size_t> map(ring.size(), 0);
    for (std::size_t k = 0; k < split.free_vars.size(); ++k) {
      names.push_back(ring.name(split.free_vars[k]));
      map[split.free_vars[k]] = k;
    }
    if (split.rest.empty()) {
      report.reduced_component = true;
      report.certificate = split.linear.empty() ? Polynomial::constant(ring, 1) : split.linear.front();
      report.notes.push_back("tangent cone is a linear space");
    } else {
      const Polynomial form = split.rest.front().remap(Ring(names), map);
      const FactorVerdict v = has_multiplicity_one_factor(form, budget);
      report.reduced_component = v.verdict;
      report.certificate = v.certificate;
      report.reduced_form = form;
    }
  }

  if (cross_check) {
    LambdaReport lr = lambda_sequence(I, point, 1, e_max, budget, jobs);
    const LambdaRow& row = lr.rows.front();
    if (row.converged) report.lambda_verdict = row.lambda0 == 0;
    else report.notes.push_back("lambda cross-check did not converge at e_max = " + std::to_string(e_max));
    report.lambda_cross_check = std::move(lr);
  }

  report.mld_hat_equals_n = report.reduced_component ? report.reduced_component : report.lambda_verdict;
  if (report.reduced_component && report.lambda_verdict) {
    report.agreement_checked = true;
    report.agreement = *report.reduced_component == *report.lambda_verdict;
    if (!report.agreement) {
      if (n >= 2)
        throw ConsistencyError("tangent-cone verdict and lambda_1^0 verdict disagree");
      report.notes.push_back("tangent-cone and lambda_1^0 verdicts disagree; the equivalence is only asserted for n >= 2");
    }
  }
  return report;
}

ThresholdTable lct_hat_bound(const std::optional<Ideal>& X, const Ideal& a, int M, int e_max, const Budget& budget,
                             int jobs) {
  if (a.is_zero()) throw PreconditionError("lct of the zero ideal");
  if (M < 1) throw PreconditionError("M must be at least 1");
  if (e_max < 0) throw PreconditionError("e_max must be non-negative");
  ThresholdTable table;
  table.M = M;
  table.smooth_ambient = !X.has_value();
  const auto N = static_cast<int>(a.ring().size());

  if (!X) {
    auto outcomes = evaluate_cells(static_cast<std::size_t>(M), jobs, [&](std::size_t i) {
      const int m = static_cast<int>(i) + 1;
      const ContactIdeal c = contact_ideal({ContactClause{a, Relation::at_least, static_cast<unsigned>(m)}}, m - 1);
      return N * m - krull_dimension(c.closed.ideal, budget).dim;
    });
    rethrow_first_error(outcomes);
    for (int m = 1; m <= M; ++m) {
      const int codim = *outcomes[static_cast<std::size_t>(m - 1)].value;
      table.rows.push_back(ThresholdRow{m, codim, Rational(codim, m)});
    }
  } else {
    require_same_ring(X->ring(), a.ring(), "lct bound");
    const int n = complete_intersection_dim(*X, budget);
    const Ideal jac = jacobian_ideal(*X, X->generators().size());
    const auto width = static_cast<std::size_t>(e_max) + 1;
    auto outcomes = evaluate_cells(static_cast<std::size_t>(M) * width, jobs, [&](std::size_t i) {
      const auto m = static_cast<unsigned>(i / width) + 1;
      const auto e = static_cast<unsigned>(i % width);
      const unsigned t = std::max(m - 1, e);
      const int d = image_dimension(*X, jac, std::nullopt, ImageCell{t, e, t + e},
                                    {ContactClause{a, Relation::at_least, m}}, budget);
      return d < 0 ? std::optional<int>() : std::optional<int>(static_cast<int>(t + 1) * n - d);
    });
    rethrow_first_error(outcomes);
    for (int m = 1; m <= M; ++m) {
      std::optional<int> codim;
      for (std::size_t e = 0; e < width; ++e) {
        const auto& c = *outcomes[static_cast<std::size_t>(m - 1) * width + e].value;
        if (c && (!codim || *c < *codim)) codim = c;
      }
      table.rows.push_back(
          ThresholdRow{m, codim, codim ? std::optional<Rational>(Rational(*codim, m)) : std::nullopt});
    }
  }

  for (const auto& row : table.rows) {
    if (row.ratio && (!table.bound || *row.ratio < *table.bound)) {
      table.bound = row.ratio;
      table.argmin = row.m;
    }
  }
  table.interior_minimum = table.bound.has_value() && table.argmin < M;
  return table;
}

MldTable mld_hat_bound(const std::vector<MldClause>& clauses, const Center& W, int M, const Budget& budget,
                       int jobs) {
  if (clauses.empty()) throw PreconditionError("mld bound needs at least one clause");
  if (M < 1) throw PreconditionError("M must be at least 1");
  const Ring& ring = clauses.front().ideal.ring();
  for (const auto& c : clauses) {
    require_same_ring(ring, c.ideal.ring(), "mld clauses");
    if (c.ideal.is_zero()) throw PreconditionError("mld clause with the zero ideal");
    if (c.exponent.sign() <= 0) throw PreconditionError("mld exponents must be positive");
  }
  const Point* point = std::get_if<Point>(&W);
  if (point && point->size() != ring.size()) throw PreconditionError("point length does not match the ring");
  if (const Ideal* w = std::get_if<Ideal>(&W)) {
    require_same_ring(ring, w->ring(), "mld center");
    if (is_unit_ideal(*w, budget)) throw PreconditionError("center must be a proper closed subset");
  }

  MldTable table;
  table.M = M;
  for (const auto& c : clauses) table.exponents.push_back(c.exponent);

  const std::size_t r = clauses.size();
  std::vector<std::vector<int>> box;
  std::vector<int> cur(r, 0);
  while (true) {
    box.push_back(cur);
    std::size_t k = r;
    while (k > 0 && cur[k - 1] == M) cur[--k] = 0;
    if (k == 0) break;
    ++cur[k - 1];
  }

  const auto N = static_cast<int>(ring.size());
  auto outcomes = evaluate_cells(box.size(), jobs, [&](std::size_t i) {
    const auto& ms = box[i];
    const int top = *std::max_element(ms.begin(), ms.end());
    const int s = std::max(1, top) - 1;
    ContactSpec spec;
    for (std::size_t k = 0; k < r; ++k)
      if (ms[k] > 0) spec.push_back(ContactClause{clauses[k].ideal, Relation::at_least, static_cast<unsigned>(ms[k])});
    std::optional<Point> fiber;
    if (point) {
      fiber = *point;
    } else {
      spec.push_back(ContactClause{std::get<Ideal>(W), Relation::at_least, 1});
    }
    // With only the fiber condition every jet over the point qualifies.
    const int d = spec.empty() ? N * s : krull_dimension(contact_ideal(spec, s, fiber).closed.ideal, budget).dim;
    return d < 0 ? std::optional<int>() : std::optional<int>(N * (s + 1) - d);
  });
  rethrow_first_error(outcomes);

  for (std::size_t i = 0; i < box.size(); ++i) {
    MldRow row{box[i], *outcomes[i].value, std::nullopt};
    if (row.codim) {
      Rational v(*row.codim);
      for (std::size_t k = 0; k < r; ++k) v -= Rational(box[i][k]) * clauses[k].exponent;
      row.value = v;
      if (!table.bound || v < *table.bound) {
        table.bound = v;
        table.argmin = box[i];
      }
    }
    table.rows.push_back(std::move(row));
  }
  table.interior_minimum =
      table.bound.has_value() && std::all_of(table.argmin.begin(), table.argmin.end(), [&](int m) { return m < M; });
  return table;
}

BlowupOrder ord_blowup_origin(const Ideal& I) {
  if (I.is_zero()) throw PreconditionError("order of the zero ideal");
  std::uint64_t ord = *I.generators().front().low_degree();
  for (const auto& g : I.generators()) ord = std::min(ord, *g.low_degree());
  const int k_E = static_cast<int>(I.ring().size()) - 1;
  const int o = static_cast<int>(ord);
  return BlowupOrder{o, k_E, k_E - o + 1};
}

Rational mld_hat_from_lambda(const LambdaReport& report) {
  if (!report.stabilized || !report.lambda) throw PreconditionError("lambda report has not stabilized");
  return Rational(report.n + *report.lambda);
}

}  // namespace jetspace
