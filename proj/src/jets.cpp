#include "jetspace/jets.hpp"

#include <algorithm>
#include <numeric>

#include "jetspace/errors.hpp"
#include "jetspace/parallel.hpp"

namespace jetspace {

namespace {

std::vector<Polynomial> translated(const std::vector<Polynomial>& gens, const std::optional<Point>& point) {
  if (!point) return gens;
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(translate_to_origin(g, *point));
  return out;
}

void push_coefficients(std::vector<Polynomial>& out, const Polynomial& f, const JetRing& jets, unsigned upto) {
  const auto coeffs = t_expand(f, jets);
  for (unsigned j = 0; j < upto && j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) out.push_back(coeffs[j]);
}

Polynomial determinant(std::vector<std::vector<Polynomial>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Polynomial det(a[0][0].ring());
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = a[0][col] * determinant(std::move(minor));
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// dim of the closure of the projection of V(gens [, 1 - w c]) to the first
// `kept` jet variables.
int projected_dimension(const JetRing& jets, std::size_t kept, const std::vector<Polynomial>& gens,
                        const Polynomial* saturate_by, const Budget& budget) {
  const Ring& jr = jets.ring();
  const std::size_t total = jr.size();
  const std::size_t trailing = total - kept;
  const bool sat = saturate_by != nullptr;

  std::vector<std::string> names;
  if (sat) names.push_back(fresh_variable_name(jr, "_w"));
  for (std::size_t i = kept; i < total; ++i) names.push_back(jr.name(i));
  for (std::size_t i = 0; i < kept; ++i) names.push_back(jr.name(i));
  Ring ext(std::move(names));

  const std::size_t offset = sat ? 1 : 0;
  std::vector<std::size_t> map(total);
  for (std::size_t i = 0; i < total; ++i) map[i] = i >= kept ? offset + (i - kept) : offset + trailing + i;

  std::vector<Polynomial> ext_gens;
  ext_gens.reserve(gens.size() + 1);
  for (const auto& g : gens) ext_gens.push_back(g.remap(ext, map));
  if (sat)
    ext_gens.push_back(Polynomial::constant(ext, 1) -
                       Polynomial::variable(ext, 0) * saturate_by->remap(ext, map));
  const Ideal full(ext, std::move(ext_gens));

  const std::size_t drop = offset + trailing;
  if (kept == 0) return is_unit_ideal(full, budget) ? -1 : 0;
  if (drop == 0) return krull_dimension(full, budget).dim;
  return krull_dimension(eliminate(full, drop, budget), budget).dim;
}

}  // namespace

JetIdeal jet_ideal(const Ideal& I, int m) {
  if (m < 0) throw PreconditionError("jet level must be non-negative");
  JetRing jets(I.ring(), static_cast<unsigned>(m));
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) push_coefficients(gens, f, jets, static_cast<unsigned>(m) + 1);
  Ideal ideal(jets.ring(), std::move(gens));
  return JetIdeal{std::move(jets), std::move(ideal), "jets level " + std::to_string(m)};
}

ContactIdeal contact_ideal(const ContactSpec& spec, int m, const std::optional<Point>& point) {
  if (m < 0) throw PreconditionError("jet level must be non-negative");
  if (spec.empty()) throw PreconditionError("contact spec has no clauses");
  const Ring& base = spec.front().ideal.ring();
  const auto level = static_cast<unsigned>(m);
  JetRing jets(base, level, point ? 1 : 0);
  std::vector<Polynomial> gens;
  std::vector<Polynomial> excluded;
  std::string provenance = "contact level " + std::to_string(m);
  for (const auto& clause : spec) {
    require_same_ring(base, clause.ideal.ring(), "contact clauses");
    if (clause.ideal.is_zero()) throw PreconditionError("contact clause with the zero ideal");
    if (clause.relation == Relation::at_least && clause.order > level + 1)
      throw PreconditionError("contact order " + std::to_string(clause.order) + " is not visible at level " +
                              std::to_string(m));
    if (clause.relation == Relation::exactly && clause.order > level)
      throw PreconditionError("exact contact order " + std::to_string(clause.order) + " exceeds level " +
                              std::to_string(m));
    for (const auto& f : translated(clause.ideal.generators(), point)) {
      const auto coeffs = t_expand(f, jets);
      for (unsigned j = 0; j < clause.order; ++j)
        if (!coeffs[j].is_zero()) gens.push_back(coeffs[j]);
      if (clause.relation == Relation::exactly && !coeffs[clause.order].is_zero())
        excluded.push_back(coeffs[clause.order]);
    }
    provenance += clause.relation == Relation::at_least ? ", >=" : ", =";
    provenance += std::to_string(clause.order);
  }
  if (point) provenance += ", fiber over point";
  Ideal ideal(jets.ring(), std::move(gens));
  return ContactIdeal{JetIdeal{std::move(jets), std::move(ideal), std::move(provenance)}, std::move(excluded)};
}

Ideal jacobian_ideal(const Ideal& I, std::size_t c) {
  const auto& gens = I.generators();
  const std::size_t n = I.ring().size();
  if (c == 0) throw PreconditionError("jacobian ideal needs c >= 1");
  if (c > gens.size()) throw PreconditionError("c exceeds the number of generators");
  if (c > n) throw PreconditionError("c exceeds the number of variables");
  std::vector<std::vector<Polynomial>> partials(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) partials[k].push_back(gens[k].derivative(i));
  std::vector<Polynomial> minors;
  for (const auto& rows : subsets(gens.size(), c)) {
    for (const auto& cols : subsets(n, c)) {
      std::vector<std::vector<Polynomial>> a;
      for (std::size_t r : rows) {
        std::vector<Polynomial> row;
        for (std::size_t col : cols) row.push_back(partials[r][col]);
        a.push_back(std::move(row));
      }
      Polynomial d = determinant(std::move(a));
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  return Ideal(I.ring(), std::move(minors));
}

bool on_variety(const Ideal& I, const Point& point) {
  if (point.size() != I.ring().size()) throw PreconditionError("point length does not match the ring");
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Polynomial& f) { return f.evaluate(point).is_zero(); });
}

int complete_intersection_dim(const Ideal& I, const Budget& budget) {
  const int c = static_cast<int>(I.generators().size());
  const int n = static_cast<int>(I.ring().size()) - c;
  const int d = krull_dimension(I, budget).dim;
  if (d != n)
    throw PreconditionError("ideal with " + std::to_string(c) + " generators is not a complete intersection (dim " +
                            std::to_string(d) + ")");
  return n;
}

int image_dimension(const Ideal& I, const Ideal& jac, const std::optional<Point>& point, const ImageCell& cell,
                    const ContactSpec& extra, const Budget& budget) {
  require_same_ring(I.ring(), jac.ring(), "image cell");
  if (cell.level < std::max(cell.m, cell.e)) throw PreconditionError("image cell level below max(m, e)");
  if (point && !on_variety(I, *point)) throw PreconditionError("point is not on the variety");
  const unsigned first = point ? 1 : 0;
  if (cell.m + 1 < first) throw PreconditionError("image cell level m below the first jet level");
  JetRing jets(I.ring(), cell.level, first);
  const std::size_t kept = I.ring().size() * (cell.m + 1 - first);

  std::vector<Polynomial> gens;
  for (const auto& f : translated(I.generators(), point)) push_coefficients(gens, f, jets, cell.level + 1);
  std::vector<Polynomial> candidates;
  for (const auto& g : translated(jac.generators(), point)) {
    const auto coeffs = t_expand(g, jets);
    for (unsigned j = 0; j < cell.e; ++j)
      if (!coeffs[j].is_zero()) gens.push_back(coeffs[j]);
    if (!coeffs[cell.e].is_zero()) candidates.push_back(coeffs[cell.e].monic());
  }
  for (const auto& clause : extra) {
    require_same_ring(I.ring(), clause.ideal.ring(), "image cell clauses");
    if (clause.relation != Relation::at_least) throw PreconditionError("image cells take only '>=' clauses");
    if (clause.order > cell.level + 1) throw PreconditionError("clause order not visible at the cell level");
    for (const auto& f : translated(clause.ideal.generators(), point)) push_coefficients(gens, f, jets, clause.order);
  }

  if (candidates.empty()) return -1;
  for (const auto& c : candidates)
    if (c.is_constant()) return projected_dimension(jets, kept, gens, nullptr, budget);

  std::sort(candidates.begin(), candidates.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  int best = -1;
  for (const auto& c : candidates) best = std::max(best, projected_dimension(jets, kept, gens, &c, budget));
  return best;
}

int liftable_image_dim(const Ideal& I, const Point& point, int m, int e, const Budget& budget) {
  if (m < 0 || e < 0) throw PreconditionError("m and e must be non-negative");
  if (m < e) throw PreconditionError("liftable image needs m >= e");
  const Ideal jac = jacobian_ideal(I, I.generators().size());
  const auto mu = static_cast<unsigned>(m);
  const auto eu = static_cast<unsigned>(e);
  return image_dimension(I, jac, point, ImageCell{mu, eu, mu + eu}, {}, budget);
}

int liftable_image_dim_any(const Ideal& I, const Ideal& jac, const Point& point, unsigned m, unsigned e,
                           unsigned lift_extra, const Budget& budget) {
  return image_dimension(I, jac, point, ImageCell{m, e, std::max(m, e) + e + lift_extra}, {}, budget);
}

LambdaReport lambda_sequence(const Ideal& I, const Point& point, int m_max, int e_max, const Budget& budget,
                             int jobs) {
  const int n = complete_intersection_dim(I, budget);
  return lambda_sequence(I, jacobian_ideal(I, I.generators().size()), n, point, m_max, e_max, budget, jobs);
}

LambdaReport lambda_sequence(const Ideal& I, const Ideal& jac, int n, const Point& point, int m_max, int e_max,
                             const Budget& budget, int jobs) {
  if (m_max < 1) throw PreconditionError("m_max must be at least 1");
  if (e_max < 0) throw PreconditionError("e_max must be non-negative");
  if (n < 1) throw PreconditionError("variety must have positive dimension");
  if (!on_variety(I, point)) throw PreconditionError("point is not on the variety");

  const auto width = static_cast<std::size_t>(e_max) + 2;
  const std::size_t count = static_cast<std::size_t>(m_max) * width;
  auto outcomes = evaluate_cells(count, jobs, [&](std::size_t i) {
    const auto m = static_cast<unsigned>(i / width) + 1;
    const auto e = static_cast<unsigned>(i % width);
    return liftable_image_dim_any(I, jac, point, m, e, 0, budget);
  });

  LambdaReport report;
  report.point = point;
  report.n = n;
  report.e_max = e_max;
  for (int m = 1; m <= m_max; ++m) {
    LambdaRow row;
    row.m = m;
    row.e_min = 0;
    row.e_max = e_max;
    int best = -1;
    int best_extended = -1;
    for (std::size_t e = 0; e < width; ++e) {
      auto& outcome = outcomes[static_cast<std::size_t>(m - 1) * width + e];
      int d = -1;
      if (outcome.error) {
        try {
          std::rethrow_exception(outcome.error);
        } catch (const BudgetExhausted& ex) {
          row.budget_exhausted = true;
          row.note = ex.what();
        }
      } else {
        d = *outcome.value;
      }
      if (static_cast<int>(e) <= e_max) {
        row.cell_dims.push_back(d);
        if (d > best) {
          best = d;
          row.e_argmax = static_cast<int>(e);
        }
      }
      best_extended = std::max(best_extended, d);
    }
    row.nonempty = best >= 0;
    row.lambda0 = row.nonempty ? m * n - best : 0;
    row.converged = row.nonempty && !row.budget_exhausted && best_extended == best;
    if (!row.nonempty && !row.budget_exhausted) row.note = "every cell up to e_max is empty; the Jacobian order at the point may exceed e_max";
    report.rows.push_back(std::move(row));
  }

  const auto& rows = report.rows;
  const bool all_converged = std::all_of(rows.begin(), rows.end(), [](const LambdaRow& r) { return r.converged; });
  if (rows.back().converged) report.lambda = rows.back().lambda0;
  report.stabilized = all_converged && rows.size() >= 2 && rows[rows.size() - 1].lambda0 == rows[rows.size() - 2].lambda0;

  // Isolated singularity (or smooth point): the singular locus of X near the point is at most the point.
  std::vector<Polynomial> sing = translated(I.generators(), point);
  for (const auto& g : translated(jac.generators(), point)) sing.push_back(g);
  const Ideal singular(I.ring(), std::move(sing));
  report.isolated = krull_dimension(initial_ideal_at_origin(singular, budget), budget).dim <= 0;
  if (report.stabilized) report.mld_hat = Rational(n + *report.lambda);
  return report;
}

}  // namespace jetspace
