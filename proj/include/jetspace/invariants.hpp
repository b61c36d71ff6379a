#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jetspace/groebner.hpp"
#include "jetspace/jets.hpp"

namespace jetspace {

enum class ConeSource { hypersurface_initial_form, homogenization_gb };

/// Tangent cone at a point, as a homogeneous ideal in the base variables
/// (the point moved to the origin).
struct TangentCone {
  Ideal ideal;
  ConeSource source;
};

TangentCone tangent_cone(const Ideal& I, const Point& point, const Budget& budget = {});

struct FactorVerdict {
  bool verdict = false;
  /// Product of the multiplicity-one irreducible factors (1 when there are none).
  Polynomial certificate;
};

/// Whether f has an irreducible factor of multiplicity one, without
/// factoring: g = gcd(f, ∂f), rad = f / g, answer rad / gcd(g, rad).
FactorVerdict has_multiplicity_one_factor(const Polynomial& f, const Budget& budget = {});

struct InvariantReport {
  int n = 0;
  TangentCone tangent_cone;
  /// Verdict of the tangent-cone criterion; empty when it cannot be decided.
  std::optional<bool> reduced_component;
  std::optional<Polynomial> certificate;
  /// Polynomial in the free coordinates of the linear part that the verdict was read from.
  std::optional<Polynomial> reduced_form;
  std::optional<LambdaReport> lambda_cross_check;
  /// λ₁⁰ = 0, when the cross-check converged.
  std::optional<bool> lambda_verdict;
  std::optional<bool> mld_hat_equals_n;
  bool agreement_checked = false;
  bool agreement = true;
  std::vector<std::string> notes;
};

/// Decides mld̂(x; X) = n through the tangent cone and, with `cross_check`,
/// through λ₁⁰. A disagreement raises ConsistencyError for n >= 2.
InvariantReport check_mld_hat_equals_n(const Ideal& I, const Point& point, bool cross_check, int e_max = 3,
                                       const Budget& budget = {}, int jobs = 1);

struct ThresholdRow {
  int m = 0;
  /// Codimension of Cont^{>=m}(a); empty when the locus is not seen by any cell.
  std::optional<int> codim;
  std::optional<Rational> ratio;
};

struct ThresholdTable {
  std::vector<ThresholdRow> rows;
  std::optional<Rational> bound;
  int argmin = 0;
  int M = 0;
  /// The minimum is attained before the last row.
  bool interior_minimum = false;
  bool smooth_ambient = true;
};

/// Finite-level bound min_{m <= M} codim(Cont^{>=m}(a)) / m. With `X`
/// absent the ambient affine space is smooth; otherwise X = V(*X) is a
/// complete intersection and codimensions go through Jacobian contact cells
/// e <= e_max.
ThresholdTable lct_hat_bound(const std::optional<Ideal>& X, const Ideal& a, int M, int e_max = 3,
                             const Budget& budget = {}, int jobs = 1);

struct MldClause {
  Ideal ideal;
  Rational exponent;
};

struct MldRow {
  std::vector<int> m;
  /// Codimension of the "≥" contact locus in the arc space; empty when the locus is empty.
  std::optional<int> codim;
  std::optional<Rational> value;
};

struct MldTable {
  std::vector<MldRow> rows;
  std::optional<Rational> bound;
  std::vector<int> argmin;
  std::vector<Rational> exponents;
  int M = 0;
  /// The minimum is attained with every m_i < M.
  bool interior_minimum = false;
};

/// W is either a point or the ideal of a closed subset.
using Center = std::variant<Point, Ideal>;

/// Finite-box bound for mld̂(W; A^N, ∏ a_i^{e_i}) over m_i in 0..M.
MldTable mld_hat_bound(const std::vector<MldClause>& clauses, const Center& W, int M, const Budget& budget = {},
                       int jobs = 1);

struct BlowupOrder {
  int ord = 0;
  int k_E = 0;
  /// k_E - ord + 1.
  int value = 0;
};

/// Order of I along the exceptional divisor of the blow-up of A^N at the origin.
BlowupOrder ord_blowup_origin(const Ideal& I);

/// n + λ from a stabilized report.
Rational mld_hat_from_lambda(const LambdaReport& report);

}  // namespace jetspace
