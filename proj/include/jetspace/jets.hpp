#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetspace/groebner.hpp"
#include "jetspace/series.hpp"

namespace jetspace {

/// Ideal in a jet ring together with a short record of how it was built.
struct JetIdeal {
  JetRing jets;
  Ideal ideal;
  std::string provenance;
};

/// X_m: all t-coefficients 0..m of all generators of I.
JetIdeal jet_ideal(const Ideal& I, int m);

enum class Relation { at_least, exactly };

struct ContactClause {
  Ideal ideal;
  Relation relation = Relation::at_least;
  unsigned order = 0;
};

using ContactSpec = std::vector<ContactClause>;

struct ContactIdeal {
  /// Ideal of the closed set cut out by all clauses read as "ord >= e".
  JetIdeal closed;
  /// Level-e coefficients of the "=" clauses; the locus is V(closed) minus
  /// the common zeros of closed + excluded.
  std::vector<Polynomial> excluded;
};

/// Contact loci at level m. With a point, generators are translated so the
/// point is the origin and the level-0 coordinates are dropped (set to 0).
ContactIdeal contact_ideal(const ContactSpec& spec, int m, const std::optional<Point>& point = std::nullopt);

/// Ideal of the c x c minors of the Jacobian matrix of I's generators.
Ideal jacobian_ideal(const Ideal& I, std::size_t c);

/// One cell of an image-dimension computation: the closure of
/// ψ_m(X_∞ ∩ Cont^e(jac) ∩ extra clauses [∩ π⁻¹(point)]) computed from level
/// `level` (at least max(m, e) + e so that the image is already stable).
struct ImageCell {
  unsigned m = 0;
  unsigned e = 0;
  unsigned level = 0;
};

/// Dimension of the image in the level-m jet coordinates; -1 when empty.
int image_dimension(const Ideal& I, const Ideal& jac, const std::optional<Point>& point, const ImageCell& cell,
                    const ContactSpec& extra = {}, const Budget& budget = {});

/// dim ψ_m(π⁻¹(point) ∩ Cont^e(𝔧_X)) for X = V(I) a complete intersection of
/// codimension = number of generators. Requires m >= e.
int liftable_image_dim(const Ideal& I, const Point& point, int m, int e, const Budget& budget = {});

/// Same, for m < e as well, computed from level max(m, e) + e + lift_extra.
int liftable_image_dim_any(const Ideal& I, const Ideal& jac, const Point& point, unsigned m, unsigned e,
                           unsigned lift_extra = 0, const Budget& budget = {});

struct LambdaRow {
  int m = 0;
  /// m n - max dimension over the e range; meaningless when no cell is nonempty.
  int lambda0 = 0;
  bool nonempty = false;
  int e_min = 0;
  int e_max = 0;
  /// Contact order attaining the max.
  int e_argmax = -1;
  std::vector<int> cell_dims;
  /// The max over [0, e_max + 1] equals the max over [0, e_max].
  bool converged = false;
  bool budget_exhausted = false;
  std::string note;
};

struct LambdaReport {
  Point point;
  int n = 0;
  int e_max = 0;
  std::vector<LambdaRow> rows;
  /// Every row converged and the last two rows agree.
  bool stabilized = false;
  std::optional<int> lambda;
  /// λ_m = λ_m⁰ holds (isolated singularity, or smooth point).
  bool isolated = false;
  std::optional<Rational> mld_hat;
};

/// λ_m⁰ rows for m = 1..m_max. Cells run through `jobs` OpenMP threads
/// (1 = serial reference path); the result does not depend on `jobs`.
LambdaReport lambda_sequence(const Ideal& I, const Point& point, int m_max, int e_max, const Budget& budget = {},
                             int jobs = 1);

/// Same with an explicit Jacobian ideal (for non complete intersections) and
/// dimension n of V(I).
LambdaReport lambda_sequence(const Ideal& I, const Ideal& jac, int n, const Point& point, int m_max, int e_max,
                             const Budget& budget = {}, int jobs = 1);

/// Number of generators as codimension; throws unless V(I) has dimension N - c.
int complete_intersection_dim(const Ideal& I, const Budget& budget = {});

/// True iff the point lies on V(I).
bool on_variety(const Ideal& I, const Point& point);

}  // namespace jetspace
