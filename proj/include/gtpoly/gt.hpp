#pragma once

#include <vector>

#include "gtpoly/marked_poset.hpp"
#include "gtpoly/rootdata.hpp"

namespace gtpoly {

/// Triangular coordinate array of the interlacing pattern attached to a
/// weight. The top row (the weight itself, plus bookkeeping zeros) is marked
/// data and not stored in cells. Row order follows the triangle top to
/// bottom: type A stores y-rows 1..n; types B and C alternate z_1, y_2, z_2,
/// ..., y_n, z_n; type D alternates z_1, y_2, ..., z_{n-1}, y_n.
struct GTPattern {
  LieType type;
  std::vector<Rat> cells;

  GTPattern(LieType t, std::vector<Rat> c);

  /// Type A stores y-rows 1..n; the other families store y-rows 2..n and
  /// z-rows. The weight row is never a cell: evaluators read it from lambda.
  const Rat& y(int i, int j) const;
  const Rat& z(int i, int j) const;
  Rat& y(int i, int j);
  Rat& z(int i, int j);

  static int cell_count(LieType t);
  static GTPattern zero(LieType t);
};

/// The pattern cells as the unmarked coordinates of the poset, in order.
PosetPoint point_from_pattern(const GTPattern& p);
GTPattern pattern_from_point(const Weight& lambda, const PosetPoint& x);

/// Marked poset realizing the pattern polytope for types A, B and C.
/// Type D is not a marked order polytope; use gt_membership there.
MarkedPoset gt_poset(const Weight& lambda);

/// All interlacing inequalities (and for type D the three families of
/// min-inequalities) against the top row lambda.
bool gt_membership(const Weight& lambda, const GTPattern& p);

/// Per-type integrality test on the extended pattern (top row included):
/// A and C fully integral; B with the last z-column in (1/2)Z and everything
/// else in a single coset of Z; D fully in Z or fully in 1/2 + Z.
bool is_standard(const Weight& lambda, const GTPattern& p);

/// Exhaustive enumeration over the admissible coset grid, filtered by
/// membership and standardness. Desk scale.
std::vector<GTPattern> enumerate_standard_patterns(const Weight& lambda);

/// Type B pattern whose rows repeat the weight shifted left with zeros
/// appended; a vertex for every dominant weight, non-standard whenever the
/// last coroot pairing is odd.
GTPattern b_witness(const Weight& lambda);

}  // namespace gtpoly
