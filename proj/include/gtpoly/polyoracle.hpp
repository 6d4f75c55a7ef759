#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtpoly/rootdata.hpp"

namespace gtpoly {

enum class PolytopeKind { GtA, GtB, GtC, GtD, TweakedD, StringD };

PolytopeKind kind_from_string(const std::string& s);
std::string kind_name(PolytopeKind k);

struct LinRow {
  std::vector<Rat> a;
  Rat b;  // a . x <= b (or = b for equality rows)
};

struct HPolytope {
  int dim = 0;
  std::vector<LinRow> ineqs;
  std::vector<LinRow> eqs;
  std::vector<std::string> var_names;                  // optional metadata
  std::vector<std::pair<Rat, Rat>> natural_cosets;     // per var: (offset, step)
};

/// Exact inequality system agreeing bit-for-bit with the corresponding
/// membership operation; TweakedD carries the subspace equations as equality
/// rows. Duplicate rows are merged.
HPolytope hrep(PolytopeKind kind, const Weight& lambda);

bool hrep_member(const HPolytope& h, const std::vector<Rat>& x, bool strict = false);

struct VertexSet {
  std::vector<std::vector<Rat>> points;  // sorted lexicographically
  bool feasible = true;
};

/// Exact vertex set via double description on the affine hull. Throws on
/// unbounded input; an infeasible system yields an empty set with the flag
/// cleared.
VertexSet vertex_enumeration(const HPolytope& h);

/// Tight rows at x span the full space. Throws if x is infeasible.
bool is_vertex_by_perturbation(const HPolytope& h, const std::vector<Rat>& x);

struct LatticeSpec {
  std::vector<std::pair<Rat, Rat>> cosets;  // per var: (offset, step), step > 0

  static LatticeSpec integers(int dim);
  static LatticeSpec half_shifted(int dim);
  /// Uses the polytope's recorded per-variable cosets.
  static LatticeSpec natural(const HPolytope& h);
};

/// Bounding-box scan over the declared coset grid, membership-filtered; with
/// strict_interior only points satisfying every inequality strictly count.
std::vector<std::vector<Rat>> enumerate_lattice_points(const HPolytope& h,
                                                       const LatticeSpec& spec,
                                                       bool strict_interior = false);
Int count_lattice_points(const HPolytope& h, const LatticeSpec& spec);

struct ReflexivityResult {
  bool reflexive = false;
  std::optional<std::vector<Rat>> interior_point;  // set when exactly one exists
};

/// Exactly one interior lattice point and an integral polar dual after
/// translating it to the origin. Requires a full-dimensional polytope.
ReflexivityResult reflexive_after_translation(const HPolytope& h);

}  // namespace gtpoly
