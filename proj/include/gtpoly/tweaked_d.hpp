#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtpoly/gt.hpp"
#include "gtpoly/marked_poset.hpp"
#include "gtpoly/rootdata.hpp"

namespace gtpoly {

struct StringPointD;  // string_d.hpp

/// Type D pattern with the last z-column split into pairs (z^up, z^dn)
/// constrained to the affine subspace where
///   y_{i,n-1} - y_{i+1,n-1} = z^up_i - z^dn_i.
/// zup has n-1 entries; the last one is z_{n-1,n-1} (which has no partner).
struct TweakedPattern {
  int rank;
  std::vector<Rat> y;      // y_{i,j}, i = 2..n, j = i..n, row-major
  std::vector<Rat> z;      // z_{i,j}, i = 1..n-2, j = i..n-2, row-major
  std::vector<Rat> zup;    // i = 1..n-1
  std::vector<Rat> zdown;  // i = 1..n-2

  static TweakedPattern zero(int rank);

  const Rat& yv(int i, int j) const;
  Rat& yv(int i, int j);
  const Rat& zv(int i, int j) const;
  Rat& zv(int i, int j);
  const Rat& up(int i) const { return zup.at(i - 1); }
  Rat& up(int i) { return zup.at(i - 1); }
  const Rat& dn(int i) const { return zdown.at(i - 1); }
  Rat& dn(int i) { return zdown.at(i - 1); }

  /// Coordinates in display order: z-row 1 (ordinary cells, then the pair),
  /// y-row 2, z-row 2, ..., z_{n-1,n-1}, y-row n.
  std::vector<Rat> flat() const;
  static TweakedPattern from_flat(int rank, const std::vector<Rat>& v);
  static int coord_count(int rank);  // n^2 - 2
};

/// Pseudo-marked poset carrying the addition-free inequalities; the top row
/// xi_1_j is marked with lambda. Element order matches flat().
MarkedPoset tweaked_poset(const Weight& lambda);

/// Subspace equations, interlacing, and the three-term upper bounds.
bool tweaked_membership(const Weight& lambda, const TweakedPattern& t);

/// Collapses each pair to its minimum; bijection onto ordinary patterns.
GTPattern psi(const TweakedPattern& t);
TweakedPattern psi_inverse(const Weight& lambda, const GTPattern& p);

/// Piecewise-affine pattern image of a string point (the min-formula route);
/// equals psi of the affine map in string_d.hpp.
GTPattern phi(const Weight& lambda, const StringPointD& a);

enum class ComponentTag { Marked, Anomaly, DoubleImpurity, SingleImpurity, Triviality, None };

/// Diagram recording which defining inequalities are tight: black double
/// edges for equal cover values, red arrows for tight three-term bounds (with
/// the white/rewrite replacements applied), and the vertical pairs forced by
/// the subspace equations. Connectivity counts black and red doubles only.
struct TweakedDiagram {
  int rank = 0;
  std::vector<std::string> nodes;                 // poset element order
  std::vector<Rat> value;                         // per node
  std::vector<char> white;                        // per node
  std::vector<std::pair<int, int>> black_doubles; // undirected, covers + vertical
  std::vector<std::pair<int, int>> red_doubles;   // undirected
  std::vector<std::pair<int, int>> red_singles;   // directed (from, to)
  std::vector<std::pair<int, char>> white_quads;  // (i, 'u' or 'd')
  std::vector<int> comp;                          // per node
  int comp_count = 0;
  std::vector<ComponentTag> tags;                 // per component

  int node_index(const std::string& name) const;
  bool has_anomaly() const;
  bool has_double_impurity() const;
};

/// Throws if the pattern is not in the polytope.
TweakedDiagram tweaked_diagram(const Weight& lambda, const TweakedPattern& t);

std::vector<ComponentTag> classify_components(const TweakedDiagram& d);

/// Vertex criterion: every component is marked, contains an anomaly, is a
/// single impurity or is part of a double impurity.
bool is_vertex_tweaked(const Weight& lambda, const TweakedPattern& t);

/// For a vertex: the string-side preimage is a lattice point iff lambda is
/// integral, or lambda is half-integral and the diagram has no anomaly.
bool vertex_is_lattice(const Weight& lambda, const TweakedPattern& t);

/// Shift-left witness pattern for rank >= 4: a vertex whose diagram contains
/// an anomaly, hence non-lattice for half-integral lambda.
TweakedPattern d_witness(const Weight& lambda);

/// Exhaustive grid enumeration over the coset dictated by lambda.
std::vector<TweakedPattern> enumerate_tweaked_lattice_points(const Weight& lambda);

const char* component_tag_name(ComponentTag t);

}  // namespace gtpoly
