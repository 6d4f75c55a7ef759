#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtpoly/rational.hpp"

namespace gtpoly {

/// Finite poset given by its cover relations, with a subset of elements
/// carrying fixed marking values. A pseudo-marking drops the requirement that
/// all minimal and maximal elements are marked.
struct MarkedPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;  // (lo, hi): x_lo <= x_hi
  std::vector<int> marked;                  // element indices
  std::vector<Rat> marking;                 // values, parallel to marked
  bool pseudo = false;

  int index_of(const std::string& name) const;
  bool is_marked(int e) const;
  /// Marking value of a marked element, nullptr otherwise.
  const Rat* mark_value(int e) const;
  /// Unmarked element indices in element order; this fixes the coordinate
  /// order of PosetPoint.
  std::vector<int> unmarked() const;

  /// Checks cover consistency (acyclic, indices in range), order-compatible
  /// marking, and marked extrema unless pseudo. Throws on violation.
  void validate() const;
};

using PosetPoint = std::vector<Rat>;

/// All cover inequalities hold, marking values included.
bool membership(const MarkedPoset& poset, const PosetPoint& x);

struct IdentityDiagram {
  std::vector<char> dbl;           // per cover: endpoint values are equal
  std::vector<int> comp;           // per element: component under double edges
  int comp_count = 0;
  std::vector<char> comp_marked;   // per component: contains a marked element
};

/// Throws if x is not in the polytope.
IdentityDiagram identity_diagram(const MarkedPoset& poset, const PosetPoint& x);

/// Vertex criterion: every connected component of the identity diagram
/// contains a marked element.
bool is_vertex(const MarkedPoset& poset, const PosetPoint& x);

/// Directed graph holding all Hasse arrows plus the reversed covers recorded
/// in dbl; arrows only ever run along covers.
struct CompletionGraph {
  std::vector<char> dbl;  // per cover
};

enum class ScanOrder { Forward, Reverse };

/// Least fixpoint of the closure rules: a single arrow squeezed between two
/// nodes of one double-edge component gets reversed, and any directed path
/// between equal-valued marked elements gets reversed. Independent of scan
/// order; idempotent.
CompletionGraph complete(const MarkedPoset& poset, CompletionGraph g,
                         ScanOrder order = ScanOrder::Forward);

/// True iff no double-edge component carries two distinct marking values.
bool completion_consistent(const MarkedPoset& poset, const CompletionGraph& g);

/// Exact vertex set via the completion procedure: depth-first branching over
/// legal arrow reversals, completing after each addition; terminal graphs are
/// read off as points with every coordinate equal to a marking value.
/// Requires a true marked poset (throws for pseudo-markings).
std::vector<PosetPoint> enumerate_vertices(const MarkedPoset& poset);

}  // namespace gtpoly
