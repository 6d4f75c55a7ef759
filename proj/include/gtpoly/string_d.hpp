#pragma once

#include <vector>

#include "gtpoly/rootdata.hpp"
#include "gtpoly/tweaked_d.hpp"

namespace gtpoly {

/// Point of the type D string polytope for the standard reduced word, stored
/// in display order: rows i = n-1 down to 1, row i holding a_{i,i}, ...,
/// a_{i,2n-1-i}. Out-of-range indices read as zero; bar(i,j) = a(i, 2n-1-j).
struct StringPointD {
  int rank;
  std::vector<Rat> coords;

  StringPointD(int rank, std::vector<Rat> c);
  static StringPointD zero(int rank);
  static int length(int rank) { return rank * (rank - 1); }

  Rat a(int i, int j) const;
  Rat bar(int i, int j) const;
  /// Position of a_{i,j} in coords, -1 if out of range.
  int index(int i, int j) const;
};

/// Explicit inequality system for the string polytope; lambda is given in
/// fundamental-weight coordinates here.
bool string_membership(const std::vector<Rat>& lambda_omega, const StringPointD& a);

/// Affine bijection onto the tweaked patterns; lambda in eps coordinates.
TweakedPattern phi_tilde(const Weight& lambda, const StringPointD& a);

/// Exact inverse by row-wise back substitution; requires t to satisfy the
/// subspace equations.
StringPointD phi_tilde_inverse(const Weight& lambda, const TweakedPattern& t);

/// Integrality of the string coordinates themselves.
bool is_lattice_string_point(const Weight& lambda, const StringPointD& a);

}  // namespace gtpoly
