#pragma once

#include <set>
#include <vector>

#include "gtpoly/rational.hpp"

namespace gtpoly {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);
char family_char(Family f);

struct LieType {
  Family family;
  int rank;

  LieType(Family f, int n);

  /// A: n(n+1)/2, B and C: n^2, D: n(n-1).
  int positive_root_count() const;

  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
};

/// A weight written in the epsilon basis. For type A the coefficients are the
/// first n coordinates of the usual (n+1)-coordinate expression normalized so
/// the last coordinate vanishes.
struct Weight {
  LieType type;
  std::vector<Rat> eps;

  Weight(LieType t, std::vector<Rat> e);
};

/// Positive roots as epsilon-coordinate vectors; type A uses rank+1 coordinates.
std::vector<std::vector<Rat>> positive_roots(LieType type);

/// <lambda, alpha_i^vee> for the i-th simple root, 1-based.
Rat pairing(const Weight& lambda, int i);
std::vector<Rat> all_pairings(const Weight& lambda);

Weight omega_to_epsilon(LieType type, const std::vector<Rat>& omega);
/// Exact inverse of omega_to_epsilon on the weight lattice.
std::vector<Rat> epsilon_to_omega(const Weight& lambda);

bool is_dominant(const Weight& lambda);
bool is_dominant_integral(const Weight& lambda);

/// The weight with all simple coroot pairings equal to 1.
Weight rho(LieType type);

/// True iff the highest weight representation descends from the Lie algebra to
/// the classical group itself: always for A and C, for B iff <lambda,alpha_n^vee>
/// is even, for D iff <lambda,alpha_{n-1}^vee> + <lambda,alpha_n^vee> is even.
bool integrates_to_group(const Weight& lambda);

/// Same as integrates_to_group except type D also returns true for rank < 4.
bool predicted_lattice(const Weight& lambda);

/// Weyl dimension formula, evaluated exactly.
Int weyl_dim(const Weight& lambda);

/// Sum of the positive roots outside the Levi spanned by the given simple
/// roots; the empty set gives 2*rho.
Weight anticanonical_weight(LieType type, const std::set<int>& levi_simple_roots);

/// Membership of q in the additive group generated by the eps coefficients.
bool coefficient_group_member(const Weight& lambda, const Rat& q);
bool coefficient_group_member(const std::vector<Rat>& gens, const Rat& q);

}  // namespace gtpoly
