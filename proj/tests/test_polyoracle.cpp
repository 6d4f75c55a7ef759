#include <doctest.h>

#include <set>

#include "gtpoly/gt.hpp"
#include "gtpoly/polyoracle.hpp"
#include "gtpoly/string_d.hpp"
#include "gtpoly/tweaked_d.hpp"

using namespace gtpoly;

namespace {

const Rat h = rat(1, 2);

Weight w(Family f, std::vector<Rat> eps) {
  const int n = static_cast<int>(eps.size());
  return Weight(LieType(f, n), std::move(eps));
}

HPolytope cube(int d) {
  HPolytope hp;
  hp.dim = d;
  for (int i = 0; i < d; ++i) {
    LinRow up, dn;
    up.a.assign(d, Rat(0));
    dn.a.assign(d, Rat(0));
    up.a[i] = 1;
    up.b = 1;
    dn.a[i] = -1;
    dn.b = 0;
    hp.ineqs.push_back(up);
    hp.ineqs.push_back(dn);
  }
  return hp;
}

}  // namespace

TEST_CASE("hrep shapes") {
  {
    HPolytope hp = hrep(PolytopeKind::GtB, w(Family::B, {h, h}));
    CHECK(hp.dim == 4);
    CHECK(hp.ineqs.size() == 8);
    CHECK(hp.eqs.empty());
  }
  {
    HPolytope hp = hrep(PolytopeKind::GtA, w(Family::A, {Rat(1)}));
    CHECK(hp.dim == 1);
    CHECK(hp.ineqs.size() == 2);
  }
  {
    HPolytope hp = hrep(PolytopeKind::TweakedD, w(Family::D, {Rat(2), Rat(1), Rat(0)}));
    CHECK(hp.dim == 7);
    CHECK(hp.eqs.size() == 1);
  }
  CHECK_THROWS_AS(hrep(PolytopeKind::GtB, w(Family::A, {Rat(1)})), std::invalid_argument);
}

TEST_CASE("hrep agrees with the membership evaluators") {
  unsigned s = 31337;
  auto rnd = [&]() {
    s = s * 1103515245u + 12345u;
    return rat((s >> 16) % 11 - 4, 1 + (s >> 24) % 2);
  };
  auto sample = [&](int d) {
    std::vector<Rat> x(d);
    for (auto& v : x) v = rnd();
    return x;
  };
  const int trials = 10000;
  {
    Weight lam = w(Family::A, {Rat(3), Rat(1), Rat(1)});
    HPolytope hp = hrep(PolytopeKind::GtA, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) == gt_membership(lam, GTPattern(lam.type, x)));
    }
  }
  {
    Weight lam = w(Family::B, {rat(5, 2), rat(3, 2), h});
    HPolytope hp = hrep(PolytopeKind::GtB, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) == gt_membership(lam, GTPattern(lam.type, x)));
    }
  }
  {
    Weight lam = w(Family::C, {Rat(3), Rat(2), Rat(1), Rat(1)});
    HPolytope hp = hrep(PolytopeKind::GtC, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) == gt_membership(lam, GTPattern(lam.type, x)));
    }
  }
  {
    Weight lam = w(Family::D, {Rat(3), Rat(2), Rat(1), Rat(-1)});
    HPolytope hp = hrep(PolytopeKind::GtD, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) == gt_membership(lam, GTPattern(lam.type, x)));
    }
  }
  {
    Weight lam = w(Family::D, {Rat(2), Rat(1), Rat(1), Rat(0)});
    HPolytope hp = hrep(PolytopeKind::TweakedD, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) ==
            tweaked_membership(lam, TweakedPattern::from_flat(lam.type.rank, x)));
    }
  }
  {
    Weight lam = w(Family::D, {Rat(2), Rat(1), Rat(0)});
    std::vector<Rat> lw = epsilon_to_omega(lam);
    HPolytope hp = hrep(PolytopeKind::StringD, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) == string_membership(lw, StringPointD(lam.type.rank, x)));
    }
  }
  {
    Weight lam = w(Family::D, {rat(5, 2), rat(3, 2), rat(1, 2), rat(1, 2)});
    std::vector<Rat> lw = epsilon_to_omega(lam);
    HPolytope hp = hrep(PolytopeKind::StringD, lam);
    for (int t = 0; t < trials; ++t) {
      auto x = sample(hp.dim);
      CHECK(hrep_member(hp, x) == string_membership(lw, StringPointD(lam.type.rank, x)));
    }
  }
}

TEST_CASE("vertex enumeration basics") {
  {
    VertexSet v = vertex_enumeration(cube(3));
    CHECK(v.points.size() == 8);
    for (const auto& p : v.points) CHECK(is_vertex_by_perturbation(cube(3), p));
  }
  {
    HPolytope interval = cube(1);
    VertexSet v = vertex_enumeration(interval);
    REQUIRE(v.points.size() == 2);
    CHECK(v.points[0] == std::vector<Rat>{Rat(0)});
    CHECK(v.points[1] == std::vector<Rat>{Rat(1)});
  }
  {
    // infeasible: x <= 0 and x >= 1
    HPolytope hp = cube(1);
    hp.ineqs[0].b = 0;
    hp.ineqs[1].b = -1;
    VertexSet v = vertex_enumeration(hp);
    CHECK_FALSE(v.feasible);
    CHECK(v.points.empty());
  }
  {
    // unbounded: x >= 0 only
    HPolytope hp;
    hp.dim = 1;
    LinRow r;
    r.a = {Rat(-1)};
    r.b = 0;
    hp.ineqs.push_back(r);
    CHECK_THROWS_AS(vertex_enumeration(hp), std::invalid_argument);
  }
  {
    // equality rows: segment in a plane
    HPolytope hp = cube(2);
    LinRow eq;
    eq.a = {Rat(1), Rat(1)};
    eq.b = 1;
    hp.eqs.push_back(eq);
    VertexSet v = vertex_enumeration(hp);
    CHECK(v.points.size() == 2);
  }
}

TEST_CASE("five vertices of the rank-2 odd orthogonal pattern polytope") {
  Weight lam = w(Family::B, {h, h});
  HPolytope hp = hrep(PolytopeKind::GtB, lam);
  VertexSet v = vertex_enumeration(hp);
  std::set<std::vector<Rat>, RatVecLess> got(v.points.begin(), v.points.end());
  std::set<std::vector<Rat>, RatVecLess> want{
      {h, h, h, h}, {h, h, h, Rat(0)}, {h, Rat(0), h, h},
      {h, Rat(0), h, Rat(0)}, {h, Rat(0), Rat(0), Rat(0)}};
  CHECK(got == want);
  for (const auto& p : v.points) CHECK(is_vertex_by_perturbation(hp, p));
  // barycenter fails the perturbation test
  std::vector<Rat> bary(4, Rat(0));
  for (const auto& p : v.points)
    for (int k = 0; k < 4; ++k) bary[k] += p[k] / 5;
  CHECK_FALSE(is_vertex_by_perturbation(hp, bary));
}

TEST_CASE("tweaked vertex set contains the impurity vertex") {
  Weight lam = w(Family::D, {Rat(2), Rat(1), Rat(0)});
  HPolytope hp = hrep(PolytopeKind::TweakedD, lam);
  VertexSet v = vertex_enumeration(hp);
  std::vector<Rat> fig{Rat(2), Rat(0), Rat(1), Rat(2), Rat(0), Rat(2), Rat(2)};
  bool found = false;
  for (const auto& p : v.points) found = found || p == fig;
  CHECK(found);
  CHECK(is_vertex_by_perturbation(hp, fig));
  for (const auto& p : v.points) {
    CHECK(hrep_member(hp, p));
    CHECK(is_vertex_by_perturbation(hp, p));
    CHECK(is_vertex_tweaked(lam, TweakedPattern::from_flat(3, p)));
  }
}

TEST_CASE("lattice point counting") {
  {
    Weight lam = w(Family::A, {Rat(4), Rat(2)});
    HPolytope hp = hrep(PolytopeKind::GtA, lam);
    CHECK(count_lattice_points(hp, LatticeSpec::integers(hp.dim)) == 27);
  }
  {
    Weight lam = w(Family::B, {h, h});
    HPolytope hp = hrep(PolytopeKind::GtB, lam);
    CHECK(count_lattice_points(hp, LatticeSpec::natural(hp)) == 4);
  }
  {
    Weight lam = w(Family::D, {h, h, h});
    HPolytope hp = hrep(PolytopeKind::TweakedD, lam);
    CHECK(count_lattice_points(hp, LatticeSpec::half_shifted(hp.dim)) == 4);
  }
  {
    HPolytope hp = cube(2);
    CHECK(count_lattice_points(hp, LatticeSpec::integers(2)) == 4);
    CHECK(enumerate_lattice_points(hp, LatticeSpec::integers(2), true).empty());
  }
}

TEST_CASE("reflexivity") {
  {
    Weight lam = w(Family::A, {Rat(4), Rat(2)});
    HPolytope hp = hrep(PolytopeKind::GtA, lam);
    ReflexivityResult r = reflexive_after_translation(hp);
    CHECK(r.reflexive);
    REQUIRE(r.interior_point.has_value());
    CHECK(*r.interior_point == std::vector<Rat>{Rat(3), Rat(1), Rat(2)});
  }
  {
    Weight lam = w(Family::A, {Rat(3), Rat(1)});
    HPolytope hp = hrep(PolytopeKind::GtA, lam);
    ReflexivityResult r = reflexive_after_translation(hp);
    CHECK_FALSE(r.reflexive);
    CHECK_FALSE(r.interior_point.has_value());
  }
  {
    Weight lam = omega_to_epsilon(LieType(Family::D, 3), {Rat(2), Rat(2), Rat(2)});
    HPolytope hp = hrep(PolytopeKind::StringD, lam);
    ReflexivityResult r = reflexive_after_translation(hp);
    CHECK(r.reflexive);
    REQUIRE(r.interior_point.has_value());
    CHECK(*r.interior_point ==
          std::vector<Rat>{Rat(1), Rat(1), Rat(3), Rat(2), Rat(2), Rat(1)});
  }
  {
    Weight lam = w(Family::D, {Rat(2), Rat(1), Rat(0)});
    HPolytope hp = hrep(PolytopeKind::TweakedD, lam);
    CHECK_THROWS_AS(reflexive_after_translation(hp), std::invalid_argument);
  }
}

TEST_CASE("error paths") {
  HPolytope hp = cube(2);
  // infeasible probe point
  CHECK_THROWS_AS(is_vertex_by_perturbation(hp, {Rat(5), Rat(5)}), std::invalid_argument);
  // dimension mismatches
  CHECK_THROWS_AS(hrep_member(hp, {Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(count_lattice_points(hp, LatticeSpec::integers(3)), std::invalid_argument);
  // natural lattice needs recorded cosets
  CHECK_THROWS_AS(LatticeSpec::natural(hp), std::invalid_argument);
  // inconsistent equalities are infeasible
  HPolytope bad = cube(2);
  LinRow e1, e2;
  e1.a = {Rat(1), Rat(0)};
  e1.b = 0;
  e2.a = {Rat(1), Rat(0)};
  e2.b = 1;
  bad.eqs = {e1, e2};
  VertexSet v = vertex_enumeration(bad);
  CHECK_FALSE(v.feasible);
  // reflexivity rejects non-full-dimensional input
  HPolytope flat = cube(2);
  LinRow eq;
  eq.a = {Rat(1), Rat(-1)};
  eq.b = 0;
  flat.eqs.push_back(eq);
  CHECK_THROWS_AS(reflexive_after_translation(flat), std::invalid_argument);
}

TEST_CASE("diagram criterion equals perturbation on sampled points") {
  Weight lam = w(Family::B, {rat(3, 2), h});
  HPolytope hp = hrep(PolytopeKind::GtB, lam);
  MarkedPoset poset = gt_poset(lam);
  VertexSet vs = vertex_enumeration(hp);
  REQUIRE(vs.points.size() >= 2);
  for (const auto& p : vs.points) CHECK(is_vertex(poset, p));
  unsigned s = 4242;
  for (int trial = 0; trial < 200; ++trial) {
    // strict convex combination of two distinct vertices
    s = s * 1103515245u + 12345u;
    size_t i = (s >> 16) % vs.points.size();
    size_t j = (s >> 20) % vs.points.size();
    if (i == j) continue;
    Rat mu = rat(1 + static_cast<long>((s >> 24) % 3), 4);
    std::vector<Rat> x(hp.dim);
    for (int k = 0; k < hp.dim; ++k)
      x[k] = mu * vs.points[i][k] + (1 - mu) * vs.points[j][k];
    CHECK_FALSE(is_vertex_by_perturbation(hp, x));
    CHECK_FALSE(is_vertex(poset, x));
  }
}

TEST_CASE("diagram enumeration equals the oracle on small posets") {
  for (Family f : {Family::A, Family::B, Family::C}) {
    PolytopeKind kind = f == Family::A   ? PolytopeKind::GtA
                        : f == Family::B ? PolytopeKind::GtB
                                         : PolytopeKind::GtC;
    for (int m1 = 0; m1 <= 2; ++m1)
      for (int m2 = 0; m2 <= 2; ++m2) {
        Weight lam = omega_to_epsilon(LieType(f, 2), {Rat(m1), Rat(m2)});
        auto diagram_verts = enumerate_vertices(gt_poset(lam));
        auto oracle_verts = vertex_enumeration(hrep(kind, lam)).points;
        CHECK(diagram_verts == oracle_verts);  // both sorted
      }
  }
}
