#include <doctest.h>

#include "gtpoly/polyoracle.hpp"
#include "gtpoly/string_d.hpp"
#include "gtpoly/tweaked_d.hpp"

using namespace gtpoly;

namespace {

const Rat h = rat(1, 2);

Weight wd(std::vector<Rat> eps) {
  const int n = static_cast<int>(eps.size());
  return Weight(LieType(Family::D, n), std::move(eps));
}

// rank-3 vertex with an isolated split-cell node, lambda = (2,1,0)
TweakedPattern d3_impurity_vertex() {
  TweakedPattern t = TweakedPattern::zero(3);
  t.zv(1, 1) = 2;
  t.up(1) = 0;
  t.dn(1) = 1;
  t.yv(2, 2) = 2;
  t.yv(2, 3) = 0;
  t.up(2) = 2;  // z_{2,2}
  t.yv(3, 3) = 2;
  return t;
}

// rank-4 vertex with an anomaly and a double impurity, lambda = (4,3,2,-1)
TweakedPattern d4_anomaly_vertex() {
  TweakedPattern t = TweakedPattern::zero(4);
  t.zv(1, 1) = 4;
  t.zv(1, 2) = 3;
  t.up(1) = 1;
  t.dn(1) = 2;
  t.yv(2, 2) = 4;
  t.yv(2, 3) = 3;
  t.yv(2, 4) = 0;
  t.zv(2, 2) = 4;
  t.up(2) = 3;
  t.dn(2) = 0;
  t.yv(3, 3) = 0;
  t.yv(3, 4) = 0;
  t.up(3) = 0;  // z_{3,3}
  t.yv(4, 4) = 0;
  return t;
}

}  // namespace

TEST_CASE("flat order matches the display layout") {
  TweakedPattern t = d3_impurity_vertex();
  std::vector<Rat> expect{Rat(2), Rat(0), Rat(1), Rat(2), Rat(0), Rat(2), Rat(2)};
  CHECK(t.flat() == expect);
  CHECK(TweakedPattern::from_flat(3, expect).flat() == expect);
  CHECK(TweakedPattern::coord_count(3) == 7);
  CHECK(TweakedPattern::coord_count(4) == 14);
}

TEST_CASE("membership fixtures") {
  Weight lam = wd({Rat(2), Rat(1), Rat(0)});
  TweakedPattern t = d3_impurity_vertex();
  CHECK(tweaked_membership(lam, t));
  t.dn(1) = 0;  // breaks the subspace equation
  CHECK_FALSE(tweaked_membership(lam, t));

  Weight lam4 = wd({h, h, h, h});
  CHECK(tweaked_membership(lam4, d_witness(lam4)));
  CHECK(tweaked_membership(wd({Rat(4), Rat(3), Rat(2), Rat(-1)}), d4_anomaly_vertex()));
}

TEST_CASE("pseudo-marked poset matches the membership evaluator") {
  Weight lam = wd({Rat(2), Rat(1), Rat(0)});
  MarkedPoset poset = tweaked_poset(lam);
  CHECK_NOTHROW(poset.validate());
  CHECK(poset.pseudo);
  CHECK(poset.unmarked().size() == 7);
  // poset membership relaxes the subspace + three-term rows only
  TweakedPattern t = d3_impurity_vertex();
  CHECK(membership(poset, t.flat()));
}

TEST_CASE("psi collapses the pairs and inverts") {
  TweakedPattern t = d3_impurity_vertex();
  GTPattern p = psi(t);
  CHECK(p.z(1, 2) == 0);  // min(0, 1)
  Weight lam = wd({Rat(2), Rat(1), Rat(0)});
  TweakedPattern back = psi_inverse(lam, p);
  CHECK(back.flat() == t.flat());
}

TEST_CASE("diagram of the rank-3 vertex: single impurity") {
  Weight lam = wd({Rat(2), Rat(1), Rat(0)});
  TweakedDiagram d = tweaked_diagram(lam, d3_impurity_vertex());
  // the down node of the split cell is isolated; the up node ties to marks
  int dn = d.node_index("zdown_1");
  int up = d.node_index("zup_1");
  CHECK(d.tags[d.comp[dn]] == ComponentTag::SingleImpurity);
  CHECK(d.comp[up] == d.comp[d.node_index("xi_1_3")]);
  CHECK(d.comp[up] == d.comp[d.node_index("xi_2_3")]);
  // big marked chain of value 2
  int c2 = d.comp[d.node_index("xi_1_1")];
  for (const char* nm : {"zeta_1_1", "xi_2_2", "zeta_2_2", "xi_3_3"})
    CHECK(d.comp[d.node_index(nm)] == c2);
  CHECK(is_vertex_tweaked(lam, d3_impurity_vertex()));
  CHECK_FALSE(d.has_anomaly());
  CHECK(vertex_is_lattice(lam, d3_impurity_vertex()));
}

TEST_CASE("diagram of the rank-4 vertex: anomaly plus double impurity") {
  Weight lam = wd({Rat(4), Rat(3), Rat(2), Rat(-1)});
  TweakedPattern t = d4_anomaly_vertex();
  TweakedDiagram d = tweaked_diagram(lam, t);

  // six white nodes forming the anomaly triangle
  int whites = 0;
  for (char c : d.white) whites += c;
  CHECK(whites == 6);
  for (const char* nm : {"xi_2_4", "zdown_2", "xi_3_3", "xi_3_4", "zeta_3_3", "xi_4_4"})
    CHECK(d.white[d.node_index(nm)]);
  CHECK(d.has_anomaly());

  // the split cell of the first row is a double impurity
  CHECK(d.has_double_impurity());
  CHECK(d.tags[d.comp[d.node_index("zup_1")]] == ComponentTag::DoubleImpurity);
  CHECK(d.tags[d.comp[d.node_index("zdown_1")]] == ComponentTag::DoubleImpurity);

  CHECK(is_vertex_tweaked(lam, t));
  CHECK(vertex_is_lattice(lam, t));  // integral weight
}

TEST_CASE("min-formula pattern image") {
  Weight lam = wd({Rat(4), Rat(2), Rat(0)});
  StringPointD a(3, {Rat(1), Rat(1), Rat(3), Rat(2), Rat(2), Rat(1)});
  GTPattern p = phi(lam, a);
  CHECK(p.z(1, 1) == 3);
  CHECK(p.z(1, 2) == 1);  // min of the split pair
  CHECK(p.z(2, 2) == 1);
  CHECK(p.y(2, 2) == 2);
  CHECK(p.y(2, 3) == 0);
  CHECK(p.y(3, 3) == 0);
  CHECK(gt_membership(lam, p));
}

TEST_CASE("interior point is not a vertex") {
  Weight lam = wd({Rat(4), Rat(2), Rat(0)});
  // image of the all-strict interior string point
  StringPointD p(3, {Rat(1), Rat(1), Rat(3), Rat(2), Rat(2), Rat(1)});
  TweakedPattern t = phi_tilde(lam, p);
  CHECK(tweaked_membership(lam, t));
  CHECK_FALSE(is_vertex_tweaked(lam, t));
  TweakedDiagram d = tweaked_diagram(lam, t);
  // everything strict: no double edges anywhere, every component a singleton
  CHECK(d.black_doubles.empty());
  CHECK(d.red_doubles.empty());
  CHECK(d.comp_count == static_cast<int>(d.nodes.size()));
  bool some_none = false, some_trivial = false;
  for (ComponentTag tag : d.tags) {
    some_none = some_none || tag == ComponentTag::None;
    some_trivial = some_trivial || tag == ComponentTag::Triviality;
  }
  CHECK(some_none);
  // the isolated split pair carries no tight three-term bound
  CHECK(some_trivial);
  CHECK(d.tags[d.comp[d.node_index("zup_1")]] == ComponentTag::Triviality);
  CHECK(d.tags[d.comp[d.node_index("zdown_1")]] == ComponentTag::Triviality);
}

TEST_CASE("witness pattern: anomaly certifies a non-lattice vertex") {
  {
    Weight lam = wd({h, h, h, h});
    TweakedPattern t = d_witness(lam);
    CHECK(t.zv(1, 1) == h);
    CHECK(t.zv(1, 2) == h);
    CHECK(t.up(1) == h);
    CHECK(t.dn(1) == h);
    CHECK(t.yv(2, 2) == h);
    CHECK(t.yv(2, 3) == h);
    CHECK(t.yv(2, 4) == 0);
    CHECK(t.zv(2, 2) == h);
    CHECK(t.up(2) == h);
    CHECK(t.dn(2) == 0);
    CHECK(t.yv(3, 3) == 0);
    CHECK(t.yv(3, 4) == 0);
    CHECK(t.up(3) == 0);
    CHECK(t.yv(4, 4) == 0);
    CHECK(is_vertex_tweaked(lam, t));
    CHECK(tweaked_diagram(lam, t).has_anomaly());
    CHECK_FALSE(vertex_is_lattice(lam, t));
  }
  {
    Weight lam = wd({Rat(2), Rat(1), Rat(1), Rat(0)});
    TweakedPattern t = d_witness(lam);
    CHECK(tweaked_membership(lam, t));
    CHECK(is_vertex_tweaked(lam, t));
    CHECK(is_vertex_by_perturbation(hrep(PolytopeKind::TweakedD, lam), t.flat()));
    CHECK(vertex_is_lattice(lam, t));  // integral weight
  }
  {
    Weight lam = wd({Rat(0), Rat(0), Rat(0), Rat(0)});
    TweakedPattern t = d_witness(lam);
    CHECK(tweaked_membership(lam, t));
  }
  {
    // rank 5, half-integral: still a vertex with an anomaly
    Weight lam = wd({rat(5, 2), rat(3, 2), rat(3, 2), h, h});
    TweakedPattern t = d_witness(lam);
    CHECK(tweaked_membership(lam, t));
    CHECK(is_vertex_tweaked(lam, t));
    CHECK(tweaked_diagram(lam, t).has_anomaly());
    CHECK_FALSE(vertex_is_lattice(lam, t));
  }
  CHECK_THROWS_AS(d_witness(wd({Rat(1), Rat(0), Rat(0)})), std::invalid_argument);
}

TEST_CASE("rank-2 degenerate case") {
  // two commuting blocks: patterns are a single cell pair
  Weight lam = wd({Rat(1), Rat(0)});
  CHECK(enumerate_tweaked_lattice_points(lam).size() == 4);
  CHECK(weyl_dim(lam) == 4);
  auto verts = vertex_enumeration(hrep(PolytopeKind::TweakedD, lam)).points;
  CHECK(verts.size() == 4);
  for (const auto& v : verts)
    CHECK(is_vertex_tweaked(lam, TweakedPattern::from_flat(2, v)));
  std::vector<Rat> lw = epsilon_to_omega(lam);
  unsigned s = 12;
  for (int trial = 0; trial < 200; ++trial) {
    s = s * 1103515245u + 12345u;
    StringPointD a(2, {rat((s >> 16) % 5 - 1, 1), rat((s >> 20) % 5 - 1, 1)});
    CHECK(string_membership(lw, a) == tweaked_membership(lam, phi_tilde(lam, a)));
    CHECK(phi_tilde_inverse(lam, phi_tilde(lam, a)).coords == a.coords);
  }
}

TEST_CASE("lattice point enumeration matches the Weyl dimension") {
  CHECK(enumerate_tweaked_lattice_points(wd({h, h, h})).size() == 4);
  CHECK(enumerate_tweaked_lattice_points(wd({Rat(0), Rat(0), Rat(0)})).size() == 1);
  {
    Weight lam = wd({Rat(4), Rat(2), Rat(0)});
    CHECK(Int(enumerate_tweaked_lattice_points(lam).size()) == weyl_dim(lam));
  }
  for (auto omega : {std::vector<Rat>{Rat(1), Rat(0), Rat(1)},
                     std::vector<Rat>{Rat(0), Rat(1), Rat(1)},
                     std::vector<Rat>{Rat(2), Rat(0), Rat(0)}}) {
    Weight lam = omega_to_epsilon(LieType(Family::D, 3), omega);
    CHECK(Int(enumerate_tweaked_lattice_points(lam).size()) == weyl_dim(lam));
  }
}

TEST_CASE("diagram semantics hold on sampled members") {
  Weight lam = wd({Rat(3), Rat(2), Rat(1), Rat(0)});
  // perturb the witness along pattern coordinates to visit assorted members
  TweakedPattern base = d_witness(lam);
  std::vector<Rat> flat = base.flat();
  unsigned s = 7;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> v = flat;
    s = s * 1103515245u + 12345u;
    size_t k = (s >> 16) % v.size();
    v[k] += rat((s >> 24) % 3 - 1, 2);
    TweakedPattern t = TweakedPattern::from_flat(4, v);
    if (!tweaked_membership(lam, t)) continue;
    // construction invariants are asserted inside tweaked_diagram
    CHECK_NOTHROW(tweaked_diagram(lam, t));
  }
}
