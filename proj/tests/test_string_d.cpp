#include <doctest.h>

#include "gtpoly/polyoracle.hpp"
#include "gtpoly/string_d.hpp"

using namespace gtpoly;

namespace {

const Rat h = rat(1, 2);

Weight wd(std::vector<Rat> eps) {
  const int n = static_cast<int>(eps.size());
  return Weight(LieType(Family::D, n), std::move(eps));
}

StringPointD sp(int n, std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return StringPointD(n, std::move(v));
}

StringPointD random_point(int n, unsigned& s, int denom_max = 2) {
  std::vector<Rat> v;
  for (int k = 0; k < StringPointD::length(n); ++k) {
    s = s * 1103515245u + 12345u;
    v.push_back(rat((s >> 16) % 9 - 2, 1 + (s >> 24) % denom_max));
  }
  return StringPointD(n, std::move(v));
}

}  // namespace

TEST_CASE("coordinate accessors") {
  StringPointD a = sp(3, {1, 1, 3, 2, 2, 1});
  CHECK(a.a(2, 2) == 1);
  CHECK(a.a(2, 3) == 1);
  CHECK(a.a(1, 1) == 3);
  CHECK(a.a(1, 4) == 1);
  CHECK(a.bar(1, 1) == 1);   // a_{1,4}
  CHECK(a.bar(1, 2) == 2);   // a_{1,3}
  CHECK(a.bar(2, 2) == 1);   // a_{2,3}
  CHECK(a.a(1, 5) == 0);     // out of range
  CHECK(a.a(3, 3) == 0);
}

TEST_CASE("membership fixtures") {
  std::vector<Rat> lw{Rat(2), Rat(2), Rat(2)};
  CHECK(string_membership(lw, sp(3, {1, 1, 3, 2, 2, 1})));
  CHECK(string_membership(lw, StringPointD::zero(3)));
  {
    StringPointD a = StringPointD::zero(3);
    a.coords[5] = -1;  // bar(1,1) = a_{1,4}
    CHECK_FALSE(string_membership(lw, a));
  }
  // all inequalities strict at the distinguished interior point
  {
    StringPointD a = sp(3, {1, 1, 3, 2, 2, 1});
    // nudging any coordinate by +-1/2 keeps membership (slack is 1 everywhere)
    for (size_t k = 0; k < a.coords.size(); ++k) {
      StringPointD b = a;
      b.coords[k] += h;
      CHECK(string_membership(lw, b));
      b.coords[k] -= 1;
      CHECK(string_membership(lw, b));
    }
  }
}

TEST_CASE("symbolic image of a rank-3 point") {
  // phi_tilde on (a,b,c,d,e,f) with generic lambda, coefficient by
  // coefficient via unit directions
  std::vector<Rat> lam_eps{Rat(11), Rat(7), Rat(5)};  // distinct primes keep terms apart
  Weight lam = wd(lam_eps);
  auto image = [&](std::initializer_list<long> xs) {
    return phi_tilde(lam, sp(3, xs));
  };
  // base point 0: constants
  TweakedPattern t0 = image({0, 0, 0, 0, 0, 0});
  CHECK(t0.zv(1, 1) == 11);
  CHECK(t0.up(1) == 5);
  CHECK(t0.dn(1) == 5);
  CHECK(t0.yv(2, 2) == 7);
  CHECK(t0.yv(2, 3) == 5);
  CHECK(t0.up(2) == 5);
  CHECK(t0.yv(3, 3) == 5);
  // unit directions: (a,b,c,d,e,f) coefficients per entry
  struct RowCoef {
    long a, b, c, d, e, f;
  };
  auto coef = [&](auto get) {
    RowCoef rc;
    TweakedPattern base = image({0, 0, 0, 0, 0, 0});
    long* out[6] = {&rc.a, &rc.b, &rc.c, &rc.d, &rc.e, &rc.f};
    for (int k = 0; k < 6; ++k) {
      std::vector<Rat> v(6, Rat(0));
      v[k] = 1;
      TweakedPattern tk = phi_tilde(lam, StringPointD(3, v));
      Rat diff = get(tk) - get(base);
      REQUIRE(is_integer(diff));
      *out[k] = diff.get_num().get_si();
    }
    return rc;
  };
  auto check_row = [&](RowCoef got, RowCoef want) {
    CHECK(got.a == want.a);
    CHECK(got.b == want.b);
    CHECK(got.c == want.c);
    CHECK(got.d == want.d);
    CHECK(got.e == want.e);
    CHECK(got.f == want.f);
  };
  check_row(coef([](const TweakedPattern& t) { return t.zv(1, 1); }), {0, 0, 0, 0, 0, -1});
  check_row(coef([](const TweakedPattern& t) { return t.up(1); }), {0, 0, 0, 1, 0, -1});
  check_row(coef([](const TweakedPattern& t) { return t.dn(1); }), {0, 0, 1, 0, -1, 0});
  check_row(coef([](const TweakedPattern& t) { return t.yv(2, 2); }), {0, 0, 1, -1, -1, 1});
  check_row(coef([](const TweakedPattern& t) { return t.yv(2, 3); }), {0, 0, 0, 1, -1, 0});
  check_row(coef([](const TweakedPattern& t) { return t.up(2); }), {1, 0, 0, 1, -1, 0});
  check_row(coef([](const TweakedPattern& t) { return t.yv(3, 3); }), {1, -1, 0, 1, -1, 0});
}

TEST_CASE("map fixtures") {
  Weight lam = wd({Rat(4), Rat(2), Rat(0)});
  StringPointD a = sp(3, {1, 1, 3, 2, 2, 1});
  TweakedPattern t = phi_tilde(lam, a);
  CHECK(t.zv(1, 1) == 3);
  CHECK(t.up(1) == 1);
  CHECK(t.dn(1) == 1);
  CHECK(t.yv(2, 2) == 2);
  CHECK(t.yv(2, 3) == 0);
  CHECK(t.up(2) == 1);
  CHECK(t.yv(3, 3) == 0);
  CHECK(tweaked_membership(lam, t));
  StringPointD back = phi_tilde_inverse(lam, t);
  CHECK(back.coords == a.coords);

  // zero input copies the weight down the rows
  TweakedPattern t0 = phi_tilde(lam, StringPointD::zero(3));
  CHECK(t0.yv(2, 2) == 2);
  CHECK(t0.yv(2, 3) == 0);
  CHECK(t0.yv(3, 3) == 0);
  CHECK(t0.up(1) == 0);
  CHECK(t0.dn(1) == 0);
  CHECK(phi_tilde_inverse(lam, t0).coords == StringPointD::zero(3).coords);
}

TEST_CASE("affinity, round trips, membership transport") {
  for (int n : {3, 4, 5}) {
    std::vector<Rat> eps;
    for (int i = 0; i < n; ++i) eps.emplace_back(n - i);
    Weight lam = wd(eps);
    unsigned s = 42 + n;
    for (int trial = 0; trial < (n == 5 ? 100 : 334); ++trial) {
      StringPointD x = random_point(n, s), y = random_point(n, s), z = random_point(n, s);
      // phi(x + y - z) == phi(x) + phi(y) - phi(z), exactly
      std::vector<Rat> comb(x.coords.size());
      for (size_t k = 0; k < comb.size(); ++k) comb[k] = x.coords[k] + y.coords[k] - z.coords[k];
      auto fx = phi_tilde(lam, x).flat();
      auto fy = phi_tilde(lam, y).flat();
      auto fz = phi_tilde(lam, z).flat();
      auto fc = phi_tilde(lam, StringPointD(n, comb)).flat();
      for (size_t k = 0; k < fc.size(); ++k) CHECK(fc[k] == fx[k] + fy[k] - fz[k]);
      // round trip
      CHECK(phi_tilde_inverse(lam, phi_tilde(lam, x)).coords == x.coords);
    }
  }
  // membership transport on points inside and outside, ranks 3 and 4
  for (int n : {3, 4}) {
    std::vector<Rat> omega(n, Rat(1));
    Weight lam = omega_to_epsilon(LieType(Family::D, n), omega);
    std::vector<Rat> lw = epsilon_to_omega(lam);
    const auto verts = vertex_enumeration(hrep(PolytopeKind::StringD, lam)).points;
    REQUIRE(verts.size() >= 2);
    unsigned s = 1000 + n;
    int inside = 0, outside = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      StringPointD x = random_point(n, s);
      if (trial % 2) {
        // convex combination of two vertices, nudged towards the polytope
        s = s * 1103515245u + 12345u;
        const auto& v1 = verts[(s >> 16) % verts.size()];
        const auto& v2 = verts[(s >> 20) % verts.size()];
        Rat mu = rat(static_cast<long>((s >> 24) % 5), 4);  // may leave the polytope
        for (size_t k = 0; k < x.coords.size(); ++k)
          x.coords[k] = mu * v1[k] + (1 - mu) * v2[k];
      }
      bool sm = string_membership(lw, x);
      bool tm = tweaked_membership(lam, phi_tilde(lam, x));
      CHECK(sm == tm);
      (sm ? inside : outside) += 1;
    }
    CHECK(inside > 0);  // the sample must exercise both outcomes
    CHECK(outside > 0);
  }
}

TEST_CASE("min-formula route agrees with the affine route") {
  for (int n : {3, 4}) {
    std::vector<Rat> eps;
    for (int i = 0; i < n; ++i) eps.emplace_back(rat(2 * (n - i) + 1, 2));
    Weight lam = wd(eps);
    unsigned s = 5;
    for (int trial = 0; trial < 500; ++trial) {
      StringPointD x = random_point(n, s);
      CHECK(phi(lam, x).cells == psi(phi_tilde(lam, x)).cells);
    }
  }
}

TEST_CASE("lattice transport") {
  for (auto eps : {std::vector<Rat>{Rat(3), Rat(2), Rat(1)},
                   std::vector<Rat>{rat(5, 2), rat(3, 2), h}}) {
    Weight lam = wd(eps);
    bool lam_integral = is_integer(eps[0]);
    unsigned s = 77;
    for (int trial = 0; trial < 300; ++trial) {
      StringPointD x = random_point(3, s, 1);  // integral coordinates
      CHECK(is_lattice_string_point(lam, x));
      auto flat = phi_tilde(lam, x).flat();
      for (const Rat& v : flat)
        CHECK((lam_integral ? is_integer(v) : is_half_integer(v)));
      // and conversely: shifting one coordinate off the lattice breaks the coset
      StringPointD y = x;
      y.coords[trial % y.coords.size()] += h;
      CHECK_FALSE(is_lattice_string_point(lam, y));
      bool all_in_coset = true;
      for (const Rat& v : phi_tilde(lam, y).flat())
        all_in_coset = all_in_coset && (lam_integral ? is_integer(v) : is_half_integer(v));
      CHECK_FALSE(all_in_coset);
    }
  }
}

TEST_CASE("inverse rejects points off the subspace") {
  Weight lam = wd({Rat(2), Rat(1), Rat(0)});
  TweakedPattern t = phi_tilde(lam, StringPointD::zero(3));
  t.dn(1) += 1;
  CHECK_THROWS_AS(phi_tilde_inverse(lam, t), std::invalid_argument);
}
