#include "gtpoly/polyoracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "gtpoly/gt.hpp"
#include "gtpoly/string_d.hpp"
#include "gtpoly/tweaked_d.hpp"

namespace gtpoly {

PolytopeKind kind_from_string(const std::string& s) {
  if (s == "gtA") return PolytopeKind::GtA;
  if (s == "gtB") return PolytopeKind::GtB;
  if (s == "gtC") return PolytopeKind::GtC;
  if (s == "gtD") return PolytopeKind::GtD;
  if (s == "tweakedD") return PolytopeKind::TweakedD;
  if (s == "stringD") return PolytopeKind::StringD;
  throw std::invalid_argument("unknown polytope kind: " + s);
}

std::string kind_name(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::GtA: return "gtA";
    case PolytopeKind::GtB: return "gtB";
    case PolytopeKind::GtC: return "gtC";
    case PolytopeKind::GtD: return "gtD";
    case PolytopeKind::TweakedD: return "tweakedD";
    case PolytopeKind::StringD: return "stringD";
  }
  return "?";
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// positive scaling to a primitive integer vector (rhs included)
LinRow canonical_row(const LinRow& r) {
  std::vector<Rat> all = r.a;
  all.push_back(r.b);
  std::vector<Int> prim = primitive_integer(all);
  LinRow out;
  out.a.reserve(r.a.size());
  for (size_t i = 0; i < r.a.size(); ++i) out.a.emplace_back(prim[i]);
  out.b = Rat(prim.back());
  return out;
}

bool row_less(const LinRow& x, const LinRow& y) {
  for (size_t i = 0; i < x.a.size(); ++i) {
    int c = cmp(x.a[i], y.a[i]);
    if (c != 0) return c < 0;
  }
  return cmp(x.b, y.b) < 0;
}

void canonicalize(HPolytope& h) {
  for (auto& r : h.ineqs) r = canonical_row(r);
  for (auto& r : h.eqs) r = canonical_row(r);
  std::sort(h.ineqs.begin(), h.ineqs.end(), row_less);
  h.ineqs.erase(std::unique(h.ineqs.begin(), h.ineqs.end(),
                            [](const LinRow& x, const LinRow& y) {
                              return x.a == y.a && x.b == y.b;
                            }),
                h.ineqs.end());
}

// incremental builder: rows are linear forms over the variables plus a
// constant carried to the right-hand side
struct RowBuilder {
  HPolytope h;
  explicit RowBuilder(int dim) { h.dim = dim; }
  // sum coeff*var + constant <= 0
  void le(const std::vector<std::pair<int, Rat>>& terms, const Rat& constant) {
    LinRow r;
    r.a.assign(h.dim, Rat(0));
    for (auto& [v, c] : terms) r.a[v] += c;
    r.b = -constant;
    h.ineqs.push_back(std::move(r));
  }
  void eq(const std::vector<std::pair<int, Rat>>& terms, const Rat& constant) {
    LinRow r;
    r.a.assign(h.dim, Rat(0));
    for (auto& [v, c] : terms) r.a[v] += c;
    r.b = -constant;
    h.eqs.push_back(std::move(r));
  }
};

}  // namespace

HPolytope hrep(PolytopeKind kind, const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("hrep needs a dominant weight");
  const int n = lambda.type.rank;
  const Family fam = lambda.type.family;
  auto expect = [&](Family f) {
    if (fam != f) throw std::invalid_argument("weight family does not match the polytope kind");
  };

  // per-variable natural coset: defaults to integers
  auto lam_offset = [&]() {
    bool all_int = true;
    for (const Rat& v : lambda.eps) all_int = all_int && is_integer(v);
    return all_int ? Rat(0) : rat(1, 2);
  };

  switch (kind) {
    case PolytopeKind::GtA: {
      expect(Family::A);
      // variables: y(i,j) row-major
      std::map<std::pair<int, int>, int> yv;
      int d = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) yv[{i, j}] = d++;
      RowBuilder rb(d);
      for (int j = 1; j <= n; ++j) {
        rb.le({{yv[{1, j}], Rat(1)}}, -lambda.eps[j - 1]);
        rb.le({{yv[{1, j}], Rat(-1)}}, j < n ? lambda.eps[j] : Rat(0));
      }
      for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          rb.le({{yv[{i, j}], Rat(1)}, {yv[{i - 1, j - 1}], Rat(-1)}}, Rat(0));
          rb.le({{yv[{i - 1, j}], Rat(1)}, {yv[{i, j}], Rat(-1)}}, Rat(0));
        }
      rb.h.var_names.resize(d);
      for (auto& [ij, v] : yv)
        rb.h.var_names[v] = "y_" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
      rb.h.natural_cosets.assign(d, {Rat(0), Rat(1)});
      canonicalize(rb.h);
      return rb.h;
    }
    case PolytopeKind::GtB:
    case PolytopeKind::GtC: {
      expect(kind == PolytopeKind::GtB ? Family::B : Family::C);
      std::map<std::pair<int, int>, int> yv, zv;
      int d = 0;
      for (int j = 1; j <= n; ++j) zv[{1, j}] = d++;
      for (int i = 2; i <= n; ++i) {
        for (int j = i; j <= n; ++j) yv[{i, j}] = d++;
        for (int j = i; j <= n; ++j) zv[{i, j}] = d++;
      }
      RowBuilder rb(d);
      auto Yt = [&](int i, int j) -> std::pair<int, Rat> {
        if (i == 1) return {-1, lambda.eps[j - 1]};
        return {yv[{i, j}], Rat(0)};
      };
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          auto [uv, uc] = Yt(i, j);
          if (uv < 0)
            rb.le({{zv[{i, j}], Rat(1)}}, -uc);
          else
            rb.le({{zv[{i, j}], Rat(1)}, {uv, Rat(-1)}}, Rat(0));
          if (j < n) {
            auto [lv, lc] = Yt(i, j + 1);
            if (lv < 0)
              rb.le({{zv[{i, j}], Rat(-1)}}, lc);
            else
              rb.le({{lv, Rat(1)}, {zv[{i, j}], Rat(-1)}}, Rat(0));
          } else {
            rb.le({{zv[{i, j}], Rat(-1)}}, Rat(0));
          }
        }
      for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          rb.le({{yv[{i, j}], Rat(1)}, {zv[{i - 1, j - 1}], Rat(-1)}}, Rat(0));
          rb.le({{zv[{i - 1, j}], Rat(1)}, {yv[{i, j}], Rat(-1)}}, Rat(0));
        }
      rb.h.var_names.resize(d);
      for (auto& [ij, v] : yv)
        rb.h.var_names[v] = "y_" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
      for (auto& [ij, v] : zv)
        rb.h.var_names[v] = "z_" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
      rb.h.natural_cosets.assign(d, {lam_offset(), Rat(1)});
      if (kind == PolytopeKind::GtB)
        for (int i = 1; i <= n; ++i) rb.h.natural_cosets[zv[{i, n}]] = {Rat(0), rat(1, 2)};
      if (kind == PolytopeKind::GtC)
        rb.h.natural_cosets.assign(d, {Rat(0), Rat(1)});
      canonicalize(rb.h);
      return rb.h;
    }
    case PolytopeKind::GtD: {
      expect(Family::D);
      std::map<std::pair<int, int>, int> yv, zv;
      int d = 0;
      for (int j = 1; j <= n - 1; ++j) zv[{1, j}] = d++;
      for (int i = 2; i <= n; ++i) {
        for (int j = i; j <= n; ++j) yv[{i, j}] = d++;
        if (i <= n - 1)
          for (int j = i; j <= n - 1; ++j) zv[{i, j}] = d++;
      }
      RowBuilder rb(d);
      auto Yt = [&](int i, int j) -> std::pair<int, Rat> {
        if (i == 1) return {-1, lambda.eps[j - 1]};
        return {yv[{i, j}], Rat(0)};
      };
      auto le_zy = [&](int zvar, int i, int j, int sign) {
        // sign=+1: z - Y(i,j) <= 0 ; sign=-1: Y(i,j) - z <= 0
        auto [v, c] = Yt(i, j);
        if (v < 0)
          rb.le({{zvar, Rat(sign)}}, Rat(-sign) * c);
        else
          rb.le({{zvar, Rat(sign)}, {v, Rat(-sign)}}, Rat(0));
      };
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 2; ++j) {
          int zz = zv[{i, j}];
          le_zy(zz, i, j, +1);
          if (j >= i + 1) le_zy(zz, i + 1, j, +1);
          le_zy(zz, i, j + 1, -1);
          le_zy(zz, i + 1, j + 1, -1);
        }
      for (int i = 1; i <= n - 1; ++i) {
        int zz = zv[{i, n - 1}];
        le_zy(zz, i, n - 1, +1);
        if (i <= n - 2) le_zy(zz, i + 1, n - 1, +1);
        le_zy(zz, i, n, -1);
        le_zy(zz, i + 1, n, -1);
        // three-term bounds z <= Y(.,n-1) + Y(i,n) + Y(i+1,n)
        for (int top : (i <= n - 2) ? std::vector<int>{i, i + 1} : std::vector<int>{i}) {
          std::vector<std::pair<int, Rat>> terms{{zz, Rat(1)}};
          Rat constant(0);
          for (auto [ii, jj] : {std::pair<int, int>{top, n - 1}, {i, n}, {i + 1, n}}) {
            auto [v, c] = Yt(ii, jj);
            if (v < 0)
              constant -= c;
            else
              terms.emplace_back(v, Rat(-1));
          }
          rb.le(terms, constant);
        }
      }
      rb.h.var_names.resize(d);
      for (auto& [ij, v] : yv)
        rb.h.var_names[v] = "y_" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
      for (auto& [ij, v] : zv)
        rb.h.var_names[v] = "z_" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
      rb.h.natural_cosets.assign(d, {lam_offset(), Rat(1)});
      canonicalize(rb.h);
      return rb.h;
    }
    case PolytopeKind::TweakedD: {
      expect(Family::D);
      // variables in TweakedPattern::flat order
      std::map<std::string, int> var;
      int d = 0;
      auto mk = [&](const std::string& s) { var[s] = d++; };
      auto nm = [](const char* stem, int i, int j) {
        return std::string(stem) + "_" + std::to_string(i) + "_" + std::to_string(j);
      };
      for (int i = 1; i <= n - 1; ++i) {
        if (i >= 2)
          for (int j = i; j <= n; ++j) mk(nm("xi", i, j));
        for (int j = i; j <= n - 2; ++j) mk(nm("zeta", i, j));
        if (i <= n - 2) {
          mk("zup_" + std::to_string(i));
          mk("zdown_" + std::to_string(i));
        } else {
          mk(nm("zeta", n - 1, n - 1));
        }
      }
      mk(nm("xi", n, n));
      RowBuilder rb(d);
      auto Yt = [&](int i, int j) -> std::pair<int, Rat> {
        if (i == 1) return {-1, lambda.eps[j - 1]};
        return {var.at(nm("xi", i, j)), Rat(0)};
      };
      auto le_vy = [&](int v0, int i, int j, int sign) {
        auto [v, c] = Yt(i, j);
        if (v < 0)
          rb.le({{v0, Rat(sign)}}, Rat(-sign) * c);
        else
          rb.le({{v0, Rat(sign)}, {v, Rat(-sign)}}, Rat(0));
      };
      for (int i = 1; i <= n - 2; ++i)
        for (int j = i; j <= n - 2; ++j) {
          int zz = var.at(nm("zeta", i, j));
          le_vy(zz, i, j, +1);
          if (j >= i + 1) le_vy(zz, i + 1, j, +1);
          le_vy(zz, i, j + 1, -1);
          le_vy(zz, i + 1, j + 1, -1);
        }
      auto three_term = [&](int v0, int top_i, int i) {
        std::vector<std::pair<int, Rat>> terms{{v0, Rat(1)}};
        Rat constant(0);
        for (auto [ii, jj] : {std::pair<int, int>{top_i, n - 1}, {i, n}, {i + 1, n}}) {
          auto [v, c] = Yt(ii, jj);
          if (v < 0)
            constant -= c;
          else
            terms.emplace_back(v, Rat(-1));
        }
        rb.le(terms, constant);
      };
      for (int i = 1; i <= n - 2; ++i) {
        int u = var.at("zup_" + std::to_string(i));
        int w = var.at("zdown_" + std::to_string(i));
        le_vy(u, i, n - 1, +1);
        le_vy(w, i + 1, n - 1, +1);
        le_vy(u, i, n, -1);
        le_vy(u, i + 1, n, -1);
        le_vy(w, i, n, -1);
        le_vy(w, i + 1, n, -1);
        three_term(u, i, i);
        three_term(w, i + 1, i);
        // subspace equation: up - down - Y(i,n-1) + Y(i+1,n-1) = 0
        std::vector<std::pair<int, Rat>> terms{{u, Rat(1)}, {w, Rat(-1)}};
        Rat constant(0);
        auto [va, ca] = Yt(i, n - 1);
        if (va < 0) constant -= ca; else terms.emplace_back(va, Rat(-1));
        auto [vb, cb] = Yt(i + 1, n - 1);
        if (vb < 0) constant += cb; else terms.emplace_back(vb, Rat(1));
        rb.eq(terms, constant);
      }
      {
        int zb = var.at(nm("zeta", n - 1, n - 1));
        le_vy(zb, n - 1, n - 1, +1);
        le_vy(zb, n - 1, n, -1);
        le_vy(zb, n, n, -1);
        three_term(zb, n - 1, n - 1);
      }
      rb.h.var_names.resize(d);
      for (auto& [name, v] : var) rb.h.var_names[v] = name;
      rb.h.natural_cosets.assign(d, {lam_offset(), Rat(1)});
      canonicalize(rb.h);
      return rb.h;
    }
    case PolytopeKind::StringD: {
      expect(Family::D);
      const std::vector<Rat> lw = epsilon_to_omega(lambda);
      const int d = StringPointD::length(n);
      const StringPointD probe = StringPointD::zero(n);
      RowBuilder rb(d);
      auto av = [&](int i, int j) { return probe.index(i, j); };          // -1 outside
      auto bv = [&](int i, int j) { return probe.index(i, 2 * n - 1 - j); };
      auto add_le = [&](std::vector<std::pair<int, Rat>> terms, Rat constant) {
        std::vector<std::pair<int, Rat>> kept;
        for (auto& [v, c] : terms)
          if (v >= 0) kept.emplace_back(v, c);
        rb.le(kept, constant);
      };
      for (int i = 1; i <= n - 2; ++i) {
        for (int j = i; j <= n - 3; ++j)
          add_le({{av(i, j + 1), Rat(1)}, {av(i, j), Rat(-1)}}, Rat(0));
        add_le({{av(i, n - 1), Rat(1)}, {av(i, n - 2), Rat(-1)}}, Rat(0));
        add_le({{bv(i, n - 1), Rat(1)}, {av(i, n - 2), Rat(-1)}}, Rat(0));
        add_le({{bv(i, n - 2), Rat(1)}, {av(i, n - 1), Rat(-1)}}, Rat(0));
        add_le({{bv(i, n - 2), Rat(1)}, {bv(i, n - 1), Rat(-1)}}, Rat(0));
        for (int j = n - 2; j >= i + 1; --j)
          add_le({{bv(i, j - 1), Rat(1)}, {bv(i, j), Rat(-1)}}, Rat(0));
        add_le({{bv(i, i), Rat(-1)}}, Rat(0));
      }
      add_le({{av(n - 1, n - 1), Rat(-1)}}, Rat(0));
      add_le({{bv(n - 1, n - 1), Rat(-1)}}, Rat(0));

      auto S_terms = [&](int k, int j, std::vector<std::pair<int, Rat>>& terms, Rat sign) {
        terms.emplace_back(av(k, j - 1), -sign);
        terms.emplace_back(av(k, j), 2 * sign);
        terms.emplace_back(av(k, j + 1), -sign);
        terms.emplace_back(bv(k, j + 1), -sign);
        terms.emplace_back(bv(k, j), 2 * sign);
        terms.emplace_back(bv(k, j - 1), -sign);
      };
      for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n - 2; ++j) {
          {
            std::vector<std::pair<int, Rat>> terms{{av(i, j), Rat(1)},
                                                   {av(i, j + 1), Rat(-1)},
                                                   {bv(i, j + 1), Rat(-1)},
                                                   {bv(i, j), Rat(2)},
                                                   {bv(i, j - 1), Rat(-1)}};
            for (int k = 1; k < i; ++k) S_terms(k, j, terms, Rat(1));
            add_le(terms, -lw[j - 1]);
          }
          {
            std::vector<std::pair<int, Rat>> terms{{bv(i, j), Rat(1)}, {bv(i, j - 1), Rat(-1)}};
            for (int k = 1; k < i; ++k) S_terms(k, j, terms, Rat(1));
            add_le(terms, -lw[j - 1]);
          }
        }
        {
          std::vector<std::pair<int, Rat>> terms{{av(i, n - 1), Rat(1)}, {bv(i, n - 2), Rat(-1)}};
          for (int k = 1; k < i; ++k) {
            terms.emplace_back(av(k, n - 2), Rat(-1));
            terms.emplace_back(av(k, n - 1), Rat(2));
            terms.emplace_back(bv(k, n - 2), Rat(-1));
          }
          add_le(terms, -lw[n - 2]);
        }
        {
          std::vector<std::pair<int, Rat>> terms{{bv(i, n - 1), Rat(1)}, {bv(i, n - 2), Rat(-1)}};
          for (int k = 1; k < i; ++k) {
            terms.emplace_back(av(k, n - 2), Rat(-1));
            terms.emplace_back(bv(k, n - 1), Rat(2));
            terms.emplace_back(bv(k, n - 2), Rat(-1));
          }
          add_le(terms, -lw[n - 1]);
        }
      }
      rb.h.var_names.resize(d);
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= 2 * n - 1 - i; ++j)
          rb.h.var_names[probe.index(i, j)] =
              "a_" + std::to_string(i) + "_" + std::to_string(j);
      rb.h.natural_cosets.assign(d, {Rat(0), Rat(1)});
      canonicalize(rb.h);
      return rb.h;
    }
  }
  throw std::logic_error("unreachable");
}

bool hrep_member(const HPolytope& h, const std::vector<Rat>& x, bool strict) {
  if (static_cast<int>(x.size()) != h.dim)
    throw std::invalid_argument("point dimension does not match the polytope");
  for (const auto& r : h.eqs)
    if (dot(r.a, x) != r.b) return false;
  for (const auto& r : h.ineqs) {
    int c = cmp(dot(r.a, x), r.b);
    if (c > 0 || (strict && c == 0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// exact linear algebra

namespace {

int matrix_rank(std::vector<std::vector<Rat>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Solves E x = f; on success fills a particular solution and a nullspace
// basis. Returns false when inconsistent.
bool affine_hull(const std::vector<LinRow>& eqs, int dim, std::vector<Rat>& x0,
                 std::vector<std::vector<Rat>>& basis) {
  std::vector<std::vector<Rat>> m;
  for (const auto& r : eqs) {
    std::vector<Rat> row = r.a;
    row.push_back(r.b);
    m.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < dim && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat p = m[rank][c];
    for (int k = 0; k <= dim; ++k) m[rank][k] /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int k = 0; k <= dim; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (m[r][dim] != 0) return false;

  std::vector<char> is_pivot(dim, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  x0.assign(dim, Rat(0));
  for (int r = 0; r < rank; ++r) x0[pivot_col[r]] = m[r][dim];
  basis.clear();
  for (int c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(dim, Rat(0));
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return true;
}

// ---------------------------------------------------------------------------
// double description over the homogenization cone

struct DDRay {
  std::vector<Rat> v;
  std::vector<std::uint64_t> zero;  // tight processed rows
};

void set_bit(std::vector<std::uint64_t>& bs, int i) { bs[i >> 6] |= 1ull << (i & 63); }
bool subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<Rat> primitive(const std::vector<Rat>& v) {
  std::vector<Int> p = primitive_integer(v);
  std::vector<Rat> out;
  out.reserve(p.size());
  for (const Int& x : p) out.emplace_back(x);
  return out;
}

// extreme rays of { y : rows . y <= 0 }, with lineality returned separately
void dd_cone(const std::vector<std::vector<Rat>>& rows, int dim, std::vector<DDRay>& rays,
             std::vector<std::vector<Rat>>& lineality) {
  const int words = static_cast<int>(rows.size()) / 64 + 1;
  lineality.clear();
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> e(dim, Rat(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  rays.clear();

  for (int t = 0; t < static_cast<int>(rows.size()); ++t) {
    const std::vector<Rat>& c = rows[t];
    // reduce lineality against the new row
    int j0 = -1;
    for (size_t j = 0; j < lineality.size(); ++j)
      if (dot(c, lineality[j]) != 0) { j0 = static_cast<int>(j); break; }
    if (j0 >= 0) {
      std::vector<Rat> l0 = lineality[j0];
      Rat p0 = dot(c, l0);
      std::vector<std::vector<Rat>> keep;
      for (size_t j = 0; j < lineality.size(); ++j) {
        if (static_cast<int>(j) == j0) continue;
        Rat f = dot(c, lineality[j]) / p0;
        std::vector<Rat> w = lineality[j];
        for (int k = 0; k < dim; ++k) w[k] -= f * l0[k];
        keep.push_back(std::move(w));
      }
      lineality = std::move(keep);
      for (DDRay& r : rays) {
        Rat f = dot(c, r.v) / p0;
        for (int k = 0; k < dim; ++k) r.v[k] -= f * l0[k];
        r.v = primitive(r.v);
        set_bit(r.zero, t);  // now tight on the new row
      }
      DDRay d;
      d.v = l0;
      if (sgn(p0) > 0)
        for (Rat& x : d.v) x = -x;
      d.v = primitive(d.v);
      d.zero.assign(words, 0);
      // tight on all previous rows (lineality was orthogonal to them)
      for (int s = 0; s < t; ++s) set_bit(d.zero, s);
      rays.push_back(std::move(d));
      continue;
    }

    std::vector<Rat> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) val[i] = dot(c, rays[i].v);
    bool any_pos = false;
    for (const Rat& v : val) any_pos = any_pos || sgn(v) > 0;
    if (!any_pos) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) set_bit(rays[i].zero, t);
      continue;
    }
    std::vector<DDRay> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (sgn(val[i]) <= 0) {
        DDRay r = rays[i];
        if (val[i] == 0) set_bit(r.zero, t);
        next.push_back(std::move(r));
      }
    for (size_t ip = 0; ip < rays.size(); ++ip) {
      if (sgn(val[ip]) <= 0) continue;
      for (size_t in = 0; in < rays.size(); ++in) {
        if (sgn(val[in]) >= 0) continue;
        // combinatorial adjacency
        std::vector<std::uint64_t> common(words);
        for (int w = 0; w < words; ++w) common[w] = rays[ip].zero[w] & rays[in].zero[w];
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ip || k == in) continue;
          if (subset(common, rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay nr;
        nr.v.assign(dim, Rat(0));
        for (int k = 0; k < dim; ++k)
          nr.v[k] = val[ip] * rays[in].v[k] - val[in] * rays[ip].v[k];
        nr.v = primitive(nr.v);
        nr.zero.assign(words, 0);
        for (int s = 0; s <= t; ++s) {
          Rat d2 = dot(rows[s], nr.v);
          if (d2 == 0) set_bit(nr.zero, s);
        }
        next.push_back(std::move(nr));
      }
    }
    // drop duplicates produced by degenerate splits
    std::sort(next.begin(), next.end(),
              [](const DDRay& a, const DDRay& b) { return RatVecLess{}(a.v, b.v); });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const DDRay& a, const DDRay& b) { return a.v == b.v; }),
               next.end());
    rays = std::move(next);
  }
}

}  // namespace

VertexSet vertex_enumeration(const HPolytope& h) {
  std::vector<Rat> x0;
  std::vector<std::vector<Rat>> basis;
  if (!affine_hull(h.eqs, h.dim, x0, basis)) return {{}, false};
  const int k = static_cast<int>(basis.size());

  // homogenized rows over (t, s)
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : h.ineqs) {
    std::vector<Rat> row(k + 1, Rat(0));
    for (int j = 0; j < k; ++j) row[j] = dot(r.a, basis[j]);
    row[k] = dot(r.a, x0) - r.b;
    rows.push_back(primitive(row));
  }
  {
    std::vector<Rat> srow(k + 1, Rat(0));
    srow[k] = -1;
    rows.push_back(std::move(srow));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return RatVecLess{}(a, b);
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<DDRay> rays;
  std::vector<std::vector<Rat>> lineality;
  dd_cone(rows, k + 1, rays, lineality);

  std::vector<std::vector<Rat>> points;
  bool recession = !lineality.empty();
  for (const DDRay& r : rays) {
    const Rat& s = r.v[k];
    if (s == 0) {
      // a ray of all-zero coordinates cannot occur (rays are primitive)
      recession = true;
      continue;
    }
    std::vector<Rat> x = x0;
    for (int j = 0; j < k; ++j) {
      Rat tj = r.v[j] / s;
      for (int i = 0; i < h.dim; ++i) x[i] += tj * basis[j][i];
    }
    points.push_back(std::move(x));
  }
  if (points.empty()) return {{}, false};
  if (recession) throw std::invalid_argument("polyhedron is unbounded");
  std::sort(points.begin(), points.end(), RatVecLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {std::move(points), true};
}

bool is_vertex_by_perturbation(const HPolytope& h, const std::vector<Rat>& x) {
  if (!hrep_member(h, x)) throw std::invalid_argument("point is infeasible");
  std::vector<std::vector<Rat>> tight;
  for (const auto& r : h.eqs) tight.push_back(r.a);
  for (const auto& r : h.ineqs)
    if (dot(r.a, x) == r.b) tight.push_back(r.a);
  return matrix_rank(std::move(tight)) == h.dim;
}

LatticeSpec LatticeSpec::integers(int dim) {
  return {std::vector<std::pair<Rat, Rat>>(dim, {Rat(0), Rat(1)})};
}
LatticeSpec LatticeSpec::half_shifted(int dim) {
  return {std::vector<std::pair<Rat, Rat>>(dim, {rat(1, 2), Rat(1)})};
}
LatticeSpec LatticeSpec::natural(const HPolytope& h) {
  if (static_cast<int>(h.natural_cosets.size()) != h.dim)
    throw std::invalid_argument("polytope carries no per-variable coset data");
  return {h.natural_cosets};
}

namespace {

struct ScanRow {
  std::vector<Rat> a;
  Rat b;
};

void scan_recurse(const std::vector<std::vector<Rat>>& values,
                  const std::vector<ScanRow>& rows,
                  const std::vector<std::vector<Rat>>& minrest, size_t v,
                  std::vector<Rat>& partial, std::vector<Rat>& point,
                  const std::function<void(const std::vector<Rat>&)>& emit) {
  if (v == values.size()) {
    emit(point);
    return;
  }
  for (const Rat& val : values[v]) {
    // sound pruning only; the exact (and strict) test runs at the leaves
    bool ok = true;
    for (size_t r = 0; r < rows.size() && ok; ++r)
      if (partial[r] + rows[r].a[v] * val + minrest[r][v + 1] > rows[r].b) ok = false;
    if (!ok) continue;
    std::vector<Rat> saved = partial;
    for (size_t r = 0; r < rows.size(); ++r) partial[r] += rows[r].a[v] * val;
    point[v] = val;
    scan_recurse(values, rows, minrest, v + 1, partial, point, emit);
    partial = std::move(saved);
  }
}

}  // namespace

std::vector<std::vector<Rat>> enumerate_lattice_points(const HPolytope& h,
                                                       const LatticeSpec& spec,
                                                       bool strict_interior) {
  if (static_cast<int>(spec.cosets.size()) != h.dim)
    throw std::invalid_argument("lattice spec dimension mismatch");
  VertexSet vs = vertex_enumeration(h);  // throws when unbounded
  if (!vs.feasible || vs.points.empty()) return {};

  std::vector<std::vector<Rat>> values(h.dim);
  for (int v = 0; v < h.dim; ++v) {
    Rat lo = vs.points[0][v], hi = vs.points[0][v];
    for (const auto& p : vs.points) {
      lo = std::min(lo, p[v], std::less<Rat>());
      hi = std::max(hi, p[v], std::less<Rat>());
    }
    auto [off, step] = spec.cosets[v];
    for (Int kk = ceil_rat((lo - off) / step); kk <= floor_rat((hi - off) / step); ++kk)
      values[v].push_back(off + Rat(kk) * step);
  }

  std::vector<ScanRow> rows;
  for (const auto& r : h.ineqs) rows.push_back({r.a, r.b});
  for (const auto& r : h.eqs) {
    rows.push_back({r.a, r.b});
    std::vector<Rat> neg = r.a;
    for (Rat& x : neg) x = -x;
    rows.push_back({std::move(neg), -r.b});
  }

  // worst-case remaining contribution per row and suffix
  std::vector<std::vector<Rat>> minrest(rows.size(),
                                        std::vector<Rat>(h.dim + 1, Rat(0)));
  for (size_t r = 0; r < rows.size(); ++r)
    for (int v = h.dim - 1; v >= 0; --v) {
      Rat lo = values[v].empty() ? Rat(0) : values[v].front();
      Rat hi = values[v].empty() ? Rat(0) : values[v].back();
      Rat contrib = std::min(rows[r].a[v] * lo, rows[r].a[v] * hi, std::less<Rat>());
      minrest[r][v] = minrest[r][v + 1] + contrib;
    }

  std::vector<std::vector<Rat>> out;
  std::vector<Rat> partial(rows.size(), Rat(0)), point(h.dim, Rat(0));
  scan_recurse(values, rows, minrest, 0, partial, point,
               [&](const std::vector<Rat>& p) {
                 if (hrep_member(h, p, strict_interior)) out.push_back(p);
               });
  std::sort(out.begin(), out.end(), RatVecLess{});
  return out;
}

Int count_lattice_points(const HPolytope& h, const LatticeSpec& spec) {
  return Int(static_cast<long>(enumerate_lattice_points(h, spec).size()));
}

ReflexivityResult reflexive_after_translation(const HPolytope& h) {
  if (!h.eqs.empty())
    throw std::invalid_argument("polytope is not full-dimensional (equality rows present)");
  VertexSet vs = vertex_enumeration(h);
  if (!vs.feasible || vs.points.empty())
    throw std::invalid_argument("polytope is empty");
  {
    std::vector<std::vector<Rat>> diffs;
    for (size_t i = 1; i < vs.points.size(); ++i) {
      std::vector<Rat> d(h.dim);
      for (int k = 0; k < h.dim; ++k) d[k] = vs.points[i][k] - vs.points[0][k];
      diffs.push_back(std::move(d));
    }
    if (matrix_rank(std::move(diffs)) != h.dim)
      throw std::invalid_argument("polytope is not full-dimensional");
  }

  auto interior = enumerate_lattice_points(h, LatticeSpec::integers(h.dim), true);
  ReflexivityResult res;
  if (interior.size() != 1) return res;
  res.interior_point = interior[0];
  const std::vector<Rat>& p = interior[0];

  // facet rows: tight vertex sets of affine rank dim-1
  bool all_facets_integral = true;
  for (const auto& r : h.ineqs) {
    std::vector<std::vector<Rat>> tight;
    for (const auto& v : vs.points)
      if (dot(r.a, v) == r.b) tight.push_back(v);
    if (tight.empty()) continue;
    std::vector<std::vector<Rat>> diffs;
    for (size_t i = 1; i < tight.size(); ++i) {
      std::vector<Rat> d(h.dim);
      for (int k = 0; k < h.dim; ++k) d[k] = tight[i][k] - tight[0][k];
      diffs.push_back(std::move(d));
    }
    if (matrix_rank(std::move(diffs)) != h.dim - 1) continue;  // not a facet
    Rat slack = r.b - dot(r.a, p);
    if (sgn(slack) <= 0) throw std::logic_error("interior point is on a facet");
    for (const Rat& c : r.a)
      if (!is_integer(c / slack)) { all_facets_integral = false; break; }
    if (!all_facets_integral) break;
  }
  res.reflexive = all_facets_integral;
  return res;
}

}  // namespace gtpoly
