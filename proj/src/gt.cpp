#include "gtpoly/gt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gtpoly {

namespace {

// Cell index in display order, allocation free.
int cell_index(LieType t, char kind, int i, int j) {
  const int n = t.rank;
  auto bad = [] { throw std::invalid_argument("pattern cell out of range"); };
  switch (t.family) {
    case Family::A: {
      if (kind != 'y' || i < 1 || i > n || j < i || j > n) bad();
      int off = 0;
      for (int r = 1; r < i; ++r) off += n - r + 1;
      return off + (j - i);
    }
    case Family::B:
    case Family::C: {
      if (i < 1 || i > n || j < i || j > n || (kind == 'y' && i < 2)) bad();
      int off = 0;
      // rows: z_1, then (y_i, z_i) for i = 2..n
      for (int r = 1; r < i; ++r) off += (r == 1 ? 1 : 2) * (n - r + 1);
      if (kind == 'z' && i >= 2) off += n - i + 1;
      return off + (j - i);
    }
    case Family::D: {
      int off = 0;
      if (kind == 'z') {
        if (i < 1 || i > n - 1 || j < i || j > n - 1) bad();
        for (int r = 1; r < i; ++r) off += (r >= 2 ? n - r + 1 : 0) + (n - r);
        if (i >= 2) off += n - i + 1;  // the y-row above
        return off + (j - i);
      }
      if (i < 2 || i > n || j < i || j > n) bad();
      for (int r = 1; r < i; ++r) off += (r >= 2 ? n - r + 1 : 0) + (r <= n - 1 ? n - r : 0);
      return off + (j - i);
    }
  }
  bad();
  return -1;
}

}  // namespace

GTPattern::GTPattern(LieType t, std::vector<Rat> c) : type(t), cells(std::move(c)) {
  if (static_cast<int>(cells.size()) != cell_count(t))
    throw std::invalid_argument("pattern has wrong number of cells for its type");
}

int GTPattern::cell_count(LieType t) { return t.positive_root_count(); }

GTPattern GTPattern::zero(LieType t) {
  return GTPattern(t, std::vector<Rat>(cell_count(t), Rat(0)));
}

const Rat& GTPattern::y(int i, int j) const { return cells[cell_index(type, 'y', i, j)]; }
const Rat& GTPattern::z(int i, int j) const { return cells[cell_index(type, 'z', i, j)]; }
Rat& GTPattern::y(int i, int j) { return cells[cell_index(type, 'y', i, j)]; }
Rat& GTPattern::z(int i, int j) { return cells[cell_index(type, 'z', i, j)]; }

PosetPoint point_from_pattern(const GTPattern& p) { return p.cells; }

GTPattern pattern_from_point(const Weight& lambda, const PosetPoint& x) {
  return GTPattern(lambda.type, x);
}

MarkedPoset gt_poset(const Weight& lambda) {
  const LieType t = lambda.type;
  const int n = t.rank;
  if (t.family == Family::D)
    throw std::invalid_argument("the type D pattern polytope is not a marked order polytope");
  if (!is_dominant(lambda)) throw std::invalid_argument("gt_poset needs a dominant weight");

  MarkedPoset p;
  auto node = [&](const std::string& name) {
    p.elements.push_back(name);
    return static_cast<int>(p.elements.size()) - 1;
  };
  auto mark = [&](int e, const Rat& v) {
    p.marked.push_back(e);
    p.marking.push_back(v);
  };
  auto cover = [&](int lo, int hi) { p.covers.emplace_back(lo, hi); };
  auto nm = [&](char k, int i, int j) {
    return std::string(1, k) + "_" + std::to_string(i) + "_" + std::to_string(j);
  };

  std::vector<int> lam(n);
  for (int j = 1; j <= n; ++j) {
    lam[j - 1] = node("lam_" + std::to_string(j));
    mark(lam[j - 1], lambda.eps[j - 1]);
  }
  int zero_top = node("zero_top");
  mark(zero_top, Rat(0));

  if (t.family == Family::A) {
    std::vector<int> prev = lam;
    prev.push_back(zero_top);  // row 0: lam_1..lam_n, 0
    for (int i = 1; i <= n; ++i) {
      std::vector<int> cur;
      for (int j = i; j <= n; ++j) {
        int e = node(nm('y', i, j));
        cur.push_back(e);
        cover(e, prev[j - i]);      // upper-left
        cover(prev[j - i + 1], e);  // upper-right
      }
      prev = cur;
    }
    return p;
  }

  // types B and C
  std::vector<int> prev = lam;
  prev.push_back(zero_top);
  for (int i = 1; i <= n; ++i) {
    if (i >= 2) {
      // y-row i with its trailing marked zero
      std::vector<int> cur;
      for (int j = i; j <= n; ++j) {
        int e = node(nm('y', i, j));
        cur.push_back(e);
        cover(e, prev[j - i]);
        cover(prev[j - i + 1], e);
      }
      int z0 = node("zero_r" + std::to_string(i));
      mark(z0, Rat(0));
      cover(z0, prev[n - i + 1]);
      cur.push_back(z0);
      prev = cur;
    }
    std::vector<int> cur;
    for (int j = i; j <= n; ++j) {
      int e = node(nm('z', i, j));
      cur.push_back(e);
      cover(e, prev[j - i]);
      cover(prev[j - i + 1], e);
    }
    prev = cur;
  }
  int zb = node("zero_bot");
  mark(zb, Rat(0));
  cover(zb, prev[0]);
  return p;
}

bool gt_membership(const Weight& lambda, const GTPattern& p) {
  if (!(p.type == lambda.type))
    throw std::invalid_argument("pattern type does not match the weight");
  const int n = lambda.type.rank;
  auto Y = [&](int i, int j) -> Rat {  // y with the top row read from lambda
    return i == 1 ? lambda.eps[j - 1] : p.y(i, j);
  };
  switch (lambda.type.family) {
    case Family::A: {
      for (int j = 1; j <= n; ++j) {
        if (p.y(1, j) > lambda.eps[j - 1]) return false;
        if (p.y(1, j) < (j < n ? lambda.eps[j] : Rat(0))) return false;
      }
      for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          if (p.y(i, j) > p.y(i - 1, j - 1)) return false;
          if (j < n && p.y(i, j) < p.y(i - 1, j)) return false;
          if (j == n && p.y(i, n) < p.y(i - 1, n)) return false;
        }
      return true;
    }
    case Family::B:
    case Family::C: {
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          if (p.z(i, j) > Y(i, j)) return false;
          if (p.z(i, j) < (j < n ? Y(i, j + 1) : Rat(0))) return false;
        }
      for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          if (p.y(i, j) > p.z(i - 1, j - 1)) return false;
          if (p.y(i, j) < p.z(i - 1, j)) return false;
        }
      return true;
    }
    case Family::D: {
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 2; ++j) {
          const Rat& zz = p.z(i, j);
          if (zz > Y(i, j)) return false;
          if (i + 1 <= j && zz > Y(i + 1, j)) return false;
          if (zz < Y(i, j + 1)) return false;
          if (zz < Y(i + 1, j + 1)) return false;
        }
      // last z-column: interlaces with both neighboring rows and obeys the
      // min-inequality against them
      for (int i = 1; i <= n - 1; ++i) {
        const Rat& zz = p.z(i, n - 1);
        Rat cap = (i <= n - 2) ? std::min(Y(i, n - 1), Y(i + 1, n - 1), std::less<Rat>())
                               : Y(n - 1, n - 1);
        if (zz > cap) return false;
        if (zz < Y(i, n) || zz < Y(i + 1, n)) return false;
        if (zz > cap + Y(i, n) + Y(i + 1, n)) return false;
      }
      return true;
    }
  }
  return false;
}

bool is_standard(const Weight& lambda, const GTPattern& p) {
  if (!gt_membership(lambda, p))
    throw std::invalid_argument("is_standard needs a pattern inside the polytope");
  const int n = lambda.type.rank;
  auto all_one_coset = [&](const std::vector<Rat>& vals) {
    bool all_int = true, all_half = true;
    for (const Rat& v : vals) {
      all_int = all_int && is_integer(v);
      all_half = all_half && is_half_integer(v);
    }
    return all_int || all_half;
  };
  switch (lambda.type.family) {
    case Family::A:
    case Family::C: {
      for (const Rat& v : lambda.eps)
        if (!is_integer(v)) return false;
      for (const Rat& v : p.cells)
        if (!is_integer(v)) return false;
      return true;
    }
    case Family::B: {
      std::vector<Rat> rest = lambda.eps;
      for (int i = 1; i <= n; ++i) {
        const Rat& zl = p.z(i, n);
        if (!in_coset(zl, Rat(0), rat(1, 2))) return false;
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n - 1; ++j) rest.push_back(p.z(i, j));
      for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) rest.push_back(p.y(i, j));
      return all_one_coset(rest);
    }
    case Family::D: {
      std::vector<Rat> all = lambda.eps;
      all.insert(all.end(), p.cells.begin(), p.cells.end());
      return all_one_coset(all);
    }
  }
  return false;
}

namespace {

// shared coset of the weight coefficients: 0 for integral, 1/2 otherwise
Rat lambda_offset(const Weight& lambda) {
  bool all_int = true, all_half = true;
  for (const Rat& v : lambda.eps) {
    all_int = all_int && is_integer(v);
    all_half = all_half && is_half_integer(v);
  }
  if (all_int) return Rat(0);
  if (all_half) return rat(1, 2);
  throw std::invalid_argument("weight coefficients are neither integral nor half-integral");
}

}  // namespace

std::vector<GTPattern> enumerate_standard_patterns(const Weight& lambda) {
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument("enumeration needs a dominant integral weight");
  const LieType t = lambda.type;
  const int n = t.rank;
  const Rat off = lambda_offset(lambda);

  // cells in display order, with per-cell coset and bound callbacks
  struct Cell {
    char kind;
    int i, j;
    Rat offset, step;
  };
  std::vector<Cell> cells;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.push_back({'y', i, j, Rat(0), Rat(1)});
      break;
    case Family::B:
    case Family::C: {
      const Rat step(1);
      auto cell_coset = [&](char k, int j) {
        if (t.family == Family::B && k == 'z' && j == n)
          return std::pair<Rat, Rat>(Rat(0), rat(1, 2));
        if (t.family == Family::C) return std::pair<Rat, Rat>(Rat(0), step);
        return std::pair<Rat, Rat>(off, step);
      };
      for (int j = 1; j <= n; ++j) {
        auto [o, s] = cell_coset('z', j);
        cells.push_back({'z', 1, j, o, s});
      }
      for (int i = 2; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          auto [o, s] = cell_coset('y', j);
          cells.push_back({'y', i, j, o, s});
        }
        for (int j = i; j <= n; ++j) {
          auto [o, s] = cell_coset('z', j);
          cells.push_back({'z', i, j, o, s});
        }
      }
      break;
    }
    case Family::D: {
      for (int j = 1; j <= n - 1; ++j) cells.push_back({'z', 1, j, off, Rat(1)});
      for (int i = 2; i <= n; ++i) {
        for (int j = i; j <= n; ++j) cells.push_back({'y', i, j, off, Rat(1)});
        if (i <= n - 1)
          for (int j = i; j <= n - 1; ++j) cells.push_back({'z', i, j, off, Rat(1)});
      }
      break;
    }
  }

  GTPattern work = GTPattern::zero(t);
  std::vector<GTPattern> out;
  Rat big = Rat(0);
  for (const Rat& v : lambda.eps) big = std::max(big, Rat(abs(v)), std::less<Rat>());

  auto Y = [&](int i, int j) -> Rat {
    return i == 1 ? lambda.eps[j - 1] : work.y(i, j);
  };

  // bounds from already-filled neighbors only; full membership filters leaves
  auto bounds = [&](const Cell& c) -> std::pair<Rat, Rat> {
    Rat lo = -big, hi = big;
    if (t.family == Family::A) {
      if (c.i == 1) {
        hi = lambda.eps[c.j - 1];
        lo = c.j < n ? lambda.eps[c.j] : Rat(0);
      } else {
        hi = work.y(c.i - 1, c.j - 1);
        lo = c.j <= n - 1 ? work.y(c.i - 1, c.j) : work.y(c.i - 1, n);
      }
      return {lo, hi};
    }
    if (t.family == Family::B || t.family == Family::C) {
      if (c.kind == 'z') {
        hi = Y(c.i, c.j);
        lo = c.j < n ? Y(c.i, c.j + 1) : Rat(0);
      } else {
        hi = work.z(c.i - 1, c.j - 1);
        lo = work.z(c.i - 1, c.j);
      }
      return {lo, hi};
    }
    // type D: partial bounds, the next row is not known yet
    if (c.kind == 'z') {
      hi = Y(c.i, c.j);
      if (c.j <= n - 2)
        lo = Y(c.i, c.j + 1);
      else
        lo = Y(c.i, n);
    } else {
      // y(i,j): upper z(i-1,j-1), lower z(i-1,j) when that cell exists
      hi = c.j - 1 >= c.i - 1 && c.j - 1 <= n - 1 ? work.z(c.i - 1, c.j - 1) : big;
      if (c.j <= n - 1)
        lo = work.z(c.i - 1, c.j);
      else
        lo = -big;
      if (c.j == n) hi = work.z(c.i - 1, n - 1);
    }
    return {lo, hi};
  };

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      if (gt_membership(lambda, work) && is_standard(lambda, work)) out.push_back(work);
      return;
    }
    const Cell& c = cells[k];
    auto [lo, hi] = bounds(c);
    if (lo > hi) return;
    Int klo = ceil_rat((lo - c.offset) / c.step);
    Int khi = floor_rat((hi - c.offset) / c.step);
    Rat& slot = c.kind == 'y' ? work.y(c.i, c.j) : work.z(c.i, c.j);
    for (Int kk = klo; kk <= khi; ++kk) {
      slot = c.offset + Rat(kk) * c.step;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

GTPattern b_witness(const Weight& lambda) {
  if (lambda.type.family != Family::B)
    throw std::invalid_argument("b_witness is a type B construction");
  if (!is_dominant(lambda)) throw std::invalid_argument("b_witness needs a dominant weight");
  const int n = lambda.type.rank;
  auto lam = [&](int m) { return m <= n ? lambda.eps[m - 1] : Rat(0); };
  GTPattern p = GTPattern::zero(lambda.type);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      p.z(i, j) = lam(i + j);
      if (i >= 2) p.y(i, j) = lam(i + j - 1);
    }
  if (!gt_membership(lambda, p)) throw std::logic_error("witness pattern left the polytope");
  return p;
}

}  // namespace gtpoly
