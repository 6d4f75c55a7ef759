#include "gtpoly/tweaked_d.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "gtpoly/string_d.hpp"

namespace gtpoly {

namespace {

void check_rank(int n) {
  if (n < 2) throw std::invalid_argument("tweaked patterns need rank >= 2");
}

int y_index(int n, int i, int j) {
  if (i < 2 || i > n || j < i || j > n) throw std::invalid_argument("y index out of range");
  int off = 0;
  for (int r = 2; r < i; ++r) off += n - r + 1;
  return off + (j - i);
}

int z_index(int n, int i, int j) {
  if (i < 1 || i > n - 2 || j < i || j > n - 2)
    throw std::invalid_argument("z index out of range");
  int off = 0;
  for (int r = 1; r < i; ++r) off += n - 1 - r;
  return off + (j - i);
}

void check_weight_d(const Weight& lambda) {
  if (lambda.type.family != Family::D)
    throw std::invalid_argument("expected a type D weight");
}

}  // namespace

TweakedPattern TweakedPattern::zero(int rank) {
  check_rank(rank);
  TweakedPattern t;
  t.rank = rank;
  t.y.assign(rank * (rank - 1) / 2, Rat(0));
  t.z.assign((rank - 1) * (rank - 2) / 2, Rat(0));
  t.zup.assign(rank - 1, Rat(0));
  t.zdown.assign(rank >= 2 ? rank - 2 : 0, Rat(0));
  return t;
}

const Rat& TweakedPattern::yv(int i, int j) const { return y[y_index(rank, i, j)]; }
Rat& TweakedPattern::yv(int i, int j) { return y[y_index(rank, i, j)]; }
const Rat& TweakedPattern::zv(int i, int j) const { return z[z_index(rank, i, j)]; }
Rat& TweakedPattern::zv(int i, int j) { return z[z_index(rank, i, j)]; }

int TweakedPattern::coord_count(int rank) { return rank * rank - 2; }

std::vector<Rat> TweakedPattern::flat() const {
  const int n = rank;
  std::vector<Rat> v;
  v.reserve(coord_count(n));
  for (int i = 1; i <= n - 1; ++i) {
    if (i >= 2)
      for (int j = i; j <= n; ++j) v.push_back(yv(i, j));
    for (int j = i; j <= n - 2; ++j) v.push_back(zv(i, j));
    v.push_back(up(i));
    if (i <= n - 2) v.push_back(dn(i));
  }
  for (int j = n; j <= n; ++j) v.push_back(yv(n, j));
  return v;
}

TweakedPattern TweakedPattern::from_flat(int rank, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != coord_count(rank))
    throw std::invalid_argument("wrong coordinate count for a tweaked pattern");
  TweakedPattern t = zero(rank);
  size_t k = 0;
  const int n = rank;
  for (int i = 1; i <= n - 1; ++i) {
    if (i >= 2)
      for (int j = i; j <= n; ++j) t.yv(i, j) = v[k++];
    for (int j = i; j <= n - 2; ++j) t.zv(i, j) = v[k++];
    t.up(i) = v[k++];
    if (i <= n - 2) t.dn(i) = v[k++];
  }
  t.yv(n, n) = v[k++];
  return t;
}

MarkedPoset tweaked_poset(const Weight& lambda) {
  check_weight_d(lambda);
  const int n = lambda.type.rank;
  check_rank(n);
  MarkedPoset p;
  p.pseudo = true;
  auto node = [&](const std::string& name) {
    p.elements.push_back(name);
    return static_cast<int>(p.elements.size()) - 1;
  };
  auto nm = [](const std::string& stem, int i, int j) {
    return stem + "_" + std::to_string(i) + "_" + std::to_string(j);
  };
  // marked top row
  std::vector<std::vector<int>> xi(n + 1, std::vector<int>(n + 1, -1));
  for (int j = 1; j <= n; ++j) {
    xi[1][j] = node(nm("xi", 1, j));
    p.marked.push_back(xi[1][j]);
    p.marking.push_back(lambda.eps[j - 1]);
  }
  std::vector<std::vector<int>> zeta(n, std::vector<int>(n, -1));
  std::vector<int> zu(n, -1), zd(n, -1);
  for (int i = 1; i <= n - 1; ++i) {
    if (i >= 2)
      for (int j = i; j <= n; ++j) xi[i][j] = node(nm("xi", i, j));
    for (int j = i; j <= n - 2; ++j) zeta[i][j] = node(nm("zeta", i, j));
    if (i <= n - 2) {
      zu[i] = node("zup_" + std::to_string(i));
      zd[i] = node("zdown_" + std::to_string(i));
    } else {
      zu[i] = node(nm("zeta", n - 1, n - 1));
    }
  }
  for (int j = n; j <= n; ++j) xi[n][j] = node(nm("xi", n, j));

  auto cover = [&](int lo, int hi) { p.covers.emplace_back(lo, hi); };
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j) {
      cover(zeta[i][j], xi[i][j]);
      if (j >= i + 1) cover(zeta[i][j], xi[i + 1][j]);
      cover(xi[i][j + 1], zeta[i][j]);
      cover(xi[i + 1][j + 1], zeta[i][j]);
    }
  for (int i = 1; i <= n - 2; ++i) {
    cover(zu[i], xi[i][n - 1]);
    cover(xi[i][n], zu[i]);
    cover(xi[i + 1][n], zu[i]);
    cover(zd[i], xi[i + 1][n - 1]);
    cover(xi[i][n], zd[i]);
    cover(xi[i + 1][n], zd[i]);
  }
  cover(zu[n - 1], xi[n - 1][n - 1]);
  cover(xi[n - 1][n], zu[n - 1]);
  cover(xi[n][n], zu[n - 1]);
  return p;
}

bool tweaked_membership(const Weight& lambda, const TweakedPattern& t) {
  check_weight_d(lambda);
  const int n = lambda.type.rank;
  if (t.rank != n) throw std::invalid_argument("pattern rank does not match the weight");
  auto Y = [&](int i, int j) -> const Rat& {
    return i == 1 ? lambda.eps[j - 1] : t.yv(i, j);
  };
  // subspace equations
  for (int i = 1; i <= n - 2; ++i)
    if (Y(i, n - 1) - Y(i + 1, n - 1) != t.up(i) - t.dn(i)) return false;
  // interlacing of the ordinary cells
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j) {
      const Rat& zz = t.zv(i, j);
      if (zz > Y(i, j)) return false;
      if (j >= i + 1 && zz > Y(i + 1, j)) return false;
      if (zz < Y(i, j + 1)) return false;
      if (zz < Y(i + 1, j + 1)) return false;
    }
  // split column
  for (int i = 1; i <= n - 2; ++i) {
    if (t.up(i) > Y(i, n - 1)) return false;
    if (t.dn(i) > Y(i + 1, n - 1)) return false;
    if (t.up(i) < Y(i, n) || t.up(i) < Y(i + 1, n)) return false;
    if (t.dn(i) < Y(i, n) || t.dn(i) < Y(i + 1, n)) return false;
    if (t.up(i) > Y(i, n - 1) + Y(i, n) + Y(i + 1, n)) return false;
    if (t.dn(i) > Y(i + 1, n - 1) + Y(i, n) + Y(i + 1, n)) return false;
  }
  // bottom cell
  const Rat& zb = t.up(n - 1);
  if (zb > Y(n - 1, n - 1)) return false;
  if (zb < Y(n - 1, n) || zb < Y(n, n)) return false;
  if (zb > Y(n - 1, n - 1) + Y(n - 1, n) + Y(n, n)) return false;
  return true;
}

GTPattern psi(const TweakedPattern& t) {
  const int n = t.rank;
  GTPattern p = GTPattern::zero(LieType(Family::D, n));
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j) p.y(i, j) = t.yv(i, j);
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j) p.z(i, j) = t.zv(i, j);
  for (int i = 1; i <= n - 2; ++i)
    p.z(i, n - 1) = std::min(t.up(i), t.dn(i), std::less<Rat>());
  p.z(n - 1, n - 1) = t.up(n - 1);
  return p;
}

TweakedPattern psi_inverse(const Weight& lambda, const GTPattern& p) {
  check_weight_d(lambda);
  if (!gt_membership(lambda, p))
    throw std::invalid_argument("psi_inverse needs a pattern inside the polytope");
  const int n = lambda.type.rank;
  TweakedPattern t = TweakedPattern::zero(n);
  auto Y = [&](int i, int j) -> const Rat& {
    return i == 1 ? lambda.eps[j - 1] : p.y(i, j);
  };
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j) t.yv(i, j) = p.y(i, j);
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j) t.zv(i, j) = p.z(i, j);
  for (int i = 1; i <= n - 2; ++i) {
    Rat m = std::min(Y(i, n - 1), Y(i + 1, n - 1), std::less<Rat>());
    t.up(i) = p.z(i, n - 1) + Y(i, n - 1) - m;
    t.dn(i) = p.z(i, n - 1) + Y(i + 1, n - 1) - m;
  }
  t.up(n - 1) = p.z(n - 1, n - 1);
  return t;
}

GTPattern phi(const Weight& lambda, const StringPointD& a) {
  return psi(phi_tilde(lambda, a));
}

int TweakedDiagram::node_index(const std::string& name) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("no diagram node named " + name);
}

bool TweakedDiagram::has_anomaly() const {
  for (ComponentTag t : tags)
    if (t == ComponentTag::Anomaly) return true;
  // anomalies may sit in marked components; detect from the fired quads
  for (auto [i, kind] : white_quads)
    if (kind == 'd')
      for (auto [i2, kind2] : white_quads)
        if (kind2 == 'u' && i2 == i + 1) return true;
  return false;
}

bool TweakedDiagram::has_double_impurity() const {
  for (ComponentTag t : tags)
    if (t == ComponentTag::DoubleImpurity) return true;
  return false;
}

TweakedDiagram tweaked_diagram(const Weight& lambda, const TweakedPattern& t) {
  check_weight_d(lambda);
  if (!tweaked_membership(lambda, t))
    throw std::invalid_argument("pattern is not in the tweaked polytope");
  const int n = lambda.type.rank;
  const MarkedPoset poset = tweaked_poset(lambda);

  TweakedDiagram d;
  d.rank = n;
  d.nodes = poset.elements;
  const int N = static_cast<int>(d.nodes.size());
  d.value.assign(N, Rat(0));
  {
    const auto unmarked = poset.unmarked();
    const auto flat = t.flat();
    for (size_t k = 0; k < unmarked.size(); ++k) d.value[unmarked[k]] = flat[k];
    for (size_t k = 0; k < poset.marked.size(); ++k)
      d.value[poset.marked[k]] = poset.marking[k];
  }
  d.white.assign(N, 0);

  auto idx = [&](const std::string& s) { return poset.index_of(s); };
  auto xi = [&](int i, int j) {
    return idx("xi_" + std::to_string(i) + "_" + std::to_string(j));
  };
  auto zup_node = [&](int i) {
    return i == n - 1 ? idx("zeta_" + std::to_string(n - 1) + "_" + std::to_string(n - 1))
                      : idx("zup_" + std::to_string(i));
  };
  auto zdn_node = [&](int i) { return idx("zdown_" + std::to_string(i)); };

  // black doubles: covers whose endpoint values agree
  for (auto [lo, hi] : poset.covers)
    if (d.value[lo] == d.value[hi]) d.black_doubles.emplace_back(lo, hi);

  auto black = [&](int a, int b) { return d.value[a] == d.value[b]; };  // along covers

  // red arrow triples at tight three-term bounds
  struct Triple {
    int p, q, r, s;
    int i;
    char kind;
  };
  std::vector<Triple> triples;
  auto Yv = [&](int i, int j) -> const Rat& {
    return i == 1 ? lambda.eps[j - 1] : t.yv(i, j);
  };
  for (int i = 1; i <= n - 1; ++i) {
    const bool tight = t.up(i) == Yv(i, n - 1) + Yv(i, n) + Yv(i + 1, n);
    if (!tight) continue;
    triples.push_back({xi(i, n - 1), zup_node(i), xi(i, n), xi(i + 1, n), i, 'u'});
    if (i <= n - 2)
      triples.push_back({xi(i + 1, n - 1), zdn_node(i), xi(i, n), xi(i + 1, n), i, 'd'});
  }

  for (const Triple& tr : triples) {
    if (black(tr.p, tr.q) && black(tr.q, tr.r) && black(tr.q, tr.s)) {
      // white rule: all four values coincide, hence vanish
      for (int v : {tr.p, tr.q, tr.r, tr.s}) d.white[v] = 1;
      d.white_quads.emplace_back(tr.i, tr.kind);
    } else if (black(tr.p, tr.q)) {
      d.red_doubles.emplace_back(tr.r, tr.s);
    } else if (black(tr.q, tr.r)) {
      d.red_doubles.emplace_back(tr.p, tr.s);
    } else if (black(tr.q, tr.s)) {
      d.red_doubles.emplace_back(tr.p, tr.r);
    } else {
      d.red_singles.emplace_back(tr.p, tr.q);
      d.red_singles.emplace_back(tr.q, tr.r);
      d.red_singles.emplace_back(tr.q, tr.s);
    }
  }

  // vertical pairs: both halves of a split cell tied to the same column-n node
  for (int i = 1; i <= n - 2; ++i) {
    bool same_upper = t.up(i) == Yv(i, n) && t.dn(i) == Yv(i, n);
    bool same_lower = t.up(i) == Yv(i + 1, n) && t.dn(i) == Yv(i + 1, n);
    if (same_upper || same_lower) d.black_doubles.emplace_back(xi(i, n - 1), xi(i + 1, n - 1));
  }

  auto dedupe = [](std::vector<std::pair<int, int>>& pairs) {
    for (auto& pr : pairs)
      if (pr.first > pr.second) std::swap(pr.first, pr.second);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  };
  dedupe(d.black_doubles);
  dedupe(d.red_doubles);

  // semantics checks
  for (int v = 0; v < N; ++v)
    if (d.white[v] && d.value[v] != 0) throw std::logic_error("white node with nonzero value");
  for (auto [a, b] : d.red_doubles)
    if (d.value[a] + d.value[b] != 0)
      throw std::logic_error("red double whose endpoint values do not cancel");
  for (auto [a, b] : d.black_doubles)
    if (d.value[a] != d.value[b]) throw std::logic_error("black double with unequal values");

  // components over black and red doubles
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : d.black_doubles) parent[find(a)] = find(b);
  for (auto [a, b] : d.red_doubles) parent[find(a)] = find(b);
  d.comp.assign(N, -1);
  for (int v = 0; v < N; ++v) {
    int r = find(v);
    if (d.comp[r] < 0) d.comp[r] = d.comp_count++;
    d.comp[v] = d.comp[r];
  }
  d.tags = classify_components(d);
  return d;
}

std::vector<ComponentTag> classify_components(const TweakedDiagram& d) {
  const int n = d.rank;
  std::vector<int> comp_size(d.comp_count, 0);
  for (int c : d.comp) ++comp_size[c];
  std::vector<ComponentTag> tags(d.comp_count, ComponentTag::None);

  auto find_node = [&](const std::string& s) { return d.node_index(s); };
  std::vector<char> red_incident(d.nodes.size(), 0);
  for (auto [a, b] : d.red_singles) {
    red_incident[a] = 1;
    red_incident[b] = 1;
  }

  // marked
  for (int j = 1; j <= n; ++j)
    tags[d.comp[find_node("xi_1_" + std::to_string(j))]] = ComponentTag::Marked;

  // anomalies: a lower white quadruple at i glued to an upper one at i+1
  for (auto [i, kind] : d.white_quads) {
    if (kind != 'd') continue;
    for (auto [i2, kind2] : d.white_quads)
      if (kind2 == 'u' && i2 == i + 1) {
        int c = d.comp[find_node("zdown_" + std::to_string(i))];
        if (tags[c] == ComponentTag::None) tags[c] = ComponentTag::Anomaly;
      }
  }

  // impurities and trivialities at the split cells
  for (int i = 1; i <= n - 2; ++i) {
    int u = find_node("zup_" + std::to_string(i));
    int v = find_node("zdown_" + std::to_string(i));
    bool u_alone = comp_size[d.comp[u]] == 1;
    bool v_alone = comp_size[d.comp[v]] == 1;
    if (u_alone && v_alone) {
      ComponentTag tag = (red_incident[u] && red_incident[v]) ? ComponentTag::DoubleImpurity
                                                              : ComponentTag::Triviality;
      tags[d.comp[u]] = tag;
      tags[d.comp[v]] = tag;
    } else if (u_alone) {
      tags[d.comp[u]] = ComponentTag::SingleImpurity;
    } else if (v_alone) {
      tags[d.comp[v]] = ComponentTag::SingleImpurity;
    }
  }
  return tags;
}

bool is_vertex_tweaked(const Weight& lambda, const TweakedPattern& t) {
  const TweakedDiagram d = tweaked_diagram(lambda, t);
  for (ComponentTag tag : d.tags)
    if (tag == ComponentTag::None || tag == ComponentTag::Triviality) return false;
  return true;
}

bool vertex_is_lattice(const Weight& lambda, const TweakedPattern& t) {
  if (!is_vertex_tweaked(lambda, t))
    throw std::invalid_argument("vertex_is_lattice needs a vertex");
  bool all_int = true;
  for (const Rat& v : lambda.eps) all_int = all_int && is_integer(v);
  if (all_int) return true;
  for (const Rat& v : lambda.eps)
    if (!is_half_integer(v))
      throw std::invalid_argument("weight is neither integral nor half-integral");
  return !tweaked_diagram(lambda, t).has_anomaly();
}

TweakedPattern d_witness(const Weight& lambda) {
  check_weight_d(lambda);
  const int n = lambda.type.rank;
  if (n < 4) throw std::invalid_argument("d_witness needs rank >= 4");
  if (!is_dominant(lambda)) throw std::invalid_argument("d_witness needs a dominant weight");
  auto lam = [&](int m) { return lambda.eps[m - 1]; };
  // shift-left values saturating at lambda_{n-1}, dropping to zero past the
  // n-th diagonal
  auto yval = [&](int i, int j) -> Rat {
    if (j == n) return i == 1 ? lam(n) : Rat(0);
    int s = i + j - 1;
    if (s > n) return Rat(0);
    return lam(std::min(s, n - 1));
  };
  TweakedPattern t = TweakedPattern::zero(n);
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j) t.yv(i, j) = yval(i, j);
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j) {
      int s = i + j;
      t.zv(i, j) = s > n ? Rat(0) : lam(std::min(s, n - 1));
    }
  t.up(1) = std::max(lam(n), Rat(0), std::less<Rat>());
  t.dn(1) = t.up(1);
  for (int i = 2; i <= n - 2; ++i) {
    t.up(i) = yval(i, n - 1);
    t.dn(i) = yval(i + 1, n - 1);
  }
  t.up(n - 1) = yval(n - 1, n - 1);
  if (!tweaked_membership(lambda, t))
    throw std::logic_error("witness pattern left the polytope");
  return t;
}

std::vector<TweakedPattern> enumerate_tweaked_lattice_points(const Weight& lambda) {
  check_weight_d(lambda);
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument("enumeration needs a dominant integral weight");
  const int n = lambda.type.rank;
  bool all_int = true;
  for (const Rat& v : lambda.eps) all_int = all_int && is_integer(v);
  const Rat offset = all_int ? Rat(0) : rat(1, 2);
  Rat big(0);
  for (const Rat& v : lambda.eps) big = std::max(big, Rat(abs(v)), std::less<Rat>());

  TweakedPattern work = TweakedPattern::zero(n);
  auto Y = [&](int i, int j) -> const Rat& {
    return i == 1 ? lambda.eps[j - 1] : work.yv(i, j);
  };

  std::vector<TweakedPattern> out;
  // fill order: per block i, the ordinary z-row and z^up, then y-row i+1,
  // then z^dn is forced by the subspace equation
  struct Slot {
    char kind;  // 'z', 'u', 'y', 'd', 'b' (bottom cell), 'Y' (y_{n,n})
    int i, j;
  };
  std::vector<Slot> slots;
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i; j <= n - 2; ++j) slots.push_back({'z', i, j});
    slots.push_back({'u', i, 0});
    for (int j = i + 1; j <= n; ++j) slots.push_back({'y', i + 1, j});
    slots.push_back({'d', i, 0});
  }
  slots.push_back({'b', n - 1, 0});
  slots.push_back({'Y', n, n});

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == slots.size()) {
      if (tweaked_membership(lambda, work)) out.push_back(work);
      return;
    }
    const Slot& s = slots[k];
    if (s.kind == 'd') {
      // forced by the subspace equation; check partial feasibility
      Rat v = work.up(s.i) - Y(s.i, n - 1) + Y(s.i + 1, n - 1);
      if (v > Y(s.i + 1, n - 1)) return;
      if (v < Y(s.i, n) || v < Y(s.i + 1, n)) return;
      if (work.up(s.i) > Y(s.i, n - 1) + Y(s.i, n) + Y(s.i + 1, n)) return;
      if (work.up(s.i) < Y(s.i + 1, n)) return;
      work.dn(s.i) = v;
      rec(k + 1);
      return;
    }
    Rat lo = -big, hi = big;
    switch (s.kind) {
      case 'z':
        hi = Y(s.i, s.j);
        lo = Y(s.i, s.j + 1);
        break;
      case 'u':
        hi = Y(s.i, n - 1);
        lo = Y(s.i, n);
        break;
      case 'y':
        if (s.j == n) {
          hi = work.up(s.i - 1);
        } else if (s.j == n - 1) {
          if (s.j - 1 >= s.i - 1) hi = work.zv(s.i - 1, s.j - 1);
        } else {
          hi = work.zv(s.i - 1, s.j - 1);
          lo = work.zv(s.i - 1, s.j);
        }
        break;
      case 'b':
        hi = Y(n - 1, n - 1);
        lo = Y(n - 1, n);
        break;
      case 'Y':
        hi = work.up(n - 1);
        // three-term bound rearranged as a lower bound
        lo = work.up(n - 1) - Y(n - 1, n - 1) - Y(n - 1, n);
        break;
    }
    if (lo > hi) return;
    Int klo = ceil_rat(lo - offset);
    Int khi = floor_rat(hi - offset);
    for (Int kk = klo; kk <= khi; ++kk) {
      Rat v = offset + Rat(kk);
      switch (s.kind) {
        case 'z': work.zv(s.i, s.j) = v; break;
        case 'u': work.up(s.i) = v; break;
        case 'y': work.yv(s.i, s.j) = v; break;
        case 'b': work.up(n - 1) = v; break;
        case 'Y': work.yv(n, n) = v; break;
      }
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

const char* component_tag_name(ComponentTag t) {
  switch (t) {
    case ComponentTag::Marked: return "marked";
    case ComponentTag::Anomaly: return "anomaly";
    case ComponentTag::DoubleImpurity: return "double-impurity";
    case ComponentTag::SingleImpurity: return "single-impurity";
    case ComponentTag::Triviality: return "triviality";
    case ComponentTag::None: return "none";
  }
  return "?";
}

}  // namespace gtpoly
