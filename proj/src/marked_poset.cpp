#include "gtpoly/marked_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace gtpoly {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> components(int n, const std::vector<std::pair<int, int>>& covers,
                            const std::vector<char>& dbl, int* count_out) {
  UnionFind uf(n);
  for (size_t c = 0; c < covers.size(); ++c)
    if (dbl[c]) uf.unite(covers[c].first, covers[c].second);
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (comp[r] < 0) comp[r] = count++;
    comp[v] = comp[r];
  }
  if (count_out) *count_out = count;
  return comp;
}

}  // namespace

int MarkedPoset::index_of(const std::string& name) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("no poset element named " + name);
}

bool MarkedPoset::is_marked(int e) const {
  return std::find(marked.begin(), marked.end(), e) != marked.end();
}

const Rat* MarkedPoset::mark_value(int e) const {
  for (size_t k = 0; k < marked.size(); ++k)
    if (marked[k] == e) return &marking[k];
  return nullptr;
}

std::vector<int> MarkedPoset::unmarked() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(elements.size()); ++e)
    if (!is_marked(e)) out.push_back(e);
  return out;
}

void MarkedPoset::validate() const {
  const int n = static_cast<int>(elements.size());
  if (marked.size() != marking.size())
    throw std::invalid_argument("marked/marking size mismatch");
  for (auto [lo, hi] : covers)
    if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
      throw std::invalid_argument("cover index out of range");
  // acyclicity by Kahn's algorithm
  std::vector<int> indeg(n, 0);
  for (auto [lo, hi] : covers) ++indeg[hi];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (auto [lo, hi] : covers)
      if (lo == v && --indeg[hi] == 0) queue.push_back(hi);
  }
  if (seen != n) throw std::invalid_argument("covers contain a cycle");
  // order-compatible marking along covers (transitively sufficient)
  for (auto [lo, hi] : covers) {
    const Rat* a = mark_value(lo);
    const Rat* b = mark_value(hi);
    if (a && b && *a > *b) throw std::invalid_argument("marking is not order-compatible");
  }
  if (!pseudo) {
    std::vector<char> has_lower(n, 0), has_upper(n, 0);
    for (auto [lo, hi] : covers) {
      has_upper[lo] = 1;
      has_lower[hi] = 1;
    }
    for (int v = 0; v < n; ++v)
      if ((!has_lower[v] || !has_upper[v]) && !is_marked(v))
        throw std::invalid_argument("extremal element " + elements[v] + " is unmarked");
  }
}

namespace {

// x extended to every element: unmarked coordinates from the point, marked
// from the marking.
std::vector<Rat> extend(const MarkedPoset& poset, const PosetPoint& x) {
  const auto unmarked = poset.unmarked();
  if (x.size() != unmarked.size())
    throw std::invalid_argument("point has wrong number of coordinates for this poset");
  std::vector<Rat> full(poset.elements.size(), Rat(0));
  for (size_t k = 0; k < unmarked.size(); ++k) full[unmarked[k]] = x[k];
  for (size_t k = 0; k < poset.marked.size(); ++k) full[poset.marked[k]] = poset.marking[k];
  return full;
}

}  // namespace

bool membership(const MarkedPoset& poset, const PosetPoint& x) {
  const auto full = extend(poset, x);
  for (auto [lo, hi] : poset.covers)
    if (full[lo] > full[hi]) return false;
  return true;
}

IdentityDiagram identity_diagram(const MarkedPoset& poset, const PosetPoint& x) {
  if (!membership(poset, x))
    throw std::invalid_argument("point is not in the marked order polytope");
  const auto full = extend(poset, x);
  IdentityDiagram d;
  d.dbl.resize(poset.covers.size(), 0);
  for (size_t c = 0; c < poset.covers.size(); ++c)
    d.dbl[c] = full[poset.covers[c].first] == full[poset.covers[c].second];
  d.comp = components(static_cast<int>(poset.elements.size()), poset.covers, d.dbl,
                      &d.comp_count);
  d.comp_marked.assign(d.comp_count, 0);
  for (int m : poset.marked) d.comp_marked[d.comp[m]] = 1;
  return d;
}

bool is_vertex(const MarkedPoset& poset, const PosetPoint& x) {
  const IdentityDiagram d = identity_diagram(poset, x);
  for (char m : d.comp_marked)
    if (!m) return false;
  return true;
}

namespace {

struct Arrows {
  // per node: covers where the node is the lower / upper endpoint
  std::vector<std::vector<int>> as_lo, as_hi;
  explicit Arrows(const MarkedPoset& p) {
    as_lo.resize(p.elements.size());
    as_hi.resize(p.elements.size());
    for (size_t c = 0; c < p.covers.size(); ++c) {
      as_lo[p.covers[c].first].push_back(static_cast<int>(c));
      as_hi[p.covers[c].second].push_back(static_cast<int>(c));
    }
  }
};

// Arrow u -> v exists iff u is the lower end of the cover, or the upper end of
// a doubled cover.
void out_arrows(const MarkedPoset& p, const Arrows& ar, const std::vector<char>& dbl, int u,
                std::vector<std::pair<int, int>>& out) {  // (target, cover)
  out.clear();
  for (int c : ar.as_lo[u]) out.emplace_back(p.covers[c].second, c);
  for (int c : ar.as_hi[u])
    if (dbl[c]) out.emplace_back(p.covers[c].first, c);
}

void in_arrows(const MarkedPoset& p, const Arrows& ar, const std::vector<char>& dbl, int u,
               std::vector<std::pair<int, int>>& out) {  // (source, cover)
  out.clear();
  for (int c : ar.as_hi[u]) out.emplace_back(p.covers[c].first, c);
  for (int c : ar.as_lo[u])
    if (dbl[c]) out.emplace_back(p.covers[c].second, c);
}

}  // namespace

CompletionGraph complete(const MarkedPoset& poset, CompletionGraph g, ScanOrder order) {
  if (g.dbl.size() != poset.covers.size())
    throw std::invalid_argument("completion graph does not match the poset covers");
  const int n = static_cast<int>(poset.elements.size());
  const Arrows ar(poset);

  std::vector<int> node_order(n);
  std::iota(node_order.begin(), node_order.end(), 0);
  if (order == ScanOrder::Reverse) std::reverse(node_order.begin(), node_order.end());

  std::map<Rat, std::vector<int>> marks_by_value;
  for (size_t k = 0; k < poset.marked.size(); ++k)
    marks_by_value[poset.marking[k]].push_back(poset.marked[k]);

  std::vector<std::pair<int, int>> ins, outs;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> comp = components(n, poset.covers, g.dbl, nullptr);

    // squeeze rule: covers and length-two paths inside one component
    for (size_t c = 0; c < poset.covers.size(); ++c)
      if (!g.dbl[c] && comp[poset.covers[c].first] == comp[poset.covers[c].second]) {
        g.dbl[c] = 1;
        changed = true;
      }
    for (int s : node_order) {
      in_arrows(poset, ar, g.dbl, s, ins);
      out_arrows(poset, ar, g.dbl, s, outs);
      for (auto [p, cin] : ins)
        for (auto [q, cout] : outs) {
          if (p == q || comp[p] != comp[q]) continue;
          if (!g.dbl[cin]) { g.dbl[cin] = 1; changed = true; }
          if (!g.dbl[cout]) { g.dbl[cout] = 1; changed = true; }
        }
    }

    // marked-chain rule: reverse every arrow on a directed path between
    // equal-valued marked elements
    for (const auto& [value, marks] : marks_by_value) {
      std::vector<char> fwd(n, 0), bwd(n, 0);
      std::vector<int> stack;
      for (int m : marks) { fwd[m] = 1; stack.push_back(m); }
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out_arrows(poset, ar, g.dbl, u, outs);
        for (auto [v, c] : outs)
          if (!fwd[v]) { fwd[v] = 1; stack.push_back(v); }
      }
      for (int m : marks) { bwd[m] = 1; stack.push_back(m); }
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        in_arrows(poset, ar, g.dbl, u, ins);
        for (auto [v, c] : ins)
          if (!bwd[v]) { bwd[v] = 1; stack.push_back(v); }
      }
      for (size_t c = 0; c < poset.covers.size(); ++c) {
        if (g.dbl[c]) continue;
        auto [lo, hi] = poset.covers[c];
        if (fwd[lo] && bwd[hi]) { g.dbl[c] = 1; changed = true; }
      }
    }
  }
  return g;
}

bool completion_consistent(const MarkedPoset& poset, const CompletionGraph& g) {
  int count = 0;
  std::vector<int> comp =
      components(static_cast<int>(poset.elements.size()), poset.covers, g.dbl, &count);
  std::vector<const Rat*> value(count, nullptr);
  for (size_t k = 0; k < poset.marked.size(); ++k) {
    const Rat* v = value[comp[poset.marked[k]]];
    if (v && *v != poset.marking[k]) return false;
    value[comp[poset.marked[k]]] = &poset.marking[k];
  }
  return true;
}

std::vector<PosetPoint> enumerate_vertices(const MarkedPoset& poset) {
  poset.validate();
  if (poset.pseudo)
    throw std::invalid_argument(
        "vertex enumeration needs a true marked poset (pseudo-markings may be unbounded)");
  const int n = static_cast<int>(poset.elements.size());
  const auto unmarked = poset.unmarked();

  std::set<PosetPoint, RatVecLess> found;
  std::unordered_set<std::string> visited;
  auto key = [&](const CompletionGraph& g) {
    return std::string(g.dbl.begin(), g.dbl.end());
  };

  CompletionGraph init{std::vector<char>(poset.covers.size(), 0)};
  init = complete(poset, init);
  if (!completion_consistent(poset, init))
    throw std::logic_error("initial completion is inconsistent");

  std::vector<CompletionGraph> stack{init};
  visited.insert(key(init));
  while (!stack.empty()) {
    CompletionGraph g = std::move(stack.back());
    stack.pop_back();

    int comp_count = 0;
    std::vector<int> comp = components(n, poset.covers, g.dbl, &comp_count);
    std::vector<const Rat*> comp_value(comp_count, nullptr);
    for (size_t k = 0; k < poset.marked.size(); ++k)
      comp_value[comp[poset.marked[k]]] = &poset.marking[k];

    bool terminal = true;
    for (size_t c = 0; c < poset.covers.size(); ++c) {
      if (g.dbl[c]) continue;
      auto [lo, hi] = poset.covers[c];
      const Rat* a = comp_value[comp[lo]];
      const Rat* b = comp_value[comp[hi]];
      if (a && b && *a != *b) continue;  // illegal merge
      terminal = false;
      CompletionGraph next = g;
      next.dbl[c] = 1;
      next = complete(poset, next);
      if (!completion_consistent(poset, next)) continue;
      auto k = key(next);
      if (visited.insert(std::move(k)).second) stack.push_back(std::move(next));
    }
    if (terminal) {
      PosetPoint x;
      x.reserve(unmarked.size());
      bool ok = true;
      for (int e : unmarked) {
        const Rat* v = comp_value[comp[e]];
        if (!v) { ok = false; break; }
        x.push_back(*v);
      }
      if (ok && membership(poset, x)) found.insert(std::move(x));
    }
  }
  return std::vector<PosetPoint>(found.begin(), found.end());
}

}  // namespace gtpoly
