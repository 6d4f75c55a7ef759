#include "gtpoly/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gtpoly {

json rat_to_json(const Rat& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw std::invalid_argument("rational too large for JSON transport");
  return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]");
  return rat(j[0].get<long>(), j[1].get<long>());
}

json to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(rat_to_json(q));
  return out;
}

std::vector<Rat> rat_vec_from_json(const json& j) {
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

json to_json(const Weight& w) {
  return json{{"family", std::string(1, family_char(w.type.family))},
              {"rank", w.type.rank},
              {"eps", to_json(w.eps)}};
}

Weight weight_from_json(const json& j) {
  LieType t(family_from_char(j.at("family").get<std::string>().at(0)), j.at("rank").get<int>());
  return Weight(t, rat_vec_from_json(j.at("eps")));
}

namespace {

json pattern_rows(const Weight& lambda, const GTPattern& p) {
  const int n = lambda.type.rank;
  json rows = json::array();
  auto push_row = [&](char kind, int i, int jlo, int jhi) {
    json row = json::array();
    for (int j = jlo; j <= jhi; ++j)
      row.push_back(rat_to_json(kind == 'y' ? p.y(i, j) : p.z(i, j)));
    rows.push_back(std::move(row));
  };
  switch (lambda.type.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) push_row('y', i, i, n);
      break;
    case Family::B:
    case Family::C:
      push_row('z', 1, 1, n);
      for (int i = 2; i <= n; ++i) {
        push_row('y', i, i, n);
        push_row('z', i, i, n);
      }
      break;
    case Family::D:
      push_row('z', 1, 1, n - 1);
      for (int i = 2; i <= n; ++i) {
        push_row('y', i, i, n);
        if (i <= n - 1) push_row('z', i, i, n - 1);
      }
      break;
  }
  return rows;
}

}  // namespace

json to_json(const Weight& lambda, const GTPattern& p) {
  return json{{"family", std::string(1, family_char(lambda.type.family))},
              {"rank", lambda.type.rank},
              {"lambda", to_json(lambda.eps)},
              {"rows", pattern_rows(lambda, p)}};
}

GTPattern gt_pattern_from_json(const json& j) {
  LieType t(family_from_char(j.at("family").get<std::string>().at(0)), j.at("rank").get<int>());
  std::vector<Rat> cells;
  for (const auto& row : j.at("rows"))
    for (const auto& e : row) cells.push_back(rat_from_json(e));
  return GTPattern(t, std::move(cells));
}

json to_json(const Weight& lambda, const TweakedPattern& t) {
  const int n = t.rank;
  json y = json::array(), z = json::array();
  for (int i = 2; i <= n; ++i) {
    json row = json::array();
    for (int j = i; j <= n; ++j) row.push_back(rat_to_json(t.yv(i, j)));
    y.push_back(std::move(row));
  }
  for (int i = 1; i <= n - 2; ++i) {
    json row = json::array();
    for (int j = i; j <= n - 2; ++j) row.push_back(rat_to_json(t.zv(i, j)));
    z.push_back(std::move(row));
  }
  json zup = json::array(), zdown = json::array();
  for (int i = 1; i <= n - 1; ++i) zup.push_back(rat_to_json(t.up(i)));
  for (int i = 1; i <= n - 2; ++i) zdown.push_back(rat_to_json(t.dn(i)));
  return json{{"family", "D"},         {"rank", n},   {"lambda", to_json(lambda.eps)},
              {"y", std::move(y)},     {"z", std::move(z)},
              {"zup", std::move(zup)}, {"zdown", std::move(zdown)}};
}

TweakedPattern tweaked_pattern_from_json(const json& j) {
  const int n = j.at("rank").get<int>();
  TweakedPattern t = TweakedPattern::zero(n);
  {
    int i = 2;
    for (const auto& row : j.at("y")) {
      int jj = i;
      for (const auto& e : row) t.yv(i, jj++) = rat_from_json(e);
      ++i;
    }
  }
  {
    int i = 1;
    for (const auto& row : j.at("z")) {
      int jj = i;
      for (const auto& e : row) t.zv(i, jj++) = rat_from_json(e);
      ++i;
    }
  }
  {
    int i = 1;
    for (const auto& e : j.at("zup")) t.up(i++) = rat_from_json(e);
  }
  {
    int i = 1;
    for (const auto& e : j.at("zdown")) t.dn(i++) = rat_from_json(e);
  }
  return t;
}

json to_json(const StringPointD& a) { return to_json(a.coords); }

json to_json(const MarkedPoset& p) {
  json covers = json::array();
  for (auto [lo, hi] : p.covers) covers.push_back(json::array({lo, hi}));
  json marked = json::array();
  for (int m : p.marked) marked.push_back(p.elements[m]);
  json marking = json::array();
  for (const Rat& v : p.marking) marking.push_back(rat_to_json(v));
  return json{{"elements", p.elements},
              {"covers", covers},
              {"marked", marked},
              {"marking", marking},
              {"pseudo", p.pseudo}};
}

MarkedPoset poset_from_json(const json& j) {
  MarkedPoset p;
  for (const auto& e : j.at("elements")) p.elements.push_back(e.get<std::string>());
  for (const auto& c : j.at("covers")) p.covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  for (const auto& m : j.at("marked")) p.marked.push_back(p.index_of(m.get<std::string>()));
  for (const auto& v : j.at("marking")) p.marking.push_back(rat_from_json(v));
  p.pseudo = j.value("pseudo", false);
  return p;
}

json to_json(const HPolytope& h) {
  auto rows = [&](const std::vector<LinRow>& rs) {
    json out = json::array();
    for (const auto& r : rs) {
      json row = json::array();
      for (const Rat& c : r.a) row.push_back(rat_to_json(c));
      row.push_back(rat_to_json(r.b));
      out.push_back(std::move(row));
    }
    return out;
  };
  return json{{"dim", h.dim}, {"ineqs", rows(h.ineqs)}, {"eqs", rows(h.eqs)},
              {"vars", h.var_names}};
}

HPolytope hpolytope_from_json(const json& j) {
  HPolytope h;
  h.dim = j.at("dim").get<int>();
  auto rows = [&](const json& src, std::vector<LinRow>& dst) {
    for (const auto& row : src) {
      LinRow r;
      for (size_t k = 0; k + 1 < row.size(); ++k) r.a.push_back(rat_from_json(row[k]));
      r.b = rat_from_json(row.back());
      if (static_cast<int>(r.a.size()) != h.dim)
        throw std::invalid_argument("row length does not match dim");
      dst.push_back(std::move(r));
    }
  };
  rows(j.at("ineqs"), h.ineqs);
  rows(j.at("eqs"), h.eqs);
  if (j.contains("vars"))
    for (const auto& v : j.at("vars")) h.var_names.push_back(v.get<std::string>());
  return h;
}

json to_json(const VertexSet& v) {
  json out = json::array();
  for (const auto& p : v.points) out.push_back(to_json(p));
  return out;
}

// ---------------------------------------------------------------------------
// pretty printing

namespace {

std::string render_triangle(const std::vector<std::vector<std::string>>& rows,
                            const std::vector<int>& indent) {
  size_t width = 1;
  for (const auto& r : rows)
    for (const auto& s : r) width = std::max(width, s.size());
  width += 1;
  std::ostringstream os;
  for (size_t r = 0; r < rows.size(); ++r) {
    std::string line(indent[r] * (width + 1) / 2, ' ');
    for (const auto& s : rows[r]) {
      std::string cell = s;
      cell.resize(width, ' ');
      line += cell + " ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

}  // namespace

std::string pretty_pattern(const Weight& lambda, const GTPattern& p) {
  const int n = lambda.type.rank;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> indent;
  auto top = [&]() {
    std::vector<std::string> r;
    for (const Rat& v : lambda.eps) r.push_back(rat_str(v));
    if (lambda.type.family != Family::D) r.push_back("0");
    rows.push_back(r);
    indent.push_back(0);
  };
  top();
  auto push = [&](char kind, int i, int jlo, int jhi, int ind) {
    std::vector<std::string> r;
    for (int j = jlo; j <= jhi; ++j)
      r.push_back(rat_str(kind == 'y' ? p.y(i, j) : p.z(i, j)));
    rows.push_back(r);
    indent.push_back(ind);
  };
  switch (lambda.type.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) push('y', i, i, n, i);
      break;
    case Family::B:
    case Family::C:
      push('z', 1, 1, n, 1);
      for (int i = 2; i <= n; ++i) {
        push('y', i, i, n, 2 * i - 2);
        push('z', i, i, n, 2 * i - 1);
      }
      break;
    case Family::D:
      push('z', 1, 1, n - 1, 1);
      for (int i = 2; i <= n; ++i) {
        push('y', i, i, n, 2 * i - 2);
        if (i <= n - 1) push('z', i, i, n - 1, 2 * i - 1);
      }
      break;
  }
  return render_triangle(rows, indent);
}

std::string pretty_tweaked(const Weight& lambda, const TweakedPattern& t) {
  const int n = t.rank;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> indent;
  {
    std::vector<std::string> r;
    for (const Rat& v : lambda.eps) r.push_back(rat_str(v));
    rows.push_back(r);
    indent.push_back(0);
  }
  for (int i = 1; i <= n - 1; ++i) {
    if (i >= 2) {
      std::vector<std::string> r;
      for (int j = i; j <= n; ++j) r.push_back(rat_str(t.yv(i, j)));
      rows.push_back(r);
      indent.push_back(2 * i - 2);
    }
    std::vector<std::string> r;
    for (int j = i; j <= n - 2; ++j) r.push_back(rat_str(t.zv(i, j)));
    if (i <= n - 2)
      r.push_back(rat_str(t.up(i)) + "|" + rat_str(t.dn(i)));
    else
      r.push_back(rat_str(t.up(n - 1)));
    rows.push_back(r);
    indent.push_back(2 * i - 1);
  }
  rows.push_back({rat_str(t.yv(n, n))});
  indent.push_back(2 * n - 2);
  return render_triangle(rows, indent);
}

// ---------------------------------------------------------------------------
// DOT export

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string dot_identity_diagram(const MarkedPoset& poset, const IdentityDiagram& d) {
  std::ostringstream os;
  os << "digraph identity_diagram {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle, style=filled, fillcolor=black, width=0.15, label=\"\"];\n";
  for (size_t e = 0; e < poset.elements.size(); ++e) {
    const std::string& name = poset.elements[e];
    os << "  \"" << dot_escape(name) << "\"";
    const Rat* mv = poset.mark_value(static_cast<int>(e));
    if (mv) {
      if (name.rfind("lam_", 0) == 0)
        os << " [shape=diamond, fillcolor=white, label=\"" << rat_str(*mv) << "\"]";
      else
        os << " [shape=circle, fillcolor=white, label=\"" << rat_str(*mv) << "\"]";
    }
    os << ";\n";
  }
  for (size_t c = 0; c < poset.covers.size(); ++c) {
    auto [lo, hi] = poset.covers[c];
    os << "  \"" << dot_escape(poset.elements[lo]) << "\" -> \""
       << dot_escape(poset.elements[hi]) << "\"";
    if (d.dbl[c]) os << " [dir=none, penwidth=2]";
    else os << " [color=gray]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dot_tweaked_diagram(const TweakedDiagram& d) {
  std::ostringstream os;
  os << "digraph tweaked_diagram {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle, style=filled, fillcolor=black, width=0.15, label=\"\"];\n";
  for (size_t v = 0; v < d.nodes.size(); ++v) {
    os << "  \"" << dot_escape(d.nodes[v]) << "\"";
    bool marked = d.nodes[v].rfind("xi_1_", 0) == 0;
    if (marked)
      os << " [shape=diamond, fillcolor=white, label=\"" << rat_str(d.value[v]) << "\"]";
    else if (d.white[v])
      os << " [fillcolor=white]";
    os << ";\n";
  }
  for (auto [a, b] : d.black_doubles)
    os << "  \"" << dot_escape(d.nodes[a]) << "\" -> \"" << dot_escape(d.nodes[b])
       << "\" [dir=none, penwidth=2];\n";
  for (auto [a, b] : d.red_doubles)
    os << "  \"" << dot_escape(d.nodes[a]) << "\" -> \"" << dot_escape(d.nodes[b])
       << "\" [dir=none, color=\"red:red\", penwidth=1.5];\n";
  for (auto [a, b] : d.red_singles)
    os << "  \"" << dot_escape(d.nodes[a]) << "\" -> \"" << dot_escape(d.nodes[b])
       << "\" [color=red, style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gtpoly
