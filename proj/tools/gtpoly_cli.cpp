// Command-line front end for the pattern/string polytope library: builds
// inequality systems, enumerates and classifies vertices, counts lattice
// points, runs the lattice-criterion sweep, and exports diagrams.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "gtpoly/gt.hpp"
#include "gtpoly/marked_poset.hpp"
#include "gtpoly/polyoracle.hpp"
#include "gtpoly/rootdata.hpp"
#include "gtpoly/serialize.hpp"
#include "gtpoly/string_d.hpp"
#include "gtpoly/tweaked_d.hpp"

using namespace gtpoly;

namespace {

constexpr long kDefaultCellBudget = 50'000'000;

long cell_budget() {
  const char* env = std::getenv("GTPOLY_CELL_BUDGET");
  if (!env) return kDefaultCellBudget;
  return std::atol(env);
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::string item;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (!item.empty()) out.push_back(parse_rat(item));
      item.clear();
    } else if (!isspace(static_cast<unsigned char>(s[i]))) {
      item += s[i];
    }
  }
  return out;
}

struct WeightArgs {
  std::string family;
  int rank = 0;
  std::string eps, omega;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "Lie family: A, B, C or D")->required();
    cmd->add_option("--rank", rank, "rank n >= 1")->required();
    cmd->add_option("--eps", eps, "weight in the eps basis, e.g. 4,2,0 or 1/2,1/2");
    cmd->add_option("--omega", omega, "weight in fundamental-weight coordinates");
  }

  Weight resolve() const {
    LieType t(family_from_char(family.at(0)), rank);
    const bool has_eps = !eps.empty(), has_omega = !omega.empty();
    if (has_eps == has_omega)
      throw std::invalid_argument("provide exactly one of --eps and --omega");
    if (has_eps) {
      auto v = parse_rat_list(eps);
      if (static_cast<int>(v.size()) != rank)
        throw std::invalid_argument("--eps needs exactly rank entries");
      return Weight(t, v);
    }
    auto v = parse_rat_list(omega);
    if (static_cast<int>(v.size()) != rank)
      throw std::invalid_argument("--omega needs exactly rank entries");
    return omega_to_epsilon(t, v);
  }
};

PolytopeKind default_kind(Family f) {
  switch (f) {
    case Family::A: return PolytopeKind::GtA;
    case Family::B: return PolytopeKind::GtB;
    case Family::C: return PolytopeKind::GtC;
    case Family::D: return PolytopeKind::TweakedD;
  }
  throw std::logic_error("unreachable");
}

PolytopeKind resolve_kind(const std::string& kind, const Weight& lam) {
  if (kind.empty()) return default_kind(lam.type.family);
  return kind_from_string(kind);
}

LatticeSpec resolve_lattice(const std::string& name, const HPolytope& hp) {
  if (name == "integers") return LatticeSpec::integers(hp.dim);
  if (name == "half-shifted") return LatticeSpec::half_shifted(hp.dim);
  if (name == "b-standard" || name == "auto") return LatticeSpec::natural(hp);
  throw std::invalid_argument("unknown lattice: " + name);
}

void check_grid_budget(const HPolytope& hp, const LatticeSpec& spec) {
  VertexSet vs = vertex_enumeration(hp);
  if (!vs.feasible || vs.points.empty()) return;
  long cells = 1;
  const long budget = cell_budget();
  for (int v = 0; v < hp.dim; ++v) {
    Rat lo = vs.points[0][v], hi = vs.points[0][v];
    for (const auto& p : vs.points) {
      lo = std::min(lo, p[v], std::less<Rat>());
      hi = std::max(hi, p[v], std::less<Rat>());
    }
    Rat span = (hi - lo) / spec.cosets[v].second + 1;
    cells *= span.get_num().get_si() / span.get_den().get_si() + 1;
    if (cells > budget)
      throw std::invalid_argument(
          "enumeration grid exceeds GTPOLY_CELL_BUDGET=" + std::to_string(budget) +
          "; raise the budget or shrink the weight");
  }
}

std::string vertices_text(const VertexSet& vs) {
  std::string out;
  for (const auto& p : vs.points) out += vec_str(p) + "\n";
  return out;
}

// observed latticeness of the standard string polytope, routed through the
// realization available for the family
bool observed_lattice(const Weight& lam) {
  switch (lam.type.family) {
    case Family::A:
    case Family::C: {
      auto kind = lam.type.family == Family::A ? PolytopeKind::GtA : PolytopeKind::GtC;
      for (const auto& v : vertex_enumeration(hrep(kind, lam)).points)
        for (const Rat& c : v)
          if (!is_integer(c)) return false;
      return true;
    }
    case Family::B: {
      for (const auto& v : vertex_enumeration(hrep(PolytopeKind::GtB, lam)).points)
        if (!is_standard(lam, GTPattern(lam.type, v))) return false;
      return true;
    }
    case Family::D: {
      for (const auto& v : vertex_enumeration(hrep(PolytopeKind::StringD, lam)).points)
        for (const Rat& c : v)
          if (!is_integer(c)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string/pattern polytope toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  WeightArgs wa;

  auto* cmd_build = app.add_subcommand("build", "emit the inequality system");
  std::string kind_opt;
  cmd_build->add_option("--kind", kind_opt, "gtA gtB gtC gtD tweakedD stringD");
  wa.attach(cmd_build);

  auto* cmd_vertices = app.add_subcommand("vertices", "enumerate the exact vertex set");
  cmd_vertices->add_option("--kind", kind_opt, "polytope kind");
  wa.attach(cmd_vertices);

  auto* cmd_islattice =
      app.add_subcommand("is-lattice", "decide integrality of the standard string polytope");
  wa.attach(cmd_islattice);

  auto* cmd_count = app.add_subcommand("count", "count lattice points");
  std::string lattice_opt = "auto";
  cmd_count->add_option("--kind", kind_opt, "polytope kind");
  cmd_count->add_option("--lattice", lattice_opt, "integers, half-shifted, b-standard or auto");
  wa.attach(cmd_count);

  auto* cmd_dim = app.add_subcommand("dim", "Weyl dimension of the highest weight module");
  wa.attach(cmd_dim);

  auto* cmd_interior = app.add_subcommand("interior", "interior lattice points");
  cmd_interior->add_option("--kind", kind_opt, "polytope kind");
  wa.attach(cmd_interior);

  auto* cmd_reflexive =
      app.add_subcommand("reflexive", "reflexivity after translating the interior point");
  cmd_reflexive->add_option("--kind", kind_opt, "polytope kind");
  wa.attach(cmd_reflexive);

  auto* cmd_map = app.add_subcommand("map", "map string coordinates to patterns (type D)");
  std::string string_opt, to_opt = "tweaked";
  cmd_map->add_option("--string", string_opt, "string coordinates, display order")->required();
  cmd_map->add_option("--to", to_opt, "tweaked (affine map) or gt (min formula)");
  wa.attach(cmd_map);

  auto* cmd_diagram = app.add_subcommand("diagram", "identity/tweaked diagram of a point");
  std::string point_opt;
  cmd_diagram->add_option("--point", point_opt, "coordinates in display order")->required();
  wa.attach(cmd_diagram);

  auto* cmd_sweep = app.add_subcommand("sweep", "lattice criterion sweep over small weights");
  int max_omega = 2;
  std::string sweep_family;
  int sweep_rank = 2;
  cmd_sweep->add_option("--family", sweep_family, "Lie family")->required();
  cmd_sweep->add_option("--rank", sweep_rank, "rank")->required();
  cmd_sweep->add_option("--max-omega", max_omega, "bound on fundamental-weight coefficients");

  auto* cmd_witness = app.add_subcommand("witness", "non-standard vertex witness pattern");
  wa.attach(cmd_witness);

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_build) {
      Weight lam = wa.resolve();
      HPolytope hp = hrep(resolve_kind(kind_opt, lam), lam);
      if (format == "json")
        std::cout << to_json(hp).dump(1) << "\n";
      else
        std::cout << kind_name(resolve_kind(kind_opt, lam)) << ": dim " << hp.dim << ", "
                  << hp.ineqs.size() << " inequalities, " << hp.eqs.size() << " equalities\n";
      return 0;
    }
    if (*cmd_vertices) {
      Weight lam = wa.resolve();
      VertexSet vs = vertex_enumeration(hrep(resolve_kind(kind_opt, lam), lam));
      if (format == "json")
        std::cout << to_json(vs).dump() << "\n";
      else
        std::cout << vertices_text(vs) << vs.points.size() << " vertices\n";
      return 0;
    }
    if (*cmd_islattice) {
      Weight lam = wa.resolve();
      if (!is_dominant_integral(lam))
        throw std::invalid_argument("is-lattice needs a dominant integral weight");
      bool ok = predicted_lattice(lam);
      const int n = lam.type.rank;
      if (ok) {
        std::cout << "lattice polytope\n";
        return 0;
      }
      if (lam.type.family == Family::B) {
        std::cout << "not a lattice polytope: <lambda, alpha_" << n
                  << "^vee> = " << rat_str(pairing(lam, n)) << " is odd; witness pattern:\n"
                  << pretty_pattern(lam, b_witness(lam));
      } else {
        std::cout << "not a lattice polytope: <lambda, alpha_" << n - 1
                  << "^vee> + <lambda, alpha_" << n
                  << "^vee> = " << rat_str(pairing(lam, n - 1) + pairing(lam, n))
                  << " is odd; witness pattern:\n"
                  << pretty_tweaked(lam, d_witness(lam));
      }
      return 2;
    }
    if (*cmd_count) {
      Weight lam = wa.resolve();
      HPolytope hp = hrep(resolve_kind(kind_opt, lam), lam);
      LatticeSpec spec = resolve_lattice(lattice_opt, hp);
      check_grid_budget(hp, spec);
      Int c = count_lattice_points(hp, spec);
      if (format == "json")
        std::cout << json{{"count", c.get_si()}}.dump() << "\n";
      else
        std::cout << c.get_str() << "\n";
      return 0;
    }
    if (*cmd_dim) {
      std::cout << weyl_dim(wa.resolve()).get_str() << "\n";
      return 0;
    }
    if (*cmd_interior) {
      Weight lam = wa.resolve();
      HPolytope hp = hrep(resolve_kind(kind_opt, lam), lam);
      check_grid_budget(hp, LatticeSpec::integers(hp.dim));
      auto pts = enumerate_lattice_points(hp, LatticeSpec::integers(hp.dim), true);
      if (format == "json") {
        json out = json::array();
        for (const auto& p : pts) out.push_back(to_json(p));
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& p : pts) std::cout << vec_str(p) << "\n";
        std::cout << pts.size() << " interior lattice points\n";
      }
      return 0;
    }
    if (*cmd_reflexive) {
      Weight lam = wa.resolve();
      HPolytope hp = hrep(resolve_kind(kind_opt, lam), lam);
      check_grid_budget(hp, LatticeSpec::integers(hp.dim));
      ReflexivityResult r = reflexive_after_translation(hp);
      if (format == "json") {
        json out{{"reflexive", r.reflexive}};
        if (r.interior_point) out["interior_point"] = to_json(*r.interior_point);
        std::cout << out.dump() << "\n";
      } else if (r.reflexive) {
        std::cout << "reflexive after translation by " << vec_str(*r.interior_point) << "\n";
      } else if (r.interior_point) {
        std::cout << "not reflexive (unique interior point " << vec_str(*r.interior_point)
                  << ", dual is not a lattice polytope)\n";
      } else {
        std::cout << "not reflexive (no unique interior lattice point)\n";
      }
      return r.reflexive ? 0 : 2;
    }
    if (*cmd_map) {
      Weight lam = wa.resolve();
      if (lam.type.family != Family::D)
        throw std::invalid_argument("map handles the type D string coordinates");
      StringPointD a(lam.type.rank, parse_rat_list(string_opt));
      std::vector<Rat> lw = epsilon_to_omega(lam);
      if (format != "json")
        std::cout << "lambda eps=" << vec_str(lam.eps) << " omega=" << vec_str(lw) << "\n";
      if (to_opt == "tweaked") {
        TweakedPattern t = phi_tilde(lam, a);
        if (format == "json")
          std::cout << to_json(lam, t).dump() << "\n";
        else
          std::cout << pretty_tweaked(lam, t);
      } else if (to_opt == "gt") {
        GTPattern p = phi(lam, a);
        if (format == "json")
          std::cout << to_json(lam, p).dump() << "\n";
        else
          std::cout << pretty_pattern(lam, p);
      } else {
        throw std::invalid_argument("--to must be tweaked or gt");
      }
      return 0;
    }
    if (*cmd_diagram) {
      Weight lam = wa.resolve();
      auto coords = parse_rat_list(point_opt);
      if (lam.type.family == Family::D) {
        TweakedPattern t = TweakedPattern::from_flat(lam.type.rank, coords);
        TweakedDiagram d = tweaked_diagram(lam, t);
        if (format == "json") {
          json tags = json::array();
          for (ComponentTag tag : d.tags) tags.push_back(component_tag_name(tag));
          std::cout << json{{"components", d.comp_count}, {"tags", tags}}.dump() << "\n";
        } else {
          std::cout << dot_tweaked_diagram(d);
        }
      } else {
        MarkedPoset poset = gt_poset(lam);
        IdentityDiagram d = identity_diagram(poset, coords);
        std::cout << dot_identity_diagram(poset, d);
      }
      return 0;
    }
    if (*cmd_sweep) {
      LieType t(family_from_char(sweep_family.at(0)), sweep_rank);
      if (sweep_rank > 4 || max_omega > 3)
        throw std::invalid_argument("sweep is desk-scale only: rank <= 4 and --max-omega <= 3");
      long rows = 1;
      for (int i = 0; i < sweep_rank; ++i) rows *= max_omega + 1;
      if (rows > cell_budget()) throw std::invalid_argument("sweep exceeds GTPOLY_CELL_BUDGET");
      int mismatches = 0;
      json jrows = json::array();
      for (long code = 0; code < rows; ++code) {
        std::vector<Rat> omega(sweep_rank);
        long c = code;
        for (int i = 0; i < sweep_rank; ++i) {
          omega[i] = c % (max_omega + 1);
          c /= max_omega + 1;
        }
        Weight lam = omega_to_epsilon(t, omega);
        bool predicted = predicted_lattice(lam);
        bool observed = observed_lattice(lam);
        if (predicted != observed) ++mismatches;
        std::string witness;
        if (!observed) {
          if (t.family == Family::B)
            witness = vec_str(point_from_pattern(b_witness(lam)));
          else if (t.family == Family::D && t.rank >= 4)
            witness = vec_str(d_witness(lam).flat());
        }
        if (format == "json") {
          json row{{"omega", to_json(omega)},
                   {"eps", to_json(lam.eps)},
                   {"predicted", predicted},
                   {"observed", observed}};
          if (!witness.empty()) row["witness"] = witness;
          jrows.push_back(std::move(row));
        } else {
          std::cout << "omega=" << vec_str(omega) << " eps=" << vec_str(lam.eps)
                    << " predicted=" << (predicted ? "lattice" : "non-lattice")
                    << " observed=" << (observed ? "lattice" : "non-lattice");
          if (!witness.empty()) std::cout << " witness=" << witness;
          std::cout << "\n";
        }
      }
      if (format == "json")
        std::cout << json{{"rows", jrows}, {"mismatches", mismatches}}.dump() << "\n";
      else
        std::cout << "mismatches: " << mismatches << "\n";
      return mismatches == 0 ? 0 : 1;
    }
    if (*cmd_witness) {
      Weight lam = wa.resolve();
      if (lam.type.family == Family::B) {
        GTPattern p = b_witness(lam);
        if (format == "json")
          std::cout << to_json(lam, p).dump() << "\n";
        else
          std::cout << pretty_pattern(lam, p);
      } else if (lam.type.family == Family::D) {
        TweakedPattern tp = d_witness(lam);
        if (format == "json")
          std::cout << to_json(lam, tp).dump() << "\n";
        else
          std::cout << pretty_tweaked(lam, tp);
      } else {
        throw std::invalid_argument("witness patterns exist for families B and D");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
