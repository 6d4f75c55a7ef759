#pragma once

#include <string>

#include <json.hpp>

#include "gtpoly/gt.hpp"
#include "gtpoly/marked_poset.hpp"
#include "gtpoly/polyoracle.hpp"
#include "gtpoly/rootdata.hpp"
#include "gtpoly/string_d.hpp"
#include "gtpoly/tweaked_d.hpp"

namespace gtpoly {

using json = nlohmann::ordered_json;

/// Rationals serialize as [num, den] with reduced fractions and positive
/// denominators.
json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

json to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vec_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const Weight& lambda, const GTPattern& p);
GTPattern gt_pattern_from_json(const json& j);

json to_json(const Weight& lambda, const TweakedPattern& t);
TweakedPattern tweaked_pattern_from_json(const json& j);

json to_json(const StringPointD& a);

json to_json(const MarkedPoset& p);
MarkedPoset poset_from_json(const json& j);

json to_json(const HPolytope& h);
HPolytope hpolytope_from_json(const json& j);

json to_json(const VertexSet& v);

/// Staggered triangular rendering matching the usual pattern drawings.
std::string pretty_pattern(const Weight& lambda, const GTPattern& p);
std::string pretty_tweaked(const Weight& lambda, const TweakedPattern& t);

/// DOT with lambda-marked nodes drawn as diamonds ("crosses"), marked zeros
/// as open circles, double edges as undirected lines. Byte-stable.
std::string dot_identity_diagram(const MarkedPoset& poset, const IdentityDiagram& d);

/// DOT for tweaked diagrams: white nodes unfilled, red doubles as bold red
/// parallel lines, red singles dashed.
std::string dot_tweaked_diagram(const TweakedDiagram& d);

}  // namespace gtpoly
