#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sl3/chain_complex.hpp"
#include "sl3/diagram.hpp"
#include "sl3/foam.hpp"
#include "sl3/web.hpp"
#include "sl3/web_basis.hpp"

namespace sl3 {

using Json = nlohmann::ordered_json;

/// Edges, vertex rotations, dart pairing (tail/head ends of each edge),
/// orientations and loops.
Json web_to_json(const Web& w);
Web web_from_json(const Json& j);
/// FNV-1a hash of the labeled web's compact JSON.
std::uint64_t web_checksum(const Web& w);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);
/// Source web, moves, and the checksum of every frame.
Json movie_to_json(const FoamMovie& u);
/// Replays the moves; throws std::invalid_argument on a checksum mismatch.
FoamMovie movie_from_json(const Json& j);

/// Basis foams with their degrees.
Json basis_to_json(const WebBasis& b);

/// {"diagram", "bracket", "homology": [{"i","j","rank","torsion"}], "euler_check"}.
Json homology_to_json(const LinkDiagram& d, const LaurentPoly& bracket, const BigradedHomology& h);

/// A diagram given as PD text or as a JSON value (string, object or list of 4-tuples).
LinkDiagram diagram_from_json(const Json& j);
/// PD text, or JSON when the text starts with '{' or '['.
LinkDiagram parse_diagram(std::string_view text);
/// {"pd", "over_in", "loops"} with the original arc labels.
Json diagram_to_json(const LinkDiagram& d);

/// Persists the bracket memo as {canonical form: bracket text}.
void save_bracket_cache(const std::string& path);
/// Loads entries into the memo; a missing file is not an error. Returns the entry count.
int load_bracket_cache(const std::string& path);

}  // namespace sl3
