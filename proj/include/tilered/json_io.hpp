#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tilered/reduce.hpp"
#include "tilered/rigid.hpp"
#include "tilered/solver.hpp"
#include "tilered/tile.hpp"

namespace tilered::io {

using nlohmann::json;

// group file: {"d": int, "relations": [[int,...],...]}
json group_to_json(const QuotientGroup& G);
QuotientGroup group_from_json(const json& j);

json tile_to_json(const Tile& t);
Tile tile_from_json(const json& j, int d);
json tiles_to_json(const std::vector<Tile>& tiles);
std::vector<Tile> tiles_from_json(const json& j, int d);

json rigid_to_json(const RigidTileSet& R);
RigidTileSet rigid_from_json(const json& j);

json reduction_to_json(const ReductionInstance& red);
ReductionInstance reduction_from_json(const json& j);

json tuple_to_json(const PeriodicSetTuple& t);
PeriodicSetTuple tuple_from_json(const json& j);

// "a,b;c,d" row-semicolon matrix syntax for period lattices
std::vector<IntVec> parse_matrix(const std::string& s);

std::string dump(const json& j);  // fixed formatting so artifacts are byte-stable
json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace tilered::io
