#include "tilered/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tilered::io {

namespace {

json vec_to_json(std::span<const Int> v) {
    json a = json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

IntVec vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an integer vector");
    IntVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("expected an integer");
        v.push_back(x.get<Int>());
    }
    return v;
}

std::vector<IntVec> vecs_from_json(const json& j, int d) {
    std::vector<IntVec> out;
    for (const auto& e : j) {
        IntVec v = vec_from_json(e);
        if (d > 0 && static_cast<int>(v.size()) != d)
            throw std::invalid_argument("vector dimension mismatch");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

json group_to_json(const QuotientGroup& G) {
    json j;
    j["d"] = G.dim();
    json rel = json::array();
    for (const auto& w : G.kernel().basis()) rel.push_back(vec_to_json(w));
    j["relations"] = rel;
    return j;
}

QuotientGroup group_from_json(const json& j) {
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw std::invalid_argument("group file: missing integer field \"d\"");
    int d = j["d"].get<int>();
    if (d < 1) throw std::invalid_argument("group file: d must be positive");
    std::vector<IntVec> rel;
    if (j.contains("relations")) rel = vecs_from_json(j["relations"], d);
    return QuotientGroup(d, Lattice(d, std::move(rel)));
}

json tile_to_json(const Tile& t) {
    json a = json::array();
    for (size_t i = 0; i < t.size(); ++i) a.push_back(vec_to_json(t.cell(i)));
    return a;
}

Tile tile_from_json(const json& j, int d) {
    return Tile::from_cells(d, vecs_from_json(j, d));
}

json tiles_to_json(const std::vector<Tile>& tiles) {
    json a = json::array();
    for (const auto& t : tiles) a.push_back(tile_to_json(t));
    return a;
}

std::vector<Tile> tiles_from_json(const json& j, int d) {
    std::vector<Tile> out;
    for (const auto& e : j) out.push_back(tile_from_json(e, d));
    return out;
}

json rigid_to_json(const RigidTileSet& R) {
    json j;
    j["d"] = R.d;
    j["s"] = R.s;
    j["N"] = R.N;
    j["m"] = R.m;
    json kernel = json::array();
    for (const auto& w : R.L.basis()) kernel.push_back(vec_to_json(w));
    j["kernel"] = kernel;
    json v = json::array();
    for (const auto& vi : R.v) v.push_back(vec_to_json(vi));
    j["v"] = v;
    j["T"] = tile_to_json(R.T);
    json tj = json::array();
    for (const auto& t : R.Tj) tj.push_back(tile_to_json(t));
    j["Tj"] = tj;
    return j;
}

RigidTileSet rigid_from_json(const json& j) {
    RigidTileSet R;
    R.d = j.at("d").get<int>();
    R.s = j.at("s").get<int>();
    R.N = j.at("N").get<Int>();
    R.m = j.at("m").get<int>();
    R.L = Lattice(R.d, vecs_from_json(j.at("kernel"), R.d));
    R.r = R.L.rank();
    R.q = R.d + R.r * R.s;
    for (const auto& e : j.at("v")) R.v.push_back(vec_from_json(e));
    R.T = tile_from_json(j.at("T"), R.d);
    for (const auto& e : j.at("Tj")) R.Tj.push_back(tile_from_json(e, R.d));
    if (static_cast<int>(R.Tj.size()) != R.s)
        throw std::invalid_argument("rigid file: Tj count does not match s");
    return R;
}

json reduction_to_json(const ReductionInstance& red) {
    json j;
    j["group"] = group_to_json(red.G);
    j["F"] = tiles_to_json(red.F);
    j["rigid"] = rigid_to_json(red.R);
    j["Ftilde"] = tiles_to_json(red.Ftilde);
    j["N"] = red.R.N;
    return j;
}

ReductionInstance reduction_from_json(const json& j) {
    ReductionInstance red;
    red.G = group_from_json(j.at("group"));
    red.F = tiles_from_json(j.at("F"), red.G.dim());
    red.R = rigid_from_json(j.at("rigid"));
    red.Ftilde = tiles_from_json(j.at("Ftilde"), red.G.dim());
    if (j.at("N").get<Int>() != red.R.N)
        throw std::invalid_argument("reduction file: N does not match the rigid set");
    return red;
}

json tuple_to_json(const PeriodicSetTuple& t) {
    json j;
    json base = json::array();
    for (const auto& comp : t.base) {
        json c = json::array();
        for (const auto& b : comp) c.push_back(vec_to_json(b));
        base.push_back(c);
    }
    j["base"] = base;
    json period = json::array();
    for (const auto& w : t.period.basis()) period.push_back(vec_to_json(w));
    j["period"] = period;
    return j;
}

PeriodicSetTuple tuple_from_json(const json& j) {
    const json& period = j.at("period");
    if (period.empty()) throw std::invalid_argument("tuple file: empty period matrix");
    int d = static_cast<int>(period[0].size());
    std::vector<std::vector<IntVec>> base;
    for (const auto& comp : j.at("base")) base.push_back(vecs_from_json(comp, d));
    return PeriodicSetTuple::canonical(d, std::move(base),
                                       Lattice(d, vecs_from_json(period, d)));
}

std::vector<IntVec> parse_matrix(const std::string& s) {
    std::vector<IntVec> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        IntVec v;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            size_t pos = 0;
            Int x = std::stoll(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
                ++pos;
            if (pos != tok.size())
                throw std::invalid_argument("bad matrix entry: " + tok);
            v.push_back(x);
        }
        if (v.empty()) throw std::invalid_argument("empty matrix row");
        rows.push_back(std::move(v));
    }
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw std::invalid_argument("ragged matrix rows");
    return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << dump(j);
}

}  // namespace tilered::io
