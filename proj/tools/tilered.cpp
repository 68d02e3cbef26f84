// Command-line driver: construct rigid tile sets, reduce quotient tiling
// instances to Z^d, solve periodic tilings by exact cover, verify the
// reduction both ways, and render tiles or tilings.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tilered/json_io.hpp"
#include "tilered/render.hpp"
#include "tilered/verify.hpp"

using namespace tilered;
using nlohmann::json;

namespace {

constexpr int kExitNoSolution = 1;
constexpr int kExitBadInput = 2;

Lattice kernel_from_options(int d, const std::string& kernel_file,
                            const std::string& kernel_inline) {
    std::vector<IntVec> rel;
    if (!kernel_file.empty()) {
        QuotientGroup G = io::group_from_json(io::load_file(kernel_file));
        if (G.dim() != d) throw std::invalid_argument("kernel file dimension mismatch");
        return G.kernel();
    }
    if (!kernel_inline.empty()) rel = io::parse_matrix(kernel_inline);
    for (const auto& r : rel)
        if (static_cast<int>(r.size()) != d)
            throw std::invalid_argument("kernel row dimension mismatch");
    return Lattice(d, std::move(rel));
}

int cmd_rigid(int d, int s, const std::string& kernel_file,
              const std::string& kernel_inline, const std::string& out) {
    Lattice L = kernel_from_options(d, kernel_file, kernel_inline);
    RigidTileSet R = build_rigid(d, s, L);
    if (!out.empty()) io::save_file(out, io::rigid_to_json(R));
    std::cout << "N=" << R.N << " m=" << R.m << " |T|=" << R.T.size() << "\n";
    return 0;
}

int cmd_reduce(const std::string& group_file, const std::string& tiles_file,
               const std::string& out) {
    QuotientGroup G = io::group_from_json(io::load_file(group_file));
    std::vector<Tile> F = io::tiles_from_json(io::load_file(tiles_file), G.dim());
    ReductionInstance red = reduce_tiles(G, std::move(F));
    if (!out.empty()) io::save_file(out, io::reduction_to_json(red));
    std::cout << "k=" << red.F.size() << " N=" << red.R.N;
    for (size_t j = 0; j < red.Ftilde.size(); ++j)
        std::cout << " |Ftilde_" << (j + 1) << "|=" << red.Ftilde[j].size();
    std::cout << "\n";
    return 0;
}

int cmd_solve(const std::string& group_file, const std::string& tiles_file,
              const std::string& period, const std::string& mode_name,
              bool require_origin, const std::string& target_file,
              const std::string& out, int jobs) {
    QuotientGroup G = io::group_from_json(io::load_file(group_file));
    std::vector<Tile> tiles = io::tiles_from_json(io::load_file(tiles_file), G.dim());
    Lattice P(G.dim(), io::parse_matrix(period));
    std::optional<std::vector<IntVec>> target;
    if (!target_file.empty()) {
        std::vector<IntVec> cells;
        for (const auto& e : io::load_file(target_file)) {
            IntVec v;
            for (const auto& x : e) v.push_back(x.get<Int>());
            cells.push_back(std::move(v));
        }
        target = std::move(cells);
    }
    SolveMode mode = SolveMode::All;
    if (mode_name == "first")
        mode = SolveMode::First;
    else if (mode_name == "count")
        mode = SolveMode::Count;
    else if (mode_name != "all")
        throw std::invalid_argument("mode must be first, all or count");

    FiniteInstance inst = build_instance(G, P, std::move(tiles), target);
    SolutionSet sols = solve(inst, mode, require_origin, jobs);

    json j;
    j["group"] = io::group_to_json(G);
    j["tiles"] = io::tiles_to_json(inst.tiles);
    json pm = json::array();
    for (const auto& w : P.basis()) {
        json row = json::array();
        for (Int x : w) row.push_back(x);
        pm.push_back(row);
    }
    j["period"] = pm;
    j["count"] = sols.count;
    json arr = json::array();
    for (const auto& s : sols.solutions)
        arr.push_back(io::tuple_to_json(solution_to_tuple(inst, s)));
    j["solutions"] = arr;
    if (!out.empty())
        io::save_file(out, j);
    else
        std::cout << io::dump(j);
    if (mode == SolveMode::Count)
        std::cout << "count=" << sols.count << "\n";
    return sols.count > 0 ? 0 : kExitNoSolution;
}

int cmd_verify(const std::string& group_file, const std::string& tiles_file,
               const std::string& period, bool corrupt, int jobs) {
    QuotientGroup G = io::group_from_json(io::load_file(group_file));
    std::vector<Tile> F = io::tiles_from_json(io::load_file(tiles_file), G.dim());
    Lattice P(G.dim(), io::parse_matrix(period));
    ReductionInstance red = reduce_tiles(G, std::move(F));
    if (corrupt) {
        // negative-control hook: displace one cell of tilde F_1
        std::vector<IntVec> cells = red.Ftilde[0].cells_vec();
        IntVec shift(static_cast<size_t>(G.dim()), 0);
        shift[0] = 1;
        cells.back() = vec_add(cells.back(), shift);
        red.Ftilde[0] = Tile::from_cells(G.dim(), std::move(cells));
    }
    VerifyReport rep = verify_reduction(red, P, jobs);
    std::cout << rep.table();
    std::cout << rep.count_gamma << (rep.ok ? " = " : " != ") << rep.count_z << ", "
              << (rep.ok ? "OK" : "FAIL") << "\n";
    return rep.ok ? 0 : 1;
}

int cmd_render(const std::string& input, const std::string& svg_out, bool ascii,
               const std::string& window) {
    json j = io::load_file(input);
    render::RenderSpec spec = render::default_spec(8);
    if (!window.empty()) {
        std::vector<IntVec> rows = io::parse_matrix(window);
        if (rows.size() != 1 || rows[0].size() != 4)
            throw std::invalid_argument("window must be \"x0,y0,x1,y1\"");
        spec.window = {rows[0][0], rows[0][1], rows[0][2], rows[0][3]};
        spec.has_window = true;
    }

    std::vector<Tile> tiles;
    std::optional<std::pair<FiniteInstance, Solution>> torus;
    if (j.is_array()) {  // plain tile list
        if (j.empty()) throw std::invalid_argument("empty tile file");
        int d = static_cast<int>(j[0][0].size());
        tiles = io::tiles_from_json(j, d);
    } else if (j.contains("T")) {  // rigid set
        RigidTileSet R = io::rigid_from_json(j);
        tiles.push_back(R.T);
        for (const auto& t : R.Tj) tiles.push_back(t);
    } else if (j.contains("solutions")) {  // solver output
        QuotientGroup G = io::group_from_json(j.at("group"));
        std::vector<Tile> inst_tiles = io::tiles_from_json(j.at("tiles"), G.dim());
        std::vector<IntVec> period;
        for (const auto& e : j.at("period")) {
            IntVec v;
            for (const auto& x : e) v.push_back(x.get<Int>());
            period.push_back(std::move(v));
        }
        if (j.at("solutions").empty())
            throw std::invalid_argument("solution file has no solutions");
        FiniteInstance inst =
            build_instance(G, Lattice(G.dim(), std::move(period)), std::move(inst_tiles));
        PeriodicSetTuple t = io::tuple_from_json(j.at("solutions")[0]);
        Solution sol;
        for (const auto& comp : t.base) {
            std::vector<Int> positions;
            for (const auto& b : comp) positions.push_back(inst.Q.cell_of(b));
            std::sort(positions.begin(), positions.end());
            sol.positions.push_back(std::move(positions));
        }
        torus.emplace(std::move(inst), std::move(sol));
    } else {
        throw std::invalid_argument("unrecognized input file");
    }
    if (tiles.empty() && !torus) throw std::invalid_argument("empty tile file");

    std::string art;
    if (ascii) {
        art = torus ? render::solution_ascii(torus->first, torus->second)
                    : render::tiles_ascii(tiles, spec);
        std::cout << art;
        return 0;
    }
    art = torus ? render::solution_svg(torus->first, torus->second, spec)
                : render::tiles_svg(tiles, spec);
    if (svg_out.empty()) {
        std::cout << art;
    } else {
        std::ofstream out(svg_out);
        if (!out) throw std::invalid_argument("cannot write " + svg_out);
        out << art;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reduction of quotient tiling problems to Z^d, with an exact-cover solver"};
    app.require_subcommand(1);
    int jobs = 0;

    auto* rigid = app.add_subcommand("rigid", "construct a rigid jigsaw tile set");
    int d = 2, s = 1;
    std::string kernel_file, kernel_inline, rigid_out;
    rigid->add_option("--d", d, "ambient dimension (>= 2)")->required();
    rigid->add_option("--s", s, "number of tiles T_1..T_s")->required();
    rigid->add_option("--kernel", kernel_file, "group file with the kernel relations");
    rigid->add_option("--kernel-inline", kernel_inline, "kernel rows \"a,b;c,d\"");
    rigid->add_option("--out", rigid_out, "output rigid set JSON");

    auto* reduce = app.add_subcommand("reduce", "build tilde tiles from quotient tiles");
    std::string group_file, tiles_file, reduce_out;
    reduce->add_option("--group", group_file, "group JSON file")->required();
    reduce->add_option("--tiles", tiles_file, "tiles JSON file")->required();
    reduce->add_option("--out", reduce_out, "output reduction JSON");

    auto* solvecmd = app.add_subcommand("solve", "enumerate periodic tilings by exact cover");
    std::string s_group, s_tiles, s_period, s_mode = "all", s_target, s_out;
    bool require_origin = false;
    solvecmd->add_option("--group", s_group, "group JSON file")->required();
    solvecmd->add_option("--tiles", s_tiles, "tiles JSON file")->required();
    solvecmd->add_option("--period", s_period, "period rows \"a,b;c,d\"")->required();
    solvecmd->add_option("--mode", s_mode, "first|all|count");
    solvecmd->add_flag("--require-origin", require_origin, "keep only co-tiles through 0");
    solvecmd->add_option("--target", s_target, "target cell list JSON (subset of one period)");
    solvecmd->add_option("--out", s_out, "output solutions JSON");
    solvecmd->add_option("--jobs", jobs, "solver worker count (default TILERED_JOBS)");

    auto* verify = app.add_subcommand("verify", "reduce, solve both sides, match solutions");
    std::string v_group, v_tiles, v_period;
    bool corrupt = false;
    verify->add_option("--group", v_group, "group JSON file")->required();
    verify->add_option("--tiles", v_tiles, "tiles JSON file")->required();
    verify->add_option("--period", v_period, "quotient-side period rows")->required();
    verify->add_flag("--corrupt", corrupt, "negative control: perturb tilde F_1");
    verify->add_option("--jobs", jobs, "solver worker count");

    auto* rendercmd = app.add_subcommand("render", "render tiles or a tiling as SVG/ASCII");
    std::string r_input, r_svg, r_window;
    bool r_ascii = false;
    rendercmd->add_option("--input", r_input, "tile set, rigid set or solution JSON")->required();
    rendercmd->add_option("--svg", r_svg, "SVG output path");
    rendercmd->add_flag("--ascii", r_ascii, "ASCII output to stdout");
    rendercmd->add_option("--window", r_window, "window \"x0,y0,x1,y1\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (rigid->parsed()) return cmd_rigid(d, s, kernel_file, kernel_inline, rigid_out);
        if (reduce->parsed()) return cmd_reduce(group_file, tiles_file, reduce_out);
        if (solvecmd->parsed())
            return cmd_solve(s_group, s_tiles, s_period, s_mode, require_origin, s_target,
                             s_out, jobs);
        if (verify->parsed()) return cmd_verify(v_group, v_tiles, v_period, corrupt, jobs);
        if (rendercmd->parsed()) return cmd_render(r_input, r_svg, r_ascii, r_window);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
