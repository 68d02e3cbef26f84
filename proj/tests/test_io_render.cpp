#include <doctest.h>

#include <filesystem>

#include "tilered/json_io.hpp"
#include "tilered/render.hpp"

using namespace tilered;

TEST_CASE("group json round trip") {
    QuotientGroup G(2, Lattice(2, {{2, 0}}));
    QuotientGroup back = io::group_from_json(io::group_to_json(G));
    CHECK(back.dim() == 2);
    CHECK(back.kernel() == G.kernel());
    CHECK_THROWS_AS(io::group_from_json(io::json{{"relations", io::json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::group_from_json(io::json{{"d", 0}}), std::invalid_argument);
}

TEST_CASE("tile json round trip") {
    Tile t = Tile::from_cells(2, {{0, 0}, {1, 0}, {0, -3}});
    CHECK(io::tile_from_json(io::tile_to_json(t), 2) == t);

    std::vector<Tile> tiles{t, Tile::from_cells(2, {{0, 0}})};
    auto back = io::tiles_from_json(io::tiles_to_json(tiles), 2);
    CHECK(back == tiles);
    CHECK_THROWS_AS(io::tile_from_json(io::tile_to_json(t), 3), std::invalid_argument);
}

TEST_CASE("rigid json round trip") {
    RigidTileSet R = build_rigid(2, 2, Lattice(2, {{2, 0}}));
    RigidTileSet back = io::rigid_from_json(io::rigid_to_json(R));
    CHECK(back.d == R.d);
    CHECK(back.s == R.s);
    CHECK(back.N == R.N);
    CHECK(back.m == R.m);
    CHECK(back.L == R.L);
    CHECK(back.v == R.v);
    CHECK(back.T == R.T);
    CHECK(back.Tj == R.Tj);
}

TEST_CASE("reduction json round trip") {
    QuotientGroup G(2, Lattice(2, {{2, 0}}));
    ReductionInstance red = reduce_tiles(G, {Tile::from_cells(2, {{0, 0}, {1, 0}})});
    ReductionInstance back = io::reduction_from_json(io::reduction_to_json(red));
    CHECK(back.G.kernel() == red.G.kernel());
    CHECK(back.F == red.F);
    CHECK(back.Ftilde == red.Ftilde);
    CHECK(back.R.N == red.R.N);
}

TEST_CASE("tuple json round trip") {
    PeriodicSetTuple t = PeriodicSetTuple::canonical(
        2, {{{0, 0}, {1, 1}}, {{2, 0}}}, Lattice(2, {{4, 0}, {0, 4}}));
    CHECK(io::tuple_from_json(io::tuple_to_json(t)) == t);
}

TEST_CASE("matrix parsing") {
    CHECK(io::parse_matrix("2,0;0,3") == std::vector<IntVec>{{2, 0}, {0, 3}});
    CHECK(io::parse_matrix(" -1 , 5 ") == std::vector<IntVec>{{-1, 5}});
    CHECK(io::parse_matrix("").empty());
    CHECK_THROWS_AS(io::parse_matrix("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_matrix("1,2;3"), std::invalid_argument);
}

TEST_CASE("dump is byte stable") {
    io::json j{{"b", 1}, {"a", io::json::array({1, 2})}};
    std::string once = io::dump(j);
    CHECK(once == io::dump(j));
    CHECK(once.back() == '\n');
}

TEST_CASE("file round trip") {
    auto path = std::filesystem::temp_directory_path() / "tilered_io_test.json";
    io::json j{{"k", 42}};
    io::save_file(path.string(), j);
    CHECK(io::load_file(path.string()) == j);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::load_file(path.string()), std::invalid_argument);
}

TEST_CASE("tiles svg") {
    std::vector<Tile> tiles{Tile::from_cells(2, {{0, 0}, {1, 0}}),
                            Tile::from_cells(2, {{0, 1}})};
    render::RenderSpec spec = render::default_spec(tiles.size());
    std::string svg = render::tiles_svg(tiles, spec);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // one rect per cell
    size_t rects = 0;
    for (size_t p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1))
        ++rects;
    CHECK(rects >= 3);
    CHECK(svg == render::tiles_svg(tiles, spec));  // deterministic

    CHECK_THROWS_AS(render::tiles_svg({Tile::from_cells(3, {{0, 0, 0}})}, spec),
                    std::invalid_argument);
}

TEST_CASE("solution svg and ascii") {
    QuotientGroup G(2, Lattice::zero(2));
    Tile F = Tile::from_cells(2, {{0, 0}, {1, 0}});
    FiniteInstance inst = build_instance(G, Lattice(2, {{4, 0}, {0, 2}}), {F});
    SolutionSet sols = solve(inst, SolveMode::First, true);
    REQUIRE(sols.solutions.size() == 1);

    render::RenderSpec spec = render::default_spec(1);
    std::string svg = render::solution_svg(inst, sols.solutions[0], spec);
    CHECK(svg.find("<svg") != std::string::npos);
    size_t rects = 0;
    for (size_t p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1))
        ++rects;
    CHECK(rects == 8);  // every torus cell exactly once

    std::string art = render::solution_ascii(inst, sols.solutions[0]);
    CHECK(art.find('\n') != std::string::npos);
    CHECK(art == render::solution_ascii(inst, sols.solutions[0]));
}

TEST_CASE("tiles ascii") {
    std::vector<Tile> tiles{Tile::from_cells(2, {{0, 0}, {1, 0}})};
    std::string art = render::tiles_ascii(tiles, render::default_spec(1));
    CHECK_FALSE(art.empty());
}
