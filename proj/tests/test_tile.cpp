#include <doctest.h>

#include <limits>

#include "tilered/intvec.hpp"
#include "tilered/tile.hpp"

using namespace tilered;

TEST_CASE("cells are sorted and deduplicated") {
    Tile t = Tile::from_cells(2, {{1, 0}, {0, 0}, {1, 0}, {0, 5}});
    REQUIRE(t.size() == 3);
    CHECK(t.cell_vec(0) == IntVec{0, 0});
    CHECK(t.cell_vec(1) == IntVec{0, 5});
    CHECK(t.cell_vec(2) == IntVec{1, 0});
    CHECK(t.contains(IntVec{0, 5}));
    CHECK_FALSE(t.contains(IntVec{5, 0}));
}

TEST_CASE("from_cells rejects mismatched dimensions") {
    CHECK_THROWS_AS(Tile::from_cells(2, {{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("translation") {
    Tile t = Tile::from_cells(2, {{0, 0}, {1, 0}});
    Tile moved = t.translated({-3, 2});
    CHECK(moved == Tile::from_cells(2, {{-3, 2}, {-2, 2}}));
    CHECK(moved.translated({3, -2}) == t);
}

TEST_CASE("set operations") {
    Tile a = Tile::from_cells(2, {{0, 0}, {1, 0}});
    Tile b = Tile::from_cells(2, {{1, 0}, {2, 0}});
    CHECK(Tile::set_union(a, b).size() == 3);
    CHECK(Tile::difference(a, b) == Tile::from_cells(2, {{0, 0}}));
    CHECK(Tile::difference(a, a).empty());

    std::vector<Tile> overlapping{a, b};
    CHECK_THROWS_AS(Tile::disjoint_union(overlapping), std::invalid_argument);
    std::vector<Tile> disjoint{a, Tile::from_cells(2, {{5, 5}})};
    CHECK(Tile::disjoint_union(disjoint).size() == 3);
}

TEST_CASE("boxes enumerate in lexicographic order") {
    Tile b = box(2, 1);
    REQUIRE(b.size() == 9);
    CHECK(b.cell_vec(0) == IntVec{-1, -1});
    CHECK(b.cell_vec(8) == IntVec{1, 1});
    CHECK(b == Tile::from_cells(2, b.cells_vec()));  // already canonical
}

TEST_CASE("checked arithmetic overflows loudly") {
    Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, Int{1}), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, Int{2}), std::overflow_error);
    CHECK(checked_add(Int{2}, Int{3}) == 5);
    CHECK(floor_div(Int{-7}, Int{2}) == -4);
    CHECK(mod_floor(Int{-7}, Int{2}) == 1);
}
