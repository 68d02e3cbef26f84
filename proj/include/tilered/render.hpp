#pragma once

#include <array>
#include <string>
#include <vector>

#include "tilered/solver.hpp"
#include "tilered/tile.hpp"

namespace tilered::render {

struct RenderSpec {
    int cell_px = 12;
    std::vector<std::string> palette;      // one color per tile index
    std::array<Int, 4> window{0, 0, 0, 0}; // x0,y0,x1,y1 inclusive; all-zero = auto
    bool has_window = false;
};

RenderSpec default_spec(size_t k);

// Tiles drawn in true coordinates, colored by tile index (d = 2 only).
std::string tiles_svg(const std::vector<Tile>& tiles, const RenderSpec& spec);
// Torus tiling: every cell of the fundamental box colored by covering tile.
std::string solution_svg(const FiniteInstance& inst, const Solution& sol,
                         const RenderSpec& spec);

// ASCII slice through the first two coordinates (remaining coordinates 0).
std::string tiles_ascii(const std::vector<Tile>& tiles, const RenderSpec& spec);
std::string solution_ascii(const FiniteInstance& inst, const Solution& sol);

}  // namespace tilered::render
