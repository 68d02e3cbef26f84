#include "tilered/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tilered::render {

namespace {

const char* kPalette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                          "#66ccee", "#aa3377", "#bbbbbb", "#000000"};
const char kAsciiGlyphs[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghij";

std::array<Int, 4> bounding_window(const std::vector<Tile>& tiles) {
    std::array<Int, 4> w{0, 0, 0, 0};
    bool first = true;
    for (const auto& t : tiles)
        for (size_t i = 0; i < t.size(); ++i) {
            auto c = t.cell(i);
            if (first) {
                w = {c[0], c[1], c[0], c[1]};
                first = false;
            } else {
                w[0] = std::min(w[0], c[0]);
                w[1] = std::min(w[1], c[1]);
                w[2] = std::max(w[2], c[0]);
                w[3] = std::max(w[3], c[1]);
            }
        }
    if (first) throw std::invalid_argument("nothing to render");
    return w;
}

void check_2d(const std::vector<Tile>& tiles) {
    for (const auto& t : tiles)
        if (t.dim() != 2) throw std::invalid_argument("svg rendering requires d = 2");
}

std::string svg_open(const std::array<Int, 4>& w, int px) {
    Int width = (w[2] - w[0] + 1) * px;
    Int height = (w[3] - w[1] + 1) * px;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    return os.str();
}

void emit_rect(std::ostringstream& os, const std::array<Int, 4>& w, int px, Int x, Int y,
               const std::string& fill) {
    // flip y so the positive axis points up
    Int rx = (x - w[0]) * px;
    Int ry = (w[3] - y) * px;
    os << "  <rect x=\"" << rx << "\" y=\"" << ry << "\" width=\"" << px
       << "\" height=\"" << px << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" "
       << "stroke-width=\"1\"/>\n";
}

}  // namespace

RenderSpec default_spec(size_t k) {
    RenderSpec spec;
    for (size_t i = 0; i < std::max<size_t>(k, 1); ++i)
        spec.palette.push_back(kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))]);
    return spec;
}

std::string tiles_svg(const std::vector<Tile>& tiles, const RenderSpec& spec) {
    check_2d(tiles);
    if (spec.palette.size() < tiles.size())
        throw std::invalid_argument("palette shorter than tile count");
    std::array<Int, 4> w = spec.has_window ? spec.window : bounding_window(tiles);
    std::ostringstream os;
    os << svg_open(w, spec.cell_px);
    for (size_t j = 0; j < tiles.size(); ++j) {
        const Tile& t = tiles[j];
        for (size_t i = 0; i < t.size(); ++i) {
            auto c = t.cell(i);
            if (c[0] < w[0] || c[0] > w[2] || c[1] < w[1] || c[1] > w[3]) continue;
            emit_rect(os, w, spec.cell_px, c[0], c[1], spec.palette[j]);
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string solution_svg(const FiniteInstance& inst, const Solution& sol,
                         const RenderSpec& spec) {
    if (inst.G.dim() != 2) throw std::invalid_argument("svg rendering requires d = 2");
    if (spec.palette.size() < inst.tiles.size())
        throw std::invalid_argument("palette shorter than tile count");
    const auto& pv = inst.Q.pivots();
    std::array<Int, 4> w{0, 0, pv[0] - 1, pv[1] - 1};
    std::vector<int> owner(static_cast<size_t>(inst.Q.size()), -1);
    for (size_t j = 0; j < sol.positions.size(); ++j)
        for (Int a : sol.positions[j]) {
            IntVec va = inst.Q.vec_of(a);
            const Tile& t = inst.tiles[j];
            for (size_t i = 0; i < t.size(); ++i) {
                Int c = inst.Q.cell_of(vec_add(va, t.cell_vec(i)));
                owner[static_cast<size_t>(c)] = static_cast<int>(j);
            }
        }
    std::ostringstream os;
    os << svg_open(w, spec.cell_px);
    for (Int c = 0; c < inst.Q.size(); ++c) {
        IntVec v = inst.Q.vec_of(c);
        int j = owner[static_cast<size_t>(c)];
        std::string fill = j < 0 ? "#ffffff" : spec.palette[static_cast<size_t>(j)];
        emit_rect(os, w, spec.cell_px, v[0], v[1], fill);
    }
    os << "</svg>\n";
    return os.str();
}

std::string tiles_ascii(const std::vector<Tile>& tiles, const RenderSpec& spec) {
    if (tiles.empty()) throw std::invalid_argument("nothing to render");
    const int d = tiles[0].dim();
    std::array<Int, 4> w;
    if (spec.has_window) {
        w = spec.window;
    } else if (d == 2) {
        w = bounding_window(tiles);
    } else {
        // slice through the first two coordinates
        bool first = true;
        w = {0, 0, 0, 0};
        for (const auto& t : tiles)
            for (size_t i = 0; i < t.size(); ++i) {
                auto c = t.cell(i);
                if (first) {
                    w = {c[0], c[1], c[0], c[1]};
                    first = false;
                } else {
                    w[0] = std::min(w[0], c[0]);
                    w[1] = std::min(w[1], c[1]);
                    w[2] = std::max(w[2], c[0]);
                    w[3] = std::max(w[3], c[1]);
                }
            }
    }
    std::ostringstream os;
    for (Int y = w[3]; y >= w[1]; --y) {
        for (Int x = w[0]; x <= w[2]; ++x) {
            char ch = '.';
            for (size_t j = 0; j < tiles.size(); ++j) {
                IntVec v(static_cast<size_t>(d), 0);
                v[0] = x;
                v[1] = y;
                if (tiles[j].contains(v)) ch = kAsciiGlyphs[j % (sizeof(kAsciiGlyphs) - 1)];
            }
            os << ch;
        }
        os << "\n";
    }
    return os.str();
}

std::string solution_ascii(const FiniteInstance& inst, const Solution& sol) {
    const auto& pv = inst.Q.pivots();
    if (inst.G.dim() < 2) throw std::invalid_argument("ascii rendering requires d >= 2");
    std::vector<int> owner(static_cast<size_t>(inst.Q.size()), -1);
    for (size_t j = 0; j < sol.positions.size(); ++j)
        for (Int a : sol.positions[j]) {
            IntVec va = inst.Q.vec_of(a);
            const Tile& t = inst.tiles[j];
            for (size_t i = 0; i < t.size(); ++i) {
                Int c = inst.Q.cell_of(vec_add(va, t.cell_vec(i)));
                owner[static_cast<size_t>(c)] = static_cast<int>(j);
            }
        }
    std::ostringstream os;
    for (Int y = pv[1] - 1; y >= 0; --y) {
        for (Int x = 0; x < pv[0]; ++x) {
            IntVec v(static_cast<size_t>(inst.G.dim()), 0);
            v[0] = x;
            v[1] = y;
            int j = owner[static_cast<size_t>(inst.Q.cell_of(v))];
            os << (j < 0 ? '.' : kAsciiGlyphs[static_cast<size_t>(j) % (sizeof(kAsciiGlyphs) - 1)]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace tilered::render
