#pragma once

#include <vector>

#include "tilered/lattice.hpp"
#include "tilered/tile.hpp"

namespace tilered {

// Jigsaw tile tuple: a box B_m with d frame-shaped dents whose bumps are
// displaced by N*e_i, plus s variants T_j whose extra bumps are displaced
// by N*w_l along the free generators of L. The bumps force every co-tile
// to be N-periodic (resp. NL-periodic).
struct RigidTileSet {
    int d = 0;
    int s = 0;
    int r = 0;       // rank of L
    int q = 0;       // d + r*s
    int m = 0;       // box radius
    Int N = 0;       // 2m+1
    Lattice L;
    std::vector<IntVec> v;   // q translation vectors inside B_m
    Tile T;
    std::vector<Tile> Tj;    // s tiles
};

// d >= 2, s >= 1. Deterministic grid packing of the v_i in the first two
// coordinates; throws std::invalid_argument for d < 2 or mismatched L.
RigidTileSet build_rigid(int d, int s, const Lattice& L);

// True iff every cell has exactly one representation t + N*z with t in T
// (checked exactly via residues mod N; window_radius must be >= N).
bool verify_rigid_fundamental(const RigidTileSet& R, int window_radius);
bool tile_is_fundamental_domain(const Tile& T, Int N);

// True iff T_j (+) NL = T (+) NL for every j, compared on a window of the
// given radius with margin N*max|w_l| discarded at the boundary.
bool verify_shift_equality(const RigidTileSet& R, int window_radius);
bool shift_equality_holds(const Tile& T, const Tile& Tj, const Lattice& L, Int N,
                          int window_radius);

// No translate of S_i fits inside S_j for i != j (1 <= i,j <= q).
bool frames_mutually_non_embeddable(int d, int q);

// The only t with t + S_i inside B_m and disjoint from T is v_i.
bool dent_is_unique(const RigidTileSet& R, int i);

int default_window_radius(const RigidTileSet& R);

}  // namespace tilered
