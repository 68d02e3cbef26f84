#pragma once

#include <vector>

#include "tilered/lattice.hpp"
#include "tilered/rigid.hpp"
#include "tilered/tile.hpp"

namespace tilered {

// k-tuple of periodic sets, each base_j (+) period with the base reduced
// into the fundamental domain of the (full-rank) period lattice.
struct PeriodicSetTuple {
    int d = 0;
    std::vector<std::vector<IntVec>> base;
    Lattice period;

    static PeriodicSetTuple canonical(int d, std::vector<std::vector<IntVec>> base,
                                      Lattice period);

    bool operator==(const PeriodicSetTuple& o) const {
        return d == o.d && base == o.base && period == o.period;
    }

    // invariance of every component under translation by t
    bool invariant_under(const IntVec& t) const;
};

// The instance of the reduction: tilde F_j = (N*lift(F_j \ {0}) (+) T_j) |+| T_{k+j}
struct ReductionInstance {
    QuotientGroup G;
    std::vector<Tile> F;       // tiles over Gamma, canonical representatives
    RigidTileSet R;            // built with s = 2k
    std::vector<Tile> Ftilde;  // tiles over Z^d
};

ReductionInstance reduce_tiles(const QuotientGroup& G, std::vector<Tile> F);

// Translate each tile by its lexicographically least element so 0 is a member.
std::vector<Tile> normalize_tiles(std::vector<Tile> F);

// (A_1..A_k) over Gamma  ->  (N pi^{-1}(A_1), ..., N pi^{-1}(A_k)) over Z^d
PeriodicSetTuple lift_cotiles(const QuotientGroup& G, const PeriodicSetTuple& A, Int N);

// Inverse direction; requires each component inside N Z^d and NL-periodic,
// throws with the violating component and witness cell otherwise.
PeriodicSetTuple project_cotiles(const QuotientGroup& G, const PeriodicSetTuple& At, Int N);

}  // namespace tilered
