#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilered/bitops.hpp"
#include "tilered/lattice.hpp"
#include "tilered/tile.hpp"

namespace tilered {

// Finite-quotient tiling instance: decide Tile/Tile_0(F_1..F_k; E) for
// co-tiles periodic under P, i.e. exact cover of E inside Q = Z^d/(L+P).
struct FiniteInstance {
    QuotientGroup G;
    Lattice period;                         // P
    FiniteQuotient Q;                       // Z^d / (L + P)
    std::vector<Tile> tiles;                // original tiles (canonical reps)
    std::vector<std::vector<Int>> tile_cells;  // projected cells per tile, sorted
    std::vector<char> feasible;             // collapse flag per tile
    std::vector<Int> target;                // sorted cells of E
    bool target_is_all = true;

    FiniteInstance(const QuotientGroup& g, const Lattice& p, FiniteQuotient q)
        : G(g), period(p), Q(std::move(q)) {}
};

FiniteInstance build_instance(const QuotientGroup& G, const Lattice& P,
                              std::vector<Tile> tiles,
                              const std::optional<std::vector<IntVec>>& target = {});

enum class SolveMode { First, All, Count };

// k-tuple of co-tile position sets in Q, sorted per tile
struct Solution {
    std::vector<std::vector<Int>> positions;
    auto operator<=>(const Solution&) const = default;
};

struct SolutionSet {
    std::vector<Solution> solutions;  // populated for First/All
    Int count = 0;
};

// Exact-cover search over the cell x placement incidence structure.
// Minimum-remaining-candidates cell selection, bitset rows, deterministic
// output order. Workers (TILERED_JOBS or `jobs`) split on the first
// branching cell; results are merged and sorted.
SolutionSet solve(const FiniteInstance& inst, SolveMode mode, bool require_origin,
                  int jobs = 0);

struct TilingCheck {
    bool ok = false;
    std::string reason;            // empty when ok
    std::optional<Int> witness_cell;
};

TilingCheck is_tiling(const FiniteInstance& inst,
                      const std::vector<std::vector<Int>>& candidate);

}  // namespace tilered
