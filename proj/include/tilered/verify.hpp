#pragma once

#include <string>
#include <vector>

#include "tilered/reduce.hpp"
#include "tilered/solver.hpp"

namespace tilered {

// Both-sides check of the reduction at one period: enumerate
// Tile_0(F; Gamma) at period P and Tile_0(tilde F; Z^d) at period N(L+P),
// and match the two solution sets under lift/project.
struct VerifyReport {
    bool ok = false;
    Int count_gamma = 0;
    Int count_z = 0;
    std::vector<std::string> mismatches;
    std::string table() const;
};

VerifyReport verify_reduction(const ReductionInstance& red, const Lattice& P, int jobs = 0);

// convert torus solutions into canonical periodic tuples
PeriodicSetTuple solution_to_tuple(const FiniteInstance& inst, const Solution& s);

// Independent enumeration for the rigidity statement: all partitions of the
// image of N Z^d in Q into s parts, each a union of NL-orbits.
std::vector<Solution> enumerate_periodic_partitions(const RigidTileSet& R,
                                                    const FiniteQuotient& Q);

}  // namespace tilered
