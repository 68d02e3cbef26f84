#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilered/intvec.hpp"

namespace tilered {

// Sublattice of Z^d held in canonical row-style Hermite normal form:
// rows in echelon order, pivots positive, entries above a pivot reduced
// into [0, pivot). Two equal lattices always have identical hnf_basis.
class Lattice {
public:
    Lattice() = default;
    Lattice(int d, std::vector<IntVec> gens);

    static Lattice zero(int d) { return Lattice(d, {}); }

    int dim() const { return d_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<IntVec>& basis() const { return basis_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

    // canonical coset representative of v + L (floor reduction by the HNF rows)
    IntVec rep(IntVec v) const;
    bool contains(const IntVec& v) const;

    // [Z^d : L], or nullopt when rank < d
    std::optional<Int> index() const;

    bool operator==(const Lattice& o) const {
        return d_ == o.d_ && basis_ == o.basis_;
    }

    friend Lattice sum_lattice(const Lattice& a, const Lattice& b);
    friend Lattice scale_lattice(Int c, const Lattice& a);

private:
    int d_ = 0;
    std::vector<IntVec> basis_;
    std::vector<int> pivot_cols_;
};

// Row-style HNF basis of the lattice generated by gens; throws on
// dimension mismatch or integer overflow during elimination.
std::vector<IntVec> hermite_basis(int d, std::vector<IntVec> gens);

// w_1..w_r with L = Zw_1 (+) ... (+) Zw_r (the HNF rows)
std::vector<IntVec> free_generators(const Lattice& L);

Lattice sum_lattice(const Lattice& a, const Lattice& b);
Lattice scale_lattice(Int c, const Lattice& a);

// Gamma = Z^d / L with arithmetic on canonical representatives.
class QuotientGroup {
public:
    QuotientGroup() = default;
    QuotientGroup(int d, Lattice kernel);

    int dim() const { return d_; }
    const Lattice& kernel() const { return kernel_; }

    IntVec rep(const IntVec& v) const;
    bool same_element(const IntVec& u, const IntVec& v) const {
        return kernel_.contains(vec_sub(u, v));
    }

    // {rep(s) : s in S}, the lift into the fundamental domain D
    std::vector<IntVec> lift_to_D(const std::vector<IntVec>& S) const;

    bool operator==(const QuotientGroup& o) const {
        return d_ == o.d_ && kernel_ == o.kernel_;
    }

private:
    int d_ = 0;
    Lattice kernel_;
};

// Element of a quotient group, stored in canonical-representative form.
struct GroupElement {
    IntVec coords;
    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    auto operator<=>(const GroupElement& o) const {
        return compare_lex(coords, o.coords) <=> 0;
    }
};

// Finite quotient Z^d / M for full-rank M. The canonical representatives
// form the box prod [0, p_i) over the HNF diagonal, so cells enumerate in
// mixed radix.
class FiniteQuotient {
public:
    explicit FiniteQuotient(Lattice M);

    const Lattice& lattice() const { return M_; }
    Int size() const { return size_; }
    const IntVec& pivots() const { return pivots_; }

    Int cell_of(const IntVec& v) const;
    IntVec vec_of(Int cell) const;

    // subgroup of cells generated by the images of gens (BFS closure from 0)
    std::vector<Int> subgroup_image(const std::vector<IntVec>& gens) const;
    // orbits of the subgroup generated by gens, restricted to the given cells
    std::vector<std::vector<Int>> orbits(const std::vector<IntVec>& gens,
                                         const std::vector<Int>& cells) const;

private:
    Lattice M_;
    IntVec pivots_;
    Int size_ = 0;
};

}  // namespace tilered
