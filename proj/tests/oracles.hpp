#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "tilered/lattice.hpp"
#include "tilered/solver.hpp"

namespace tilered::oracle {

// Membership of v in the integer span of gens, by exhaustive enumeration of
// coefficient vectors with |c_i| <= bound.
inline bool in_span_bruteforce(const std::vector<IntVec>& gens, const IntVec& v,
                               int bound) {
    if (gens.empty()) return is_zero(v);
    std::vector<int> c(gens.size(), -bound);
    for (;;) {
        IntVec sum(v.size(), 0);
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) sum[j] += c[i] * gens[i][j];
        if (sum == v) return true;
        size_t i = 0;
        while (i < c.size() && ++c[i] > bound) c[i++] = -bound;
        if (i == c.size()) return false;
    }
}

// Count cosets of the lattice generated by gens inside a window, by
// union-find over pairwise difference membership.
inline int count_cosets_bruteforce(const std::vector<IntVec>& gens,
                                   const std::vector<IntVec>& window, int bound) {
    std::vector<int> parent(window.size());
    for (size_t i = 0; i < window.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < window.size(); ++i)
        for (size_t j = i + 1; j < window.size(); ++j)
            if (in_span_bruteforce(gens, vec_sub(window[i], window[j]), bound)) {
                int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                if (a != b) parent[a] = b;
            }
    int classes = 0;
    for (size_t i = 0; i < window.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++classes;
    return classes;
}

// Exhaustive tiling enumeration over all k-tuples of position subsets,
// for |Q| <= 20 or so. Subset-DP reformulation of uplus(F_j + A_j) = E:
// a subset is admissible when its placements are collapse-free and pairwise
// disjoint; tuples must have disjoint masks whose union is exactly E.
inline std::vector<Solution> naive_tilings(const FiniteInstance& inst,
                                           bool require_origin) {
    const int nq = static_cast<int>(inst.Q.size());
    const size_t k = inst.tiles.size();
    using Mask = std::uint64_t;
    Mask target = 0;
    for (Int c : inst.target) target |= Mask{1} << c;

    // per tile: cover mask of each placement, or invalid on collapse
    std::vector<std::vector<Mask>> place(k);
    std::vector<std::vector<bool>> place_ok(k);
    for (size_t j = 0; j < k; ++j) {
        place[j].resize(static_cast<size_t>(nq));
        place_ok[j].resize(static_cast<size_t>(nq));
        for (Int a = 0; a < nq; ++a) {
            Mask m = 0;
            int covered = 0;
            IntVec va = inst.Q.vec_of(a);
            const Tile& t = inst.tiles[j];
            for (size_t i = 0; i < t.size(); ++i) {
                Int c = inst.Q.cell_of(vec_add(va, t.cell_vec(i)));
                m |= Mask{1} << c;
                ++covered;
            }
            place[j][static_cast<size_t>(a)] = m;
            place_ok[j][static_cast<size_t>(a)] =
                std::popcount(m) == covered;  // no collapse
        }
    }

    // subset DP: admissible(A) and its union mask
    auto build = [&](size_t j) {
        std::vector<Mask> mask(size_t{1} << nq, 0);
        std::vector<bool> ok(size_t{1} << nq, false);
        ok[0] = true;
        for (Mask A = 1; A < (Mask{1} << nq); ++A) {
            int b = std::countr_zero(A);
            Mask rest = A & (A - 1);
            if (!ok[rest] || !place_ok[j][static_cast<size_t>(b)]) continue;
            if (mask[rest] & place[j][static_cast<size_t>(b)]) continue;
            ok[A] = true;
            mask[A] = mask[rest] | place[j][static_cast<size_t>(b)];
        }
        return std::pair{std::move(ok), std::move(mask)};
    };

    auto positions_of = [&](Mask A) {
        std::vector<Int> p;
        for (int b = 0; b < nq; ++b)
            if (A >> b & 1) p.push_back(b);
        return p;
    };

    std::vector<Solution> out;
    Int origin = inst.Q.cell_of(IntVec(static_cast<size_t>(inst.G.dim()), 0));
    if (k == 1) {
        auto [ok, mask] = build(0);
        for (Mask A = 0; A < (Mask{1} << nq); ++A) {
            if (!ok[A] || mask[A] != target) continue;
            if (require_origin && !(A >> origin & 1)) continue;
            out.push_back(Solution{{positions_of(A)}});
        }
    } else if (k == 2) {
        auto [ok1, mask1] = build(0);
        auto [ok2, mask2] = build(1);
        std::multimap<Mask, Mask> by_mask;  // cover mask -> subset A_2
        for (Mask A = 0; A < (Mask{1} << nq); ++A)
            if (ok2[A]) by_mask.emplace(mask2[A], A);
        for (Mask A1 = 0; A1 < (Mask{1} << nq); ++A1) {
            if (!ok1[A1] || (mask1[A1] & ~target)) continue;
            Mask need = target & ~mask1[A1];
            auto [lo, hi] = by_mask.equal_range(need);
            for (auto it = lo; it != hi; ++it) {
                Mask A2 = it->second;
                if (require_origin && !((A1 | A2) >> origin & 1)) continue;
                out.push_back(Solution{{positions_of(A1), positions_of(A2)}});
            }
        }
    } else {
        throw std::logic_error("naive oracle supports k <= 2");
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tilered::oracle
