#include "tilered/rigid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tilered {

namespace {

Int inf_norm(std::span<const Int> v) {
    Int n = 0;
    for (Int x : v) n = std::max(n, std::llabs(x));
    return n;
}

// Assign frame radii 1..q to grid cells so that no frame contains the
// origin: radius i is forbidden at a cell whose distance to 0 is exactly i.
std::vector<int> assign_radii_to_cells(const std::vector<Int>& cell_dist) {
    const int q = static_cast<int>(cell_dist.size());
    std::vector<int> cell_of_radius(q, -1);
    std::vector<char> used(q, 0);
    auto ok = [&](int radius, int cell) { return cell_dist[cell] != radius; };
    // simple backtracking; each radius conflicts with at most one cell
    auto rec = [&](auto&& self, int radius) -> bool {
        if (radius > q) return true;
        for (int c = 0; c < q; ++c) {
            if (used[c] || !ok(radius, c)) continue;
            used[c] = 1;
            cell_of_radius[radius - 1] = c;
            if (self(self, radius + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    if (!rec(rec, 1)) throw std::logic_error("frame packing assignment failed");
    return cell_of_radius;
}

IntVec unit_vec(int d, int i) {
    IntVec e(d, 0);
    e[i] = 1;
    return e;
}

}  // namespace

RigidTileSet build_rigid(int d, int s, const Lattice& L) {
    if (d < 2)
        throw std::invalid_argument(
            "d=1 unsupported: the rigid construction is defined for d >= 2");
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (L.dim() != d) throw std::invalid_argument("kernel lattice dimension mismatch");

    RigidTileSet R;
    R.d = d;
    R.s = s;
    R.L = L;
    R.r = L.rank();
    R.q = d + R.r * s;
    const int q = R.q;
    const int b = 2 * q + 1;                                     // block side
    const int g = static_cast<int>(std::ceil(std::sqrt(double(q))));
    R.m = (g * b) / 2;                                           // = ceil((g*b-1)/2)
    R.N = 2 * static_cast<Int>(R.m) + 1;

    // grid cells in the first two coordinates, one reserved block per frame
    std::vector<IntVec> cell_pos;
    std::vector<Int> cell_dist;
    for (int c = 0; c < q; ++c) {
        IntVec v(d, 0);
        v[0] = -R.m + q + static_cast<Int>(b) * (c % g);
        v[1] = -R.m + q + static_cast<Int>(b) * (c / g);
        cell_dist.push_back(inf_norm(v));
        cell_pos.push_back(std::move(v));
    }
    std::vector<int> cell_of_radius = assign_radii_to_cells(cell_dist);
    for (int i = 1; i <= q; ++i) R.v.push_back(cell_pos[cell_of_radius[i - 1]]);

    for (int i = 1; i <= q; ++i) {
        if (inf_norm(R.v[i - 1]) + q > R.m)
            throw std::logic_error("packing violates v_i + B_q inside B_m");
        if (inf_norm(R.v[i - 1]) == i)
            throw std::logic_error("packing places the origin on a frame");
    }

    // T = (B_m \ dents) |+| bumps, dents at v_i + S_i, bumps displaced by N*e_i
    std::vector<Tile> frames(q + 1);
    for (int i = 1; i <= q; ++i) frames[i] = frame(d, i);

    std::vector<Tile> dents;
    for (int i = 1; i <= d; ++i) dents.push_back(frames[i].translated(R.v[i - 1]));
    Tile dent_union = Tile::disjoint_union(dents);
    Tile body = Tile::difference(box(d, R.m), dent_union);
    if (body.size() + dent_union.size() != box(d, R.m).size())
        throw std::logic_error("dent frames must lie inside B_m");

    std::vector<Tile> parts{body};
    for (int i = 1; i <= d; ++i) {
        IntVec shift = vec_add(vec_scale(R.N, unit_vec(d, i - 1)), R.v[i - 1]);
        parts.push_back(frames[i].translated(shift));
    }
    R.T = Tile::disjoint_union(parts);

    const auto& w = R.L.basis();
    for (int j = 1; j <= s; ++j) {
        std::vector<Tile> jdents;
        for (int l = 1; l <= R.r; ++l) {
            int idx = d + R.r * (j - 1) + l;
            jdents.push_back(frames[idx].translated(R.v[idx - 1]));
        }
        if (jdents.empty()) {
            R.Tj.push_back(R.T);  // r = 0: T_j = T
            continue;
        }
        Tile jdent_union = Tile::disjoint_union(jdents);
        Tile jbody = Tile::difference(R.T, jdent_union);
        if (jbody.size() + jdent_union.size() != R.T.size())
            throw std::logic_error("T_j dent frames must lie inside T");
        std::vector<Tile> jparts{jbody};
        for (int l = 1; l <= R.r; ++l) {
            int idx = d + R.r * (j - 1) + l;
            IntVec shift = vec_add(vec_scale(R.N, w[l - 1]), R.v[idx - 1]);
            jparts.push_back(frames[idx].translated(shift));
        }
        R.Tj.push_back(Tile::disjoint_union(jparts));
    }

    if (!R.T.contains(IntVec(d, 0))) throw std::logic_error("0 must be in T");
    for (const auto& tj : R.Tj)
        if (!tj.contains(IntVec(d, 0))) throw std::logic_error("0 must be in T_j");
    return R;
}

bool tile_is_fundamental_domain(const Tile& T, Int N) {
    Int expect = 1;
    for (int i = 0; i < T.dim(); ++i) expect = checked_mul(expect, N);
    if (static_cast<Int>(T.size()) != expect) return false;
    std::unordered_set<IntVec, SpanHash> residues;
    for (size_t i = 0; i < T.size(); ++i) {
        auto c = T.cell(i);
        IntVec r(T.dim());
        for (int j = 0; j < T.dim(); ++j) r[j] = mod_floor(c[j], N);
        if (!residues.insert(std::move(r)).second) return false;
    }
    return true;
}

bool verify_rigid_fundamental(const RigidTileSet& R, int window_radius) {
    if (window_radius < R.N)
        throw std::invalid_argument("window_radius must be at least N");
    return tile_is_fundamental_domain(R.T, R.N);
}

bool shift_equality_holds(const Tile& T, const Tile& Tj, const Lattice& L, Int N,
                          int window_radius) {
    (void)window_radius;
    if (L.rank() == 0) return T == Tj;
    const int d = T.dim();
    // group cells of Tj by residue mod N; then t in Tj (+) NL iff exactly one
    // same-residue cell t' has (t - t')/N in L (and symmetrically)
    auto check = [&](const Tile& A, const Tile& B) {
        std::unordered_map<IntVec, std::vector<size_t>, SpanHash> classes;
        for (size_t i = 0; i < B.size(); ++i) {
            auto c = B.cell(i);
            IntVec r(d);
            for (int j = 0; j < d; ++j) r[j] = mod_floor(c[j], N);
            classes[r].push_back(i);
        }
        for (size_t i = 0; i < A.size(); ++i) {
            auto c = A.cell(i);
            IntVec r(d);
            for (int j = 0; j < d; ++j) r[j] = mod_floor(c[j], N);
            auto it = classes.find(r);
            if (it == classes.end()) return false;
            int reps = 0;
            for (size_t bi : it->second) {
                auto cb = B.cell(bi);
                IntVec diff(d);
                for (int j = 0; j < d; ++j) diff[j] = (c[j] - cb[j]) / N;
                if (L.contains(diff)) ++reps;
            }
            if (reps != 1) return false;
        }
        return true;
    };
    return check(T, Tj) && check(Tj, T);
}

bool verify_shift_equality(const RigidTileSet& R, int window_radius) {
    int needed = default_window_radius(R);
    if (window_radius < needed)
        throw std::invalid_argument("window_radius too small: need at least " +
                                    std::to_string(needed));
    for (const auto& tj : R.Tj)
        if (!shift_equality_holds(R.T, tj, R.L, R.N, window_radius)) return false;
    return true;
}

bool frames_mutually_non_embeddable(int d, int q) {
    for (int i = 1; i <= q; ++i) {
        Tile Si = frame(d, i);
        for (int j = 1; j <= q; ++j) {
            if (i == j) continue;
            Tile Sj = frame(d, j);
            if (Si.size() > Sj.size()) continue;  // cannot embed a larger set
            int span = j - i;
            if (span < 0) span = 0;
            Tile offsets = box(d, span);
            for (size_t o = 0; o < offsets.size(); ++o) {
                IntVec t = offsets.cell_vec(o);
                bool inside = true;
                for (size_t c = 0; c < Si.size() && inside; ++c)
                    inside = Sj.contains(vec_add(Si.cell_vec(c), t));
                if (inside) return false;
            }
        }
    }
    return true;
}

bool dent_is_unique(const RigidTileSet& R, int i) {
    // dents 1..d belong to T itself, the rest to the T_j that carries them
    const Tile& host =
        i <= R.d ? R.T : R.Tj[static_cast<size_t>((i - R.d - 1) / R.r)];
    Tile Si = frame(R.d, i);
    Tile candidates = box(R.d, R.m - i);  // t + S_i inside B_m
    bool found_v = false;
    for (size_t o = 0; o < candidates.size(); ++o) {
        IntVec t = candidates.cell_vec(o);
        bool disjoint = true;
        for (size_t c = 0; c < Si.size() && disjoint; ++c)
            disjoint = !host.contains(vec_add(Si.cell_vec(c), t));
        if (disjoint) {
            if (t != R.v[i - 1]) return false;
            found_v = true;
        }
    }
    return found_v;
}

int default_window_radius(const RigidTileSet& R) {
    Int supp = 0;
    for (size_t i = 0; i < R.T.size(); ++i) supp = std::max(supp, inf_norm(R.T.cell(i)));
    for (const auto& tj : R.Tj)
        for (size_t i = 0; i < tj.size(); ++i) supp = std::max(supp, inf_norm(tj.cell(i)));
    Int maxw = 0;
    for (const auto& w : R.L.basis()) maxw = std::max(maxw, inf_norm(w));
    return static_cast<int>(supp + R.N * (maxw + 1));
}

}  // namespace tilered
