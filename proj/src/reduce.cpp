#include "tilered/reduce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tilered {

namespace {

void sort_dedup(std::vector<IntVec>& v) {
    std::sort(v.begin(), v.end(),
              [](const IntVec& a, const IntVec& b) { return compare_lex(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PeriodicSetTuple PeriodicSetTuple::canonical(int d, std::vector<std::vector<IntVec>> base,
                                             Lattice period) {
    if (period.dim() != d) throw std::invalid_argument("period dimension mismatch");
    if (period.rank() < d)
        throw std::invalid_argument("period lattice must have full rank");
    PeriodicSetTuple t;
    t.d = d;
    t.period = std::move(period);
    for (auto& comp : base) {
        for (auto& b : comp) b = t.period.rep(b);
        sort_dedup(comp);
        t.base.push_back(std::move(comp));
    }
    return t;
}

bool PeriodicSetTuple::invariant_under(const IntVec& t) const {
    for (const auto& comp : base) {
        for (const auto& b : comp) {
            IntVec shifted = period.rep(vec_add(b, t));
            if (!std::binary_search(comp.begin(), comp.end(), shifted,
                                    [](const IntVec& a, const IntVec& c) {
                                        return compare_lex(a, c) < 0;
                                    }))
                return false;
        }
    }
    return true;
}

std::vector<Tile> normalize_tiles(std::vector<Tile> F) {
    for (auto& f : F) {
        if (f.empty()) throw std::invalid_argument("cannot normalize an empty tile");
        IntVec least = f.cell_vec(0);  // cells are sorted lexicographically
        IntVec neg(least.size());
        for (size_t i = 0; i < least.size(); ++i) neg[i] = checked_sub(0, least[i]);
        f = f.translated(neg);
    }
    return F;
}

ReductionInstance reduce_tiles(const QuotientGroup& G, std::vector<Tile> F) {
    const int d = G.dim();
    if (d < 2) throw std::invalid_argument("d=1 unsupported by the reduction");
    const int k = static_cast<int>(F.size());
    if (k == 0) throw std::invalid_argument("at least one tile is required");

    ReductionInstance inst;
    inst.G = G;
    for (auto& f : F) {
        if (f.empty()) throw std::invalid_argument("tiles must be nonempty");
        // canonicalize over Gamma
        std::vector<IntVec> cells;
        for (size_t i = 0; i < f.size(); ++i) cells.push_back(G.rep(f.cell_vec(i)));
        f = Tile::from_cells(d, std::move(cells));
        if (!f.contains(IntVec(d, 0)))
            throw std::invalid_argument(
                "each tile must contain 0; apply normalize_tiles first");
    }
    inst.F = std::move(F);
    inst.R = build_rigid(d, 2 * k, G.kernel());

    const Int N = inst.R.N;
    for (int j = 0; j < k; ++j) {
        // N * lift(F_j \ {0}) (+) T_j
        std::vector<Tile> parts;
        for (size_t i = 0; i < inst.F[j].size(); ++i) {
            IntVec u = inst.F[j].cell_vec(i);
            if (is_zero(u)) continue;
            parts.push_back(inst.R.Tj[static_cast<size_t>(j)].translated(vec_scale(N, u)));
        }
        parts.push_back(inst.R.Tj[static_cast<size_t>(k + j)]);
        Tile ftilde = Tile::disjoint_union(parts);  // throws if the union is not disjoint
        if (ftilde.size() != inst.F[j].size() * inst.R.T.size())
            throw std::logic_error("|tilde F_j| != |F_j| * N^d");
        inst.Ftilde.push_back(std::move(ftilde));
    }
    return inst;
}

PeriodicSetTuple lift_cotiles(const QuotientGroup& G, const PeriodicSetTuple& A, Int N) {
    if (A.d != G.dim()) throw std::invalid_argument("tuple dimension mismatch");
    Lattice full = sum_lattice(G.kernel(), A.period);
    if (full.rank() < G.dim())
        throw std::invalid_argument("non-finite-index period on the quotient side");
    Lattice tilde_period = scale_lattice(N, full);
    std::vector<std::vector<IntVec>> base;
    for (const auto& comp : A.base) {
        std::vector<IntVec> lifted;
        for (const auto& b : comp) lifted.push_back(vec_scale(N, G.rep(b)));
        base.push_back(std::move(lifted));
    }
    return PeriodicSetTuple::canonical(G.dim(), std::move(base), std::move(tilde_period));
}

PeriodicSetTuple project_cotiles(const QuotientGroup& G, const PeriodicSetTuple& At, Int N) {
    if (At.d != G.dim()) throw std::invalid_argument("tuple dimension mismatch");
    const int d = G.dim();
    // the period lattice must sit inside N Z^d
    for (const auto& w : At.period.basis())
        for (Int x : w)
            if (x % N != 0)
                throw std::invalid_argument("period lattice not contained in N Z^d");

    for (size_t j = 0; j < At.base.size(); ++j) {
        for (const auto& b : At.base[j])
            for (Int x : b)
                if (mod_floor(x, N) != 0)
                    throw std::invalid_argument(
                        "component " + std::to_string(j + 1) + " not contained in N Z^d, witness " +
                        vec_to_string(b));
        // NL-periodicity: shifting by N*w must permute the base
        for (const auto& w : G.kernel().basis()) {
            for (const auto& b : At.base[j]) {
                IntVec shifted = At.period.rep(vec_add(b, vec_scale(N, w)));
                if (!std::binary_search(At.base[j].begin(), At.base[j].end(), shifted,
                                        [](const IntVec& a, const IntVec& c) {
                                            return compare_lex(a, c) < 0;
                                        }))
                    throw std::invalid_argument(
                        "component " + std::to_string(j + 1) + " not NL-periodic, witness " +
                        vec_to_string(b));
            }
        }
    }

    std::vector<IntVec> down_gens;
    for (const auto& w : At.period.basis()) {
        IntVec g(d);
        for (int i = 0; i < d; ++i) g[i] = w[i] / N;
        down_gens.push_back(std::move(g));
    }
    Lattice down(d, std::move(down_gens));
    Lattice out_period = sum_lattice(G.kernel(), down);
    std::vector<std::vector<IntVec>> base;
    for (const auto& comp : At.base) {
        std::vector<IntVec> proj;
        for (const auto& b : comp) {
            IntVec v(d);
            for (int i = 0; i < d; ++i) v[i] = b[i] / N;
            proj.push_back(G.rep(v));
        }
        base.push_back(std::move(proj));
    }
    return PeriodicSetTuple::canonical(d, std::move(base), std::move(out_period));
}

}  // namespace tilered
