#include "tilered/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

namespace tilered {

using bitops::BitSet;

FiniteInstance build_instance(const QuotientGroup& G, const Lattice& P,
                              std::vector<Tile> tiles,
                              const std::optional<std::vector<IntVec>>& target) {
    Lattice M = sum_lattice(G.kernel(), P);
    if (M.rank() < G.dim())
        throw std::invalid_argument("infinite quotient: L + P has rank below d");
    FiniteInstance inst(G, P, FiniteQuotient(M));
    for (auto& t : tiles) {
        if (t.empty()) throw std::invalid_argument("empty tile");
        if (t.dim() != G.dim()) throw std::invalid_argument("tile dimension mismatch");
    }
    inst.tiles = std::move(tiles);
    for (const auto& t : inst.tiles) {
        std::vector<Int> cells;
        for (size_t i = 0; i < t.size(); ++i) cells.push_back(inst.Q.cell_of(t.cell_vec(i)));
        std::sort(cells.begin(), cells.end());
        size_t before = cells.size();
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        inst.feasible.push_back(cells.size() == before);  // projection collapse
        inst.tile_cells.push_back(std::move(cells));
    }
    if (target) {
        std::vector<Int> cells;
        for (const auto& v : *target) cells.push_back(inst.Q.cell_of(v));
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        inst.target = std::move(cells);
        inst.target_is_all = static_cast<Int>(inst.target.size()) == inst.Q.size();
    } else {
        inst.target.resize(static_cast<size_t>(inst.Q.size()));
        for (Int c = 0; c < inst.Q.size(); ++c) inst.target[static_cast<size_t>(c)] = c;
    }
    return inst;
}

namespace {

struct Row {
    int tile = 0;
    Int pos = 0;
    BitSet mask;  // over target columns
};

struct CoverProblem {
    size_t ncols = 0;
    std::vector<Row> rows;
    std::vector<std::vector<int>> col_rows;  // row ids per column
    Int origin_pos = -1;                     // cell id of 0 in Q
};

CoverProblem build_cover(const FiniteInstance& inst) {
    CoverProblem cp;
    cp.ncols = inst.target.size();
    std::vector<Int> col_of(static_cast<size_t>(inst.Q.size()), -1);
    for (size_t i = 0; i < inst.target.size(); ++i)
        col_of[static_cast<size_t>(inst.target[i])] = static_cast<Int>(i);
    cp.origin_pos = inst.Q.cell_of(IntVec(inst.G.dim(), 0));

    const int k = static_cast<int>(inst.tiles.size());
    for (int j = 0; j < k; ++j) {
        if (!inst.feasible[j]) continue;
        for (Int a = 0; a < inst.Q.size(); ++a) {
            IntVec va = inst.Q.vec_of(a);
            BitSet mask(cp.ncols);
            bool ok = true;
            for (Int fc : inst.tile_cells[static_cast<size_t>(j)]) {
                Int c = inst.Q.cell_of(vec_add(va, inst.Q.vec_of(fc)));
                Int col = col_of[static_cast<size_t>(c)];
                if (col < 0) {  // covers a cell outside E
                    ok = false;
                    break;
                }
                mask.set(static_cast<size_t>(col));
            }
            if (ok) cp.rows.push_back(Row{j, a, std::move(mask)});
        }
    }
    cp.col_rows.resize(cp.ncols);
    for (int r = 0; r < static_cast<int>(cp.rows.size()); ++r)
        for (size_t c = 0; c < cp.ncols; ++c)
            if (cp.rows[static_cast<size_t>(r)].mask.test(c)) cp.col_rows[c].push_back(r);
    return cp;
}

struct Searcher {
    const CoverProblem& cp;
    int k;
    SolveMode mode;
    bool require_origin;
    BitSet covered;
    std::vector<int> chosen;
    size_t remaining;
    SolutionSet out;
    bool stop = false;

    Searcher(const CoverProblem& p, int k_, SolveMode m, bool ro)
        : cp(p), k(k_), mode(m), require_origin(ro), covered(p.ncols), remaining(p.ncols) {}

    void record() {
        if (require_origin) {
            bool has = false;
            for (int r : chosen)
                if (cp.rows[static_cast<size_t>(r)].pos == cp.origin_pos) has = true;
            if (!has) return;
        }
        ++out.count;
        if (mode != SolveMode::Count) {
            Solution s;
            s.positions.resize(static_cast<size_t>(k));
            for (int r : chosen) {
                const Row& row = cp.rows[static_cast<size_t>(r)];
                s.positions[static_cast<size_t>(row.tile)].push_back(row.pos);
            }
            for (auto& p : s.positions) std::sort(p.begin(), p.end());
            out.solutions.push_back(std::move(s));
            if (mode == SolveMode::First) stop = true;
        }
    }

    // column with the fewest placements compatible with current cover
    int pick_column(std::vector<int>& active) const {
        int best = -1;
        size_t best_n = SIZE_MAX;
        std::vector<int> best_active;
        for (size_t c = 0; c < cp.ncols; ++c) {
            if (covered.test(c)) continue;
            std::vector<int> act;
            for (int r : cp.col_rows[c])
                if (!cp.rows[static_cast<size_t>(r)].mask.intersects_with(covered))
                    act.push_back(r);
            if (act.size() < best_n) {
                best_n = act.size();
                best = static_cast<int>(c);
                best_active = std::move(act);
                if (best_n == 0) break;
            }
        }
        active = std::move(best_active);
        return best;
    }

    void run() {
        if (stop) return;
        if (remaining == 0) {
            record();
            return;
        }
        std::vector<int> active;
        if (pick_column(active) < 0) return;
        for (int r : active) {
            if (stop) return;
            place(r);
            run();
            unplace(r);
        }
    }

    void place(int r) {
        const Row& row = cp.rows[static_cast<size_t>(r)];
        covered.or_with(row.mask);
        remaining -= row.mask.count();
        chosen.push_back(r);
    }

    void unplace(int r) {
        const Row& row = cp.rows[static_cast<size_t>(r)];
        covered.andnot_with(row.mask);
        remaining += row.mask.count();
        chosen.pop_back();
    }
};

int worker_count(int jobs) {
    if (jobs <= 0) {
        if (const char* env = std::getenv("TILERED_JOBS")) {
            jobs = std::atoi(env);
            if (jobs <= 0) throw std::invalid_argument("TILERED_JOBS must be positive");
        }
    }
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(jobs, 1);
}

}  // namespace

SolutionSet solve(const FiniteInstance& inst, SolveMode mode, bool require_origin,
                  int jobs) {
    const int k = static_cast<int>(inst.tiles.size());
    CoverProblem cp = build_cover(inst);

    if (cp.ncols == 0) {
        // empty target: the unique cover is the empty placement set
        SolutionSet out;
        if (!require_origin) {
            out.count = 1;
            if (mode != SolveMode::Count)
                out.solutions.push_back(Solution{std::vector<std::vector<Int>>(
                    static_cast<size_t>(k))});
        }
        return out;
    }

    int W = worker_count(jobs);
    Searcher root(cp, k, mode, require_origin);
    std::vector<int> first_active;
    int first_col = root.pick_column(first_active);
    if (first_col < 0 || first_active.empty()) return {};

    SolutionSet merged;
    if (W == 1 || first_active.size() <= 1 || mode == SolveMode::First) {
        root.run();
        merged = std::move(root.out);
    } else {
        size_t nw = std::min<size_t>(static_cast<size_t>(W), first_active.size());
        std::vector<SolutionSet> partial(nw);
        std::vector<std::thread> threads;
        for (size_t wi = 0; wi < nw; ++wi) {
            threads.emplace_back([&, wi] {
                Searcher s(cp, k, mode, require_origin);
                for (size_t idx = wi; idx < first_active.size(); idx += nw) {
                    s.place(first_active[idx]);
                    s.run();
                    s.unplace(first_active[idx]);
                }
                partial[wi] = std::move(s.out);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& p : partial) {
            merged.count += p.count;
            for (auto& s : p.solutions) merged.solutions.push_back(std::move(s));
        }
    }
    std::sort(merged.solutions.begin(), merged.solutions.end());
    return merged;
}

TilingCheck is_tiling(const FiniteInstance& inst,
                      const std::vector<std::vector<Int>>& candidate) {
    TilingCheck res;
    if (candidate.size() != inst.tiles.size()) {
        res.reason = "candidate tuple arity mismatch";
        return res;
    }
    std::vector<int> count(static_cast<size_t>(inst.Q.size()), 0);
    for (size_t j = 0; j < candidate.size(); ++j) {
        for (Int a : candidate[j]) {
            if (a < 0 || a >= inst.Q.size()) {
                res.reason = "position outside quotient";
                return res;
            }
            IntVec va = inst.Q.vec_of(a);
            // count with multiplicity so a collapsed tile shows as double cover
            const Tile& t = inst.tiles[j];
            for (size_t i = 0; i < t.size(); ++i) {
                Int c = inst.Q.cell_of(vec_add(va, t.cell_vec(i)));
                ++count[static_cast<size_t>(c)];
            }
        }
    }
    std::vector<char> in_target(static_cast<size_t>(inst.Q.size()), 0);
    for (Int c : inst.target) in_target[static_cast<size_t>(c)] = 1;
    for (Int c = 0; c < inst.Q.size(); ++c) {
        int n = count[static_cast<size_t>(c)];
        if (in_target[static_cast<size_t>(c)]) {
            if (n == 0) {
                res.reason = "uncovered cell " + vec_to_string(inst.Q.vec_of(c));
                res.witness_cell = c;
                return res;
            }
            if (n > 1) {
                res.reason = "doubly covered cell " + vec_to_string(inst.Q.vec_of(c));
                res.witness_cell = c;
                return res;
            }
        } else if (n > 0) {
            res.reason = "covered cell outside target " + vec_to_string(inst.Q.vec_of(c));
            res.witness_cell = c;
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace tilered
