#include "tilered/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace tilered {

namespace {

void row_axpy(IntVec& target, Int c, const IntVec& src) {
    for (size_t i = 0; i < target.size(); ++i)
        target[i] = checked_sub(target[i], checked_mul(c, src[i]));
}

}  // namespace

std::vector<IntVec> hermite_basis(int d, std::vector<IntVec> gens) {
    if (d <= 0) throw std::invalid_argument("dimension must be positive");
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != d)
            throw std::invalid_argument("generator dimension mismatch");

    std::vector<IntVec> rows = std::move(gens);
    size_t top = 0;  // rows above `top` are finished pivot rows
    for (int col = 0; col < d && top < rows.size(); ++col) {
        // Euclidean elimination in this column over rows[top..]
        for (;;) {
            size_t best = rows.size();
            for (size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    std::llabs(rows[i][col]) < std::llabs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;  // column is zero below top
            std::swap(rows[top], rows[best]);
            // keep the pivot positive so floor_div leaves remainders in [0, pivot)
            if (rows[top][col] < 0)
                for (auto& x : rows[top]) x = checked_sub(0, x);
            bool clean = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floor_div(rows[i][col], rows[top][col]);
                row_axpy(rows[i], q, rows[top]);
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) {
                // reduce entries above the pivot into [0, pivot)
                for (size_t i = 0; i < top; ++i) {
                    Int q = floor_div(rows[i][col], rows[top][col]);
                    if (q != 0) row_axpy(rows[i], q, rows[top]);
                }
                ++top;
                break;
            }
        }
    }
    rows.resize(top);
    return rows;
}

Lattice::Lattice(int d, std::vector<IntVec> gens) : d_(d) {
    basis_ = hermite_basis(d, std::move(gens));
    for (const auto& row : basis_) {
        int col = 0;
        while (row[col] == 0) ++col;
        pivot_cols_.push_back(col);
    }
}

IntVec Lattice::rep(IntVec v) const {
    if (static_cast<int>(v.size()) != d_)
        throw std::invalid_argument("vector dimension mismatch");
    for (size_t i = 0; i < basis_.size(); ++i) {
        int p = pivot_cols_[i];
        Int q = floor_div(v[p], basis_[i][p]);
        if (q != 0)
            for (int c = p; c < d_; ++c)
                v[c] = checked_sub(v[c], checked_mul(q, basis_[i][c]));
    }
    return v;
}

bool Lattice::contains(const IntVec& v) const { return is_zero(rep(v)); }

std::optional<Int> Lattice::index() const {
    if (rank() < d_) return std::nullopt;
    Int det = 1;
    for (int i = 0; i < d_; ++i) det = checked_mul(det, basis_[i][i]);
    return det;
}

std::vector<IntVec> free_generators(const Lattice& L) { return L.basis(); }

Lattice sum_lattice(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimension mismatch");
    std::vector<IntVec> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Lattice(a.dim(), std::move(gens));
}

Lattice scale_lattice(Int c, const Lattice& a) {
    std::vector<IntVec> gens;
    gens.reserve(a.basis().size());
    for (const auto& w : a.basis()) gens.push_back(vec_scale(c, w));
    return Lattice(a.dim(), std::move(gens));
}

QuotientGroup::QuotientGroup(int d, Lattice kernel) : d_(d), kernel_(std::move(kernel)) {
    if (kernel_.dim() != d_) throw std::invalid_argument("kernel dimension mismatch");
}

IntVec QuotientGroup::rep(const IntVec& v) const { return kernel_.rep(v); }

std::vector<IntVec> QuotientGroup::lift_to_D(const std::vector<IntVec>& S) const {
    std::vector<IntVec> out;
    out.reserve(S.size());
    for (const auto& s : S) out.push_back(rep(s));
    return out;
}

FiniteQuotient::FiniteQuotient(Lattice M) : M_(std::move(M)) {
    if (M_.rank() < M_.dim())
        throw std::invalid_argument("quotient is infinite: lattice rank below dimension");
    size_ = 1;
    for (int i = 0; i < M_.dim(); ++i) {
        pivots_.push_back(M_.basis()[i][i]);
        size_ = checked_mul(size_, pivots_.back());
    }
}

Int FiniteQuotient::cell_of(const IntVec& v) const {
    IntVec r = M_.rep(v);
    Int id = 0;
    for (int i = 0; i < M_.dim(); ++i) id = checked_add(checked_mul(id, pivots_[i]), r[i]);
    return id;
}

IntVec FiniteQuotient::vec_of(Int cell) const {
    IntVec v(M_.dim());
    for (int i = M_.dim() - 1; i >= 0; --i) {
        v[i] = cell % pivots_[i];
        cell /= pivots_[i];
    }
    return v;
}

std::vector<Int> FiniteQuotient::subgroup_image(const std::vector<IntVec>& gens) const {
    std::vector<char> seen(static_cast<size_t>(size_), 0);
    std::vector<Int> stack{0}, out;
    seen[0] = 1;
    while (!stack.empty()) {
        Int c = stack.back();
        stack.pop_back();
        out.push_back(c);
        IntVec v = vec_of(c);
        for (const auto& g : gens) {
            Int n = cell_of(vec_add(v, g));
            if (!seen[static_cast<size_t>(n)]) {
                seen[static_cast<size_t>(n)] = 1;
                stack.push_back(n);
            }
            Int p = cell_of(vec_sub(v, g));
            if (!seen[static_cast<size_t>(p)]) {
                seen[static_cast<size_t>(p)] = 1;
                stack.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Int>> FiniteQuotient::orbits(const std::vector<IntVec>& gens,
                                                     const std::vector<Int>& cells) const {
    std::vector<char> done(static_cast<size_t>(size_), 0);
    std::vector<char> member(static_cast<size_t>(size_), 0);
    for (Int c : cells) member[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<Int>> out;
    for (Int start : cells) {
        if (done[static_cast<size_t>(start)]) continue;
        std::vector<Int> orbit, stack{start};
        done[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            Int c = stack.back();
            stack.pop_back();
            orbit.push_back(c);
            IntVec v = vec_of(c);
            for (const auto& g : gens)
                for (int sgn : {1, -1}) {
                    Int n = cell_of(vec_add(v, vec_scale(sgn, g)));
                    if (!member[static_cast<size_t>(n)])
                        throw std::logic_error("orbit leaves the given cell set");
                    if (!done[static_cast<size_t>(n)]) {
                        done[static_cast<size_t>(n)] = 1;
                        stack.push_back(n);
                    }
                }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace tilered
