#pragma once

#include <span>
#include <vector>

#include "tilered/intvec.hpp"

namespace tilered {

// Finite subset of Z^d (or of canonical representatives of a quotient).
// Cells are stored flat, sorted lexicographically, deduplicated.
class Tile {
public:
    Tile() = default;
    explicit Tile(int d) : d_(d) {}

    static Tile from_cells(int d, std::vector<IntVec> cells);
    // caller guarantees flat is row-major, lexicographically sorted, deduped
    static Tile from_sorted_flat(int d, std::vector<Int> flat);

    int dim() const { return d_; }
    size_t size() const { return d_ ? data_.size() / d_ : 0; }
    bool empty() const { return data_.empty(); }

    std::span<const Int> cell(size_t i) const {
        return {data_.data() + i * d_, static_cast<size_t>(d_)};
    }
    IntVec cell_vec(size_t i) const {
        auto c = cell(i);
        return IntVec(c.begin(), c.end());
    }
    std::vector<IntVec> cells_vec() const;

    bool contains(std::span<const Int> v) const;  // binary search
    bool contains(const IntVec& v) const { return contains(std::span<const Int>(v)); }

    Tile translated(const IntVec& t) const;

    bool operator==(const Tile& o) const { return d_ == o.d_ && data_ == o.data_; }

    // Disjoint union; throws if any cell appears in more than one part.
    static Tile disjoint_union(std::span<const Tile> parts);
    // Plain union (no disjointness requirement).
    static Tile set_union(const Tile& a, const Tile& b);
    static Tile difference(const Tile& a, const Tile& b);

    // raw access for bulk construction; cells must end up sorted+deduped
    const std::vector<Int>& flat() const { return data_; }

private:
    void sort_dedup(bool forbid_duplicates);

    int d_ = 0;
    std::vector<Int> data_;
};

// B_n = {-n..n}^d
Tile box(int d, int n);
// S_n = B_n \ B_{n-1}
Tile frame(int d, int n);

}  // namespace tilered
