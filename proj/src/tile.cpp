#include "tilered/tile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilered {

namespace {

struct CellLess {
    const Int* data;
    int d;
    bool operator()(size_t a, size_t b) const {
        return compare_lex({data + a * d, static_cast<size_t>(d)},
                           {data + b * d, static_cast<size_t>(d)}) < 0;
    }
};

}  // namespace

void Tile::sort_dedup(bool forbid_duplicates) {
    const size_t n = size();
    if (n <= 1) return;
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), CellLess{data_.data(), d_});
    std::vector<Int> out;
    out.reserve(data_.size());
    for (size_t i = 0; i < n; ++i) {
        auto c = cell(order[i]);
        if (i > 0) {
            std::span<const Int> prev{out.data() + out.size() - d_, static_cast<size_t>(d_)};
            if (compare_lex(prev, c) == 0) {
                if (forbid_duplicates)
                    throw std::invalid_argument("sets are not disjoint at cell " +
                                                vec_to_string(c));
                continue;
            }
        }
        out.insert(out.end(), c.begin(), c.end());
    }
    data_ = std::move(out);
}

Tile Tile::from_cells(int d, std::vector<IntVec> cells) {
    Tile t(d);
    t.data_.reserve(cells.size() * d);
    for (const auto& c : cells) {
        if (static_cast<int>(c.size()) != d)
            throw std::invalid_argument("cell dimension mismatch");
        t.data_.insert(t.data_.end(), c.begin(), c.end());
    }
    t.sort_dedup(false);
    return t;
}

Tile Tile::from_sorted_flat(int d, std::vector<Int> flat) {
    if (d <= 0 || flat.size() % d != 0)
        throw std::invalid_argument("flat cell buffer size mismatch");
    Tile t(d);
    t.data_ = std::move(flat);
    return t;
}

std::vector<IntVec> Tile::cells_vec() const {
    std::vector<IntVec> out;
    out.reserve(size());
    for (size_t i = 0; i < size(); ++i) out.push_back(cell_vec(i));
    return out;
}

bool Tile::contains(std::span<const Int> v) const {
    size_t lo = 0, hi = size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        int c = compare_lex(cell(mid), v);
        if (c == 0) return true;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

Tile Tile::translated(const IntVec& t) const {
    if (static_cast<int>(t.size()) != d_)
        throw std::invalid_argument("translation dimension mismatch");
    Tile out(d_);
    out.data_.resize(data_.size());
    for (size_t i = 0; i < size(); ++i)
        for (int j = 0; j < d_; ++j)
            out.data_[i * d_ + j] = checked_add(data_[i * d_ + j], t[j]);
    return out;  // translation preserves lexicographic order
}

Tile Tile::disjoint_union(std::span<const Tile> parts) {
    if (parts.empty()) return Tile();
    Tile out(parts[0].d_);
    size_t total = 0;
    for (const auto& p : parts) {
        if (p.d_ != out.d_) throw std::invalid_argument("tile dimension mismatch");
        total += p.data_.size();
    }
    out.data_.reserve(total);
    for (const auto& p : parts) out.data_.insert(out.data_.end(), p.data_.begin(), p.data_.end());
    out.sort_dedup(true);
    return out;
}

Tile Tile::set_union(const Tile& a, const Tile& b) {
    Tile out(a.d_);
    out.data_ = a.data_;
    out.data_.insert(out.data_.end(), b.data_.begin(), b.data_.end());
    out.sort_dedup(false);
    return out;
}

Tile Tile::difference(const Tile& a, const Tile& b) {
    Tile out(a.d_);
    out.data_.reserve(a.data_.size());
    for (size_t i = 0; i < a.size(); ++i) {
        auto c = a.cell(i);
        if (!b.contains(c)) out.data_.insert(out.data_.end(), c.begin(), c.end());
    }
    return out;
}

Tile box(int d, int n) {
    if (d <= 0 || n < 0) throw std::invalid_argument("box requires d >= 1 and n >= 0");
    const Int side = 2 * static_cast<Int>(n) + 1;
    Int count = 1;
    for (int i = 0; i < d; ++i) count = checked_mul(count, side);
    std::vector<Int> data;
    data.reserve(static_cast<size_t>(count) * d);
    IntVec cur(d, -n);
    for (Int i = 0; i < count; ++i) {
        data.insert(data.end(), cur.begin(), cur.end());
        for (int j = d - 1; j >= 0; --j) {
            if (++cur[j] <= n) break;
            cur[j] = -n;
        }
    }
    return Tile::from_sorted_flat(d, std::move(data));  // generated in lex order
}

Tile frame(int d, int n) {
    if (n < 1) throw std::invalid_argument("frame requires n >= 1");
    return Tile::difference(box(d, n), box(d, n - 1));
}

}  // namespace tilered
