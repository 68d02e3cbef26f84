#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tilered::bitops {

using Word = std::uint64_t;

// scalar reference kernels
void or_inplace_scalar(Word* dst, const Word* src, size_t n);
void andnot_inplace_scalar(Word* dst, const Word* src, size_t n);  // dst &= ~src
bool intersects_scalar(const Word* a, const Word* b, size_t n);
bool is_subset_scalar(const Word* a, const Word* b, size_t n);     // a subset of b
bool equal_scalar(const Word* a, const Word* b, size_t n);
size_t popcount(const Word* a, size_t n);

#if defined(__x86_64__)
void or_inplace_avx2(Word* dst, const Word* src, size_t n);
void andnot_inplace_avx2(Word* dst, const Word* src, size_t n);
bool intersects_avx2(const Word* a, const Word* b, size_t n);
bool is_subset_avx2(const Word* a, const Word* b, size_t n);
bool equal_avx2(const Word* a, const Word* b, size_t n);
#endif

// runtime-dispatched entry points (AVX2 when the CPU has it)
extern void (*or_inplace)(Word*, const Word*, size_t);
extern void (*andnot_inplace)(Word*, const Word*, size_t);
extern bool (*intersects)(const Word*, const Word*, size_t);
extern bool (*is_subset)(const Word*, const Word*, size_t);
extern bool (*equal)(const Word*, const Word*, size_t);

enum class Backend { Scalar, Avx2 };
Backend active_backend();
bool select_backend(Backend b);  // false if unavailable on this CPU
std::string backend_name();

// Fixed-width bit set over the dispatched kernels.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    size_t size() const { return bits_; }
    size_t word_count() const { return words_.size(); }
    Word* data() { return words_.data(); }
    const Word* data() const { return words_.data(); }

    void set(size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
    void reset(size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void or_with(const BitSet& o) { or_inplace(data(), o.data(), word_count()); }
    void andnot_with(const BitSet& o) { andnot_inplace(data(), o.data(), word_count()); }
    bool intersects_with(const BitSet& o) const {
        return intersects(data(), o.data(), word_count());
    }
    bool subset_of(const BitSet& o) const { return is_subset(data(), o.data(), word_count()); }
    bool operator==(const BitSet& o) const {
        return bits_ == o.bits_ && equal(data(), o.data(), word_count());
    }
    size_t count() const { return popcount(data(), word_count()); }

private:
    size_t bits_ = 0;
    std::vector<Word> words_;
};

}  // namespace tilered::bitops
