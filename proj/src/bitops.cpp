#include "tilered/bitops.hpp"

#include <bit>

namespace tilered::bitops {

void or_inplace_scalar(Word* dst, const Word* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void andnot_inplace_scalar(Word* dst, const Word* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

bool intersects_scalar(const Word* a, const Word* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset_scalar(const Word* a, const Word* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool equal_scalar(const Word* a, const Word* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

size_t popcount(const Word* a, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += static_cast<size_t>(std::popcount(a[i]));
    return c;
}

void (*or_inplace)(Word*, const Word*, size_t) = or_inplace_scalar;
void (*andnot_inplace)(Word*, const Word*, size_t) = andnot_inplace_scalar;
bool (*intersects)(const Word*, const Word*, size_t) = intersects_scalar;
bool (*is_subset)(const Word*, const Word*, size_t) = is_subset_scalar;
bool (*equal)(const Word*, const Word*, size_t) = equal_scalar;

namespace {

Backend g_backend = Backend::Scalar;

bool avx2_available() {
#if defined(__x86_64__) && defined(TILERED_HAVE_AVX2_BUILD)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct Init {
    Init() {
        if (avx2_available()) select_backend(Backend::Avx2);
    }
} g_init;

}  // namespace

Backend active_backend() { return g_backend; }

bool select_backend(Backend b) {
    if (b == Backend::Scalar) {
        or_inplace = or_inplace_scalar;
        andnot_inplace = andnot_inplace_scalar;
        intersects = intersects_scalar;
        is_subset = is_subset_scalar;
        equal = equal_scalar;
        g_backend = b;
        return true;
    }
#if defined(__x86_64__) && defined(TILERED_HAVE_AVX2_BUILD)
    if (!avx2_available()) return false;
    or_inplace = or_inplace_avx2;
    andnot_inplace = andnot_inplace_avx2;
    intersects = intersects_avx2;
    is_subset = is_subset_avx2;
    equal = equal_avx2;
    g_backend = b;
    return true;
#else
    return false;
#endif
}

std::string backend_name() { return g_backend == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace tilered::bitops
