#include <doctest.h>

#include <random>

#include "tilered/bitops.hpp"

using namespace tilered::bitops;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, size_t n, int density) {
    std::vector<Word> w(n);
    for (auto& x : w) {
        x = rng();
        for (int i = 1; i < density; ++i) x &= rng();  // sparser with higher density
    }
    return w;
}

}  // namespace

TEST_CASE("scalar kernels against std::bitset-style reference") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 9;  // cover sub-AVX2 and multi-vector lengths
        auto a = random_words(rng, n, 1 + trial % 3);
        auto b = random_words(rng, n, 1 + trial % 3);

        auto or_ref = a;
        for (size_t i = 0; i < n; ++i) or_ref[i] |= b[i];
        auto got = a;
        or_inplace_scalar(got.data(), b.data(), n);
        CHECK(got == or_ref);

        auto andnot_ref = a;
        for (size_t i = 0; i < n; ++i) andnot_ref[i] &= ~b[i];
        got = a;
        andnot_inplace_scalar(got.data(), b.data(), n);
        CHECK(got == andnot_ref);

        bool inter_ref = false, subset_ref = true;
        for (size_t i = 0; i < n; ++i) {
            if (a[i] & b[i]) inter_ref = true;
            if (a[i] & ~b[i]) subset_ref = false;
        }
        CHECK(intersects_scalar(a.data(), b.data(), n) == inter_ref);
        CHECK(is_subset_scalar(a.data(), b.data(), n) == subset_ref);
        CHECK(equal_scalar(a.data(), b.data(), n) == (a == b));
        CHECK(equal_scalar(a.data(), a.data(), n));
    }
}

#if defined(__x86_64__)
TEST_CASE("avx2 kernels match the scalar reference") {
    if (!select_backend(Backend::Avx2)) {
        MESSAGE("AVX2 not available on this CPU; skipping");
        return;
    }
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng() % 13;
        auto a = random_words(rng, n, 1 + trial % 3);
        auto b = random_words(rng, n, 1 + trial % 3);

        auto s = a;
        or_inplace_scalar(s.data(), b.data(), n);
        auto v = a;
        or_inplace_avx2(v.data(), b.data(), n);
        CHECK(s == v);

        s = a;
        andnot_inplace_scalar(s.data(), b.data(), n);
        v = a;
        andnot_inplace_avx2(v.data(), b.data(), n);
        CHECK(s == v);

        CHECK(intersects_avx2(a.data(), b.data(), n) ==
              intersects_scalar(a.data(), b.data(), n));
        CHECK(is_subset_avx2(a.data(), b.data(), n) ==
              is_subset_scalar(a.data(), b.data(), n));
        CHECK(equal_avx2(a.data(), b.data(), n) == equal_scalar(a.data(), b.data(), n));

        // forced-true subset/equal cases, which random words rarely hit
        auto c = a;
        for (size_t i = 0; i < n; ++i) c[i] |= b[i];
        CHECK(is_subset_avx2(a.data(), c.data(), n));
        CHECK(equal_avx2(c.data(), c.data(), n));
    }
    select_backend(Backend::Avx2);  // leave the default in place
}
#endif

TEST_CASE("backend selection") {
    Backend initial = active_backend();
    REQUIRE(select_backend(Backend::Scalar));
    CHECK(active_backend() == Backend::Scalar);
    CHECK(backend_name() == "scalar");
    if (select_backend(Backend::Avx2)) CHECK(backend_name() == "avx2");
    select_backend(initial);
}

TEST_CASE("BitSet operations") {
    BitSet a(130), b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    b.set(64);
    CHECK(a.count() == 3);
    CHECK(a.test(64));
    CHECK(a.intersects_with(b));
    CHECK(b.subset_of(a));
    CHECK_FALSE(a.subset_of(b));

    BitSet c = a;
    c.andnot_with(b);
    CHECK(c.count() == 2);
    CHECK_FALSE(c.test(64));
    c.or_with(b);
    CHECK(c == a);
}
