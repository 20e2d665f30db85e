// AVX2 variants.  This translation unit is compiled with -mavx2 and must only
// be entered after a runtime CPU check (see kernels.cpp).

#include "coxeter/kernels.hpp"

#include <immintrin.h>

namespace coxeter::kernels::avx2 {

namespace {

constexpr std::int64_t kNarrow = std::int64_t{1} << 24;

inline __m256i load(const std::int64_t* p) { return _mm256_load_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::int64_t* p, __m256i x) { _mm256_store_si256(reinterpret_cast<__m256i*>(p), x); }

// Lanes outside (-2^24, 2^24) set all bits in the returned accumulator.
inline __m256i out_of_range(__m256i x) {
    const __m256i shifted = _mm256_add_epi64(x, _mm256_set1_epi64x(kNarrow));
    const __m256i hi = _mm256_cmpgt_epi64(shifted, _mm256_set1_epi64x(2 * kNarrow - 1));
    const __m256i lo = _mm256_cmpgt_epi64(_mm256_set1_epi64x(1), shifted);
    return _mm256_or_si256(hi, lo);
}

inline __m256i vec_out_of_range(const Vec& v) {
    return _mm256_or_si256(_mm256_or_si256(out_of_range(load(v.a.data())), out_of_range(load(v.a.data() + 4))),
                           _mm256_or_si256(out_of_range(load(v.b.data())), out_of_range(load(v.b.data() + 4))));
}

inline std::int64_t hsum(__m256i x) {
    alignas(32) std::int64_t t[4];
    store(t, x);
    return t[0] + t[1] + t[2] + t[3];
}

} // namespace

bool combine(const Vec& coeffs, std::span<const Vec> rows, Vec& out) {
    __m256i bad = vec_out_of_range(coeffs);
    for (const Vec& r : rows) bad = _mm256_or_si256(bad, vec_out_of_range(r));
    if (!_mm256_testz_si256(bad, bad)) return false;

    // Products of 24-bit values fit in 48 bits; at most 3 * 8 of them are
    // summed per lane, so no accumulator can overflow.
    __m256i a0 = _mm256_setzero_si256(), a1 = a0, b0 = a0, b1 = a0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const __m256i sa = _mm256_set1_epi64x(coeffs.a[i]);
        const __m256i sb = _mm256_set1_epi64x(coeffs.b[i]);
        const Vec& r = rows[i];
        const __m256i ra0 = load(r.a.data()), ra1 = load(r.a.data() + 4);
        const __m256i rb0 = load(r.b.data()), rb1 = load(r.b.data() + 4);
        const __m256i bb0 = _mm256_mul_epi32(sb, rb0), bb1 = _mm256_mul_epi32(sb, rb1);
        a0 = _mm256_add_epi64(a0, _mm256_add_epi64(_mm256_mul_epi32(sa, ra0), bb0));
        a1 = _mm256_add_epi64(a1, _mm256_add_epi64(_mm256_mul_epi32(sa, ra1), bb1));
        b0 = _mm256_add_epi64(b0, _mm256_add_epi64(_mm256_add_epi64(_mm256_mul_epi32(sa, rb0), _mm256_mul_epi32(sb, ra0)), bb0));
        b1 = _mm256_add_epi64(b1, _mm256_add_epi64(_mm256_add_epi64(_mm256_mul_epi32(sa, rb1), _mm256_mul_epi32(sb, ra1)), bb1));
    }
    store(out.a.data(), a0);
    store(out.a.data() + 4, a1);
    store(out.b.data(), b0);
    store(out.b.data() + 4, b1);
    return true;
}

bool dot(const Vec& x, const Vec& y, GoldenInt& out) {
    const __m256i bad = _mm256_or_si256(vec_out_of_range(x), vec_out_of_range(y));
    if (!_mm256_testz_si256(bad, bad)) return false;
    const __m256i xa0 = load(x.a.data()), xa1 = load(x.a.data() + 4);
    const __m256i xb0 = load(x.b.data()), xb1 = load(x.b.data() + 4);
    const __m256i ya0 = load(y.a.data()), ya1 = load(y.a.data() + 4);
    const __m256i yb0 = load(y.b.data()), yb1 = load(y.b.data() + 4);
    const __m256i bb = _mm256_add_epi64(_mm256_mul_epi32(xb0, yb0), _mm256_mul_epi32(xb1, yb1));
    const __m256i aa = _mm256_add_epi64(_mm256_mul_epi32(xa0, ya0), _mm256_mul_epi32(xa1, ya1));
    const __m256i ab = _mm256_add_epi64(_mm256_add_epi64(_mm256_mul_epi32(xa0, yb0), _mm256_mul_epi32(xa1, yb1)),
                                        _mm256_add_epi64(_mm256_mul_epi32(xb0, ya0), _mm256_mul_epi32(xb1, ya1)));
    out = GoldenInt{hsum(_mm256_add_epi64(aa, bb)), hsum(_mm256_add_epi64(ab, bb))};
    return true;
}

void match_outside(std::span<const Vec> table, const Vec& ref, IndexMask mask, std::vector<std::uint32_t>& out) {
    const int keep = static_cast<int>(~mask & 0xFFU);
    const __m256i ra0 = load(ref.a.data()), ra1 = load(ref.a.data() + 4);
    const __m256i rb0 = load(ref.b.data()), rb1 = load(ref.b.data() + 4);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Vec& v = table[i];
        const int ma = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(load(v.a.data()), ra0))) |
                       (_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(load(v.a.data() + 4), ra1))) << 4);
        const int mb = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(load(v.b.data()), rb0))) |
                       (_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(load(v.b.data() + 4), rb1))) << 4);
        if ((ma & mb & keep) == keep) out.push_back(static_cast<std::uint32_t>(i));
    }
}

} // namespace coxeter::kernels::avx2
