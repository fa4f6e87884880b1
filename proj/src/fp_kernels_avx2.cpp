#include "bhv/fp_kernels.hpp"

#if defined(BHV_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace bhv::fpk {

namespace {

// 64x64 -> high 64 product per lane, built from 32-bit partial products.
inline __m256i mulhi_epu64(__m256i a, __m256i b) {
    const __m256i lomask = _mm256_set1_epi64x(0xffffffffll);
    __m256i a_lo = _mm256_and_si256(a, lomask);
    __m256i a_hi = _mm256_srli_epi64(a, 32);
    __m256i b_lo = _mm256_and_si256(b, lomask);
    __m256i b_hi = _mm256_srli_epi64(b, 32);

    __m256i ll = _mm256_mul_epu32(a_lo, b_lo);
    __m256i lh = _mm256_mul_epu32(a_lo, b_hi);
    __m256i hl = _mm256_mul_epu32(a_hi, b_lo);
    __m256i hh = _mm256_mul_epu32(a_hi, b_hi);

    __m256i cross = _mm256_add_epi64(
        _mm256_add_epi64(_mm256_srli_epi64(ll, 32),
                         _mm256_and_si256(lh, lomask)),
        _mm256_and_si256(hl, lomask));
    return _mm256_add_epi64(
        _mm256_add_epi64(hh, _mm256_srli_epi64(lh, 32)),
        _mm256_add_epi64(_mm256_srli_epi64(hl, 32),
                         _mm256_srli_epi64(cross, 32)));
}

// Low 64 bits of q * p where p < 2^31.
inline __m256i mullo_by_small(__m256i q, __m256i p) {
    const __m256i lomask = _mm256_set1_epi64x(0xffffffffll);
    __m256i q_lo = _mm256_and_si256(q, lomask);
    __m256i q_hi = _mm256_srli_epi64(q, 32);
    __m256i lo = _mm256_mul_epu32(q_lo, p);
    __m256i hi = _mm256_mul_epu32(q_hi, p);
    return _mm256_add_epi64(lo, _mm256_slli_epi64(hi, 32));
}

// Barrett reduction of t < 2^63 modulo p < 2^31, with mu = floor(2^64 / p).
// q = mulhi(t, mu) satisfies floor(t/p) - 1 <= q <= floor(t/p), so one
// conditional subtract finishes the job.
inline __m256i barrett_mod(__m256i t, __m256i p, __m256i mu) {
    __m256i q = mulhi_epu64(t, mu);
    __m256i r = _mm256_sub_epi64(t, mullo_by_small(q, p));
    // r < 2p < 2^32, so the signed 64-bit compare is safe
    __m256i pm1 = _mm256_sub_epi64(p, _mm256_set1_epi64x(1));
    __m256i ge = _mm256_cmpgt_epi64(r, pm1);
    return _mm256_sub_epi64(r, _mm256_and_si256(ge, p));
}

inline std::uint64_t barrett_mu(std::uint64_t p) {
    // floor(2^64 / p)
    return static_cast<std::uint64_t>((~static_cast<unsigned __int128>(0)) /
                                      p);
}

}  // namespace

void axpy_avx2(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c,
               std::size_t n, std::uint64_t p) {
    if (c == 0) return;
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    const __m256i vmu =
        _mm256_set1_epi64x(static_cast<long long>(barrett_mu(p)));
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<__m256i*>(y + i));
        // c, x < p < 2^31: a single 32x32 multiply is exact
        __m256i prod = _mm256_mul_epu32(vc, vx);
        __m256i t = _mm256_add_epi64(prod, vy);
        __m256i r = barrett_mod(t, vp, vmu);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
    }
    axpy_scalar(y + i, x + i, c, n - i, p);
}

void scal_avx2(std::uint64_t* x, std::uint64_t c, std::size_t n,
               std::uint64_t p) {
    if (c == 1) return;
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    const __m256i vmu =
        _mm256_set1_epi64x(static_cast<long long>(barrett_mu(p)));
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i t = _mm256_mul_epu32(vc, vx);
        __m256i r = barrett_mod(t, vp, vmu);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), r);
    }
    scal_scalar(x + i, c, n - i, p);
}

}  // namespace bhv::fpk

#endif  // BHV_HAVE_AVX2_KERNELS
