// AVX2 kernel variants. Compiled with -mavx2 -mfma; only reached after the
// runtime CPU check in Kernels::active().
//
// Modular arithmetic uses exact double-precision division: with p < 2^26 all
// intermediate values stay below 2^52, so products and remainders are exact
// integers in doubles, and the quotient guess from one multiply by 1/p is off
// by at most one step, fixed up with two blends.

#include <immintrin.h>

#include "zmds/kernels.hpp"

namespace zmds {
namespace {

// r[i] = t[i] mod p for integer-valued doubles 0 <= t < 2^52
inline __m256d mod_pd(__m256d t, __m256d vp, __m256d vinvp) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinvp));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);  // t - q*p, exact
    __m256d rp = _mm256_add_pd(r, vp);
    r = _mm256_blendv_pd(r, rp, r);  // r < 0 (sign bit set): add p
    __m256d rm = _mm256_sub_pd(r, vp);
    __m256d ge = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
    return _mm256_blendv_pd(r, rm, ge);
}

void axpy_mod_u32_v(uint32_t* y, const uint32_t* x, size_t n, uint32_t c, uint32_t p) {
    const __m256d vp = _mm256_set1_pd(double(p));
    const __m256d vinvp = _mm256_set1_pd(1.0 / double(p));
    const __m256d vc = _mm256_set1_pd(double(c));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
        __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
        __m256d xd = _mm256_cvtepi32_pd(xi);
        __m256d yd = _mm256_cvtepi32_pd(yi);
        __m256d t = _mm256_fmadd_pd(vc, xd, yd);
        __m128i r = _mm256_cvtpd_epi32(mod_pd(t, vp, vinvp));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), r);
    }
    for (; i < n; ++i) y[i] = uint32_t((y[i] + uint64_t(c) * x[i]) % p);
}

void add_mod_u32_v(uint32_t* y, const uint32_t* x, size_t n, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(int(p));
    const __m256i vpm1 = _mm256_set1_epi32(int(p) - 1);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i s = _mm256_add_epi32(a, b);
        __m256i over = _mm256_cmpgt_epi32(s, vpm1);
        s = _mm256_sub_epi32(s, _mm256_and_si256(over, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), s);
    }
    for (; i < n; ++i) {
        uint32_t s = y[i] + x[i];
        y[i] = s >= p ? s - p : s;
    }
}

void scale_mod_u32_v(uint32_t* y, size_t n, uint32_t c, uint32_t p) {
    const __m256d vp = _mm256_set1_pd(double(p));
    const __m256d vinvp = _mm256_set1_pd(1.0 / double(p));
    const __m256d vc = _mm256_set1_pd(double(c));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
        __m256d t = _mm256_mul_pd(vc, _mm256_cvtepi32_pd(yi));
        __m128i r = _mm256_cvtpd_epi32(mod_pd(t, vp, vinvp));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), r);
    }
    for (; i < n; ++i) y[i] = uint32_t(uint64_t(c) * y[i] % p);
}

void xor_u8_v(uint8_t* y, const uint8_t* x, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) y[i] ^= x[i];
}

void gf2m_muladd_u8_v(uint8_t* y, const uint8_t* x, size_t n, const uint8_t* nib32) {
    const __m256i tlo = _mm256_broadcastsi128_si256(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(nib32)));
    const __m256i thi = _mm256_broadcastsi128_si256(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(nib32 + 16)));
    const __m256i mask = _mm256_set1_epi8(0x0f);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i lo = _mm256_and_si256(v, mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), mask);
        __m256i prod = _mm256_xor_si256(_mm256_shuffle_epi8(tlo, lo),
                                        _mm256_shuffle_epi8(thi, hi));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), _mm256_xor_si256(a, prod));
    }
    for (; i < n; ++i) y[i] ^= uint8_t(nib32[x[i] & 15] ^ nib32[16 + (x[i] >> 4)]);
}

size_t count_nonzero_u8_v(const uint8_t* x, size_t n) {
    size_t zeros = 0, i = 0;
    const __m256i z = _mm256_setzero_si256();
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        uint32_t m = uint32_t(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, z)));
        zeros += size_t(__builtin_popcount(m));
    }
    size_t nz = (i - zeros);
    for (; i < n; ++i) nz += x[i] != 0;
    return nz;
}

size_t count_nonzero_u32_v(const uint32_t* x, size_t n) {
    size_t zeros = 0, i = 0;
    const __m256i z = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i eq = _mm256_cmpeq_epi32(v, z);
        uint32_t m = uint32_t(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
        zeros += size_t(__builtin_popcount(m));
    }
    size_t nz = (i - zeros);
    for (; i < n; ++i) nz += x[i] != 0;
    return nz;
}

}  // namespace

const Kernels& Kernels::avx2() {
    static const Kernels k = {axpy_mod_u32_v, add_mod_u32_v,      scale_mod_u32_v,
                              xor_u8_v,       gf2m_muladd_u8_v,   count_nonzero_u8_v,
                              count_nonzero_u32_v};
    return k;
}

}  // namespace zmds
