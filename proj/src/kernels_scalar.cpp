#include "zmds/kernels.hpp"

namespace zmds {
namespace {

void axpy_mod_u32_s(uint32_t* y, const uint32_t* x, size_t n, uint32_t c, uint32_t p) {
    for (size_t i = 0; i < n; ++i) y[i] = uint32_t((y[i] + uint64_t(c) * x[i]) % p);
}

void add_mod_u32_s(uint32_t* y, const uint32_t* x, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t s = y[i] + x[i];
        y[i] = s >= p ? s - p : s;
    }
}

void scale_mod_u32_s(uint32_t* y, size_t n, uint32_t c, uint32_t p) {
    for (size_t i = 0; i < n; ++i) y[i] = uint32_t(uint64_t(c) * y[i] % p);
}

void xor_u8_s(uint8_t* y, const uint8_t* x, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] ^= x[i];
}

void gf2m_muladd_u8_s(uint8_t* y, const uint8_t* x, size_t n, const uint8_t* nib32) {
    for (size_t i = 0; i < n; ++i) y[i] ^= uint8_t(nib32[x[i] & 15] ^ nib32[16 + (x[i] >> 4)]);
}

size_t count_nonzero_u8_s(const uint8_t* x, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += x[i] != 0;
    return c;
}

size_t count_nonzero_u32_s(const uint32_t* x, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += x[i] != 0;
    return c;
}

}  // namespace

const Kernels& Kernels::scalar() {
    static const Kernels k = {axpy_mod_u32_s, add_mod_u32_s,      scale_mod_u32_s,
                              xor_u8_s,       gf2m_muladd_u8_s,   count_nonzero_u8_s,
                              count_nonzero_u32_s};
    return k;
}

}  // namespace zmds
