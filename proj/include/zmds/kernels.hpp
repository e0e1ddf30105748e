#pragma once

#include <cstddef>
#include <cstdint>

namespace zmds {

// Hot inner loops on raw element buffers. One scalar reference implementation
// and one AVX2 implementation per routine; the active set is picked once at
// startup from CPU support (override: set ZMDS_FORCE_SCALAR=1). All variants
// compute bit-identical results and are tested against each other.
//
// Modular routines require p < 2^26 (the AVX2 path reciprocal-divides in
// doubles); every supported field order is far below that.
struct Kernels {
    // y[i] = (y[i] + c * x[i]) mod p
    void (*axpy_mod_u32)(uint32_t* y, const uint32_t* x, size_t n, uint32_t c, uint32_t p);
    // y[i] = (y[i] + x[i]) mod p
    void (*add_mod_u32)(uint32_t* y, const uint32_t* x, size_t n, uint32_t p);
    // y[i] = (c * y[i]) mod p
    void (*scale_mod_u32)(uint32_t* y, size_t n, uint32_t c, uint32_t p);
    // y[i] ^= x[i]
    void (*xor_u8)(uint8_t* y, const uint8_t* x, size_t n);
    // y[i] ^= table-driven c*x[i] over GF(2^m), m <= 8; nib32 is the field's
    // 32-byte lo/hi nibble product table for the scalar c
    void (*gf2m_muladd_u8)(uint8_t* y, const uint8_t* x, size_t n, const uint8_t* nib32);
    size_t (*count_nonzero_u8)(const uint8_t* x, size_t n);
    size_t (*count_nonzero_u32)(const uint32_t* x, size_t n);

    static const Kernels& scalar();
    static const Kernels& avx2();   // valid only if avx2_available()
    static const Kernels& active();
};

bool avx2_available();

}  // namespace zmds
