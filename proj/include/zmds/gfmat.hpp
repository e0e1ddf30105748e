#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zmds/field.hpp"

namespace zmds {

// Dense matrix over a single field, elements stored row-major as canonical
// codes. Plain data; all linear algebra lives in free functions.
struct GfMat {
    Field f;
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    GfMat() = default;
    GfMat(Field fld, size_t r, size_t c) : f(std::move(fld)), rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    uint32_t* row(size_t r) { return a.data() + r * cols; }
    const uint32_t* row(size_t r) const { return a.data() + r * cols; }
};

GfMat gf_identity(const Field& f, size_t k);

// Gaussian elimination with the first nonzero pivot in column order;
// deterministic. The _inplace forms clobber the entries but keep the buffers,
// for callers that refill the same matrix in a loop.
uint32_t gf_det_inplace(GfMat& m);
size_t gf_rank_inplace(GfMat& m);
inline uint32_t gf_det(GfMat m) { return gf_det_inplace(m); }
inline size_t gf_rank(GfMat m) { return gf_rank_inplace(m); }

GfMat gf_mul(const GfMat& x, const GfMat& y);
GfMat gf_transpose(const GfMat& m);

// Gauss-Jordan inverse; empty result when singular.
std::optional<GfMat> gf_inverse(GfMat m);

// dst[i] += c * src[i] in field semantics; routes through the dispatch
// kernels where the representation allows it.
void gf_row_axpy(const Field& f, uint32_t* dst, const uint32_t* src, size_t len, uint32_t c);

}  // namespace zmds
