#include "zmds/gfmat.hpp"

#include <utility>

#include "zmds/kernels.hpp"

namespace zmds {

void gf_row_axpy(const Field& f, uint32_t* dst, const uint32_t* src, size_t len, uint32_t c) {
    if (c == 0 || len == 0) return;
    if (f.degree() == 1) {
        if (c == 1)
            Kernels::active().add_mod_u32(dst, src, len, f.order());
        else
            Kernels::active().axpy_mod_u32(dst, src, len, c, f.order());
        return;
    }
    if (f.characteristic() == 2 && c == 1) {
        Kernels::active().xor_u8(reinterpret_cast<uint8_t*>(dst),
                                 reinterpret_cast<const uint8_t*>(src), len * 4);
        return;
    }
    for (size_t i = 0; i < len; ++i) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

GfMat gf_identity(const Field& f, size_t k) {
    GfMat m(f, k, k);
    for (size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

uint32_t gf_det_inplace(GfMat& m) {
    if (m.rows != m.cols) fail(errc::shape_mismatch, "determinant needs a square matrix");
    const Field& f = m.f;
    size_t n = m.rows;
    uint32_t det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (size_t j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = f.neg(det);
        }
        uint32_t pv = m.at(c, c);
        det = f.mul(det, pv);
        uint32_t pinv = f.inv(pv);
        for (size_t r = c + 1; r < n; ++r) {
            uint32_t x = m.at(r, c);
            if (!x) continue;
            m.at(r, c) = 0;
            gf_row_axpy(f, m.row(r) + c + 1, m.row(c) + c + 1, n - c - 1,
                        f.neg(f.mul(x, pinv)));
        }
    }
    return det;
}

size_t gf_rank_inplace(GfMat& m) {
    const Field& f = m.f;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        uint32_t pinv = f.inv(m.at(r, c));
        for (size_t rr = r + 1; rr < m.rows; ++rr) {
            uint32_t x = m.at(rr, c);
            if (!x) continue;
            m.at(rr, c) = 0;
            gf_row_axpy(f, m.row(rr) + c + 1, m.row(r) + c + 1, m.cols - c - 1,
                        f.neg(f.mul(x, pinv)));
        }
        ++r;
    }
    return r;
}

GfMat gf_mul(const GfMat& x, const GfMat& y) {
    if (!x.f.same_as(y.f)) fail(errc::field_mismatch, "matrix product across fields");
    if (x.cols != y.rows) fail(errc::shape_mismatch, "inner dimensions disagree");
    GfMat z(x.f, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t l = 0; l < x.cols; ++l) {
            uint32_t c = x.at(i, l);
            if (c) gf_row_axpy(x.f, z.row(i), y.row(l), y.cols, c);
        }
    return z;
}

GfMat gf_transpose(const GfMat& m) {
    GfMat t(m.f, m.cols, m.rows);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

std::optional<GfMat> gf_inverse(GfMat m) {
    if (m.rows != m.cols) fail(errc::shape_mismatch, "inverse needs a square matrix");
    const Field& f = m.f;
    size_t n = m.rows;
    GfMat inv = gf_identity(f, n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        }
        uint32_t pinv = f.inv(m.at(c, c));
        for (size_t j = 0; j < n; ++j) {
            m.at(c, j) = f.mul(m.at(c, j), pinv);
            inv.at(c, j) = f.mul(inv.at(c, j), pinv);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            uint32_t x = m.at(r, c);
            if (!x) continue;
            uint32_t mult = f.neg(x);
            gf_row_axpy(f, m.row(r), m.row(c), n, mult);
            gf_row_axpy(f, inv.row(r), inv.row(c), n, mult);
        }
    }
    return inv;
}

}  // namespace zmds
