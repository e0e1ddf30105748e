#include "zmds/vecsys.hpp"

#include <algorithm>

namespace zmds {
namespace {

void validate(const VectorSystem& sys) {
    if (sys.n == 0 || sys.k == 0 || sys.vecs.empty()) fail(errc::bad_input, "malformed system");
    for (const auto& v : sys.vecs)
        if (v.size() != sys.n) fail(errc::shape_mismatch, "vector length differs from n");
}

bool next_comb(std::vector<uint32_t>& idx, uint32_t m) {
    uint32_t s = uint32_t(idx.size());
    for (uint32_t i = s; i-- > 0;) {
        if (idx[i] + (s - i) < m) {
            ++idx[i];
            for (uint32_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_index_set(const VectorSystem& sys, const std::vector<uint32_t>& I) {
    if (I.empty()) fail(errc::empty_index_set, "the index set is empty");
    for (size_t t = 0; t < I.size(); ++t) {
        if (I[t] >= sys.m()) fail(errc::bad_input, "row index out of range");
        if (t && I[t - 1] >= I[t]) fail(errc::bad_input, "row indices must be sorted and distinct");
    }
}

// lhs of condition (ii) for the index set I
uint64_t sum_lhs(const VectorSystem& sys, const std::vector<uint32_t>& I) {
    uint64_t lhs = 0;
    for (uint32_t i : I) lhs += sys.k - vec_weight(sys.vecs[i]);
    return lhs + vec_weight(meet(sys, I));
}

SystemCheck check_impl(const VectorSystem& sys, bool coord_bound) {
    validate(sys);
    for (uint32_t i = 0; i < sys.m(); ++i) {
        uint64_t w = vec_weight(sys.vecs[i]);
        if (w > uint64_t(sys.k) - 1) {
            return {false, SystemWitness{SystemViolation::multiplicity_bound, {i}, w,
                                         uint64_t(sys.k) - 1, 0}};
        }
    }
    if (coord_bound) {
        for (uint32_t i = 0; i < sys.m(); ++i)
            for (uint32_t j = 0; j + 1 < sys.n; ++j)
                if (sys.vecs[i][j] > 1) {
                    return {false, SystemWitness{SystemViolation::coordinate_bound, {i},
                                                 sys.vecs[i][j], 1, j}};
                }
    }
    for (uint32_t s = 1; s <= sys.m(); ++s) {
        std::vector<uint32_t> I(s);
        for (uint32_t i = 0; i < s; ++i) I[i] = i;
        do {
            uint64_t lhs = sum_lhs(sys, I);
            if (lhs > sys.k)
                return {false, SystemWitness{SystemViolation::sum_bound, I, lhs, sys.k, 0}};
        } while (next_comb(I, sys.m()));
    }
    return {true, std::nullopt};
}

}  // namespace

VectorSystem system_from(uint32_t n, uint32_t k, std::vector<std::vector<uint32_t>> vecs) {
    if (n == 0) fail(errc::bad_input, "ambient dimension must be positive");
    if (k == 0) fail(errc::bad_input, "degree target must be positive");
    if (vecs.empty()) fail(errc::bad_input, "a system needs at least one vector");
    for (const auto& v : vecs)
        if (v.size() != n) fail(errc::shape_mismatch, "every vector must have length n");
    return {n, k, std::move(vecs)};
}

uint64_t vec_weight(const std::vector<uint32_t>& v) {
    uint64_t w = 0;
    for (uint32_t e : v) w += e;
    return w;
}

std::vector<uint32_t> meet(const VectorSystem& sys, const std::vector<uint32_t>& I) {
    validate(sys);
    check_index_set(sys, I);
    std::vector<uint32_t> out = sys.vecs[I[0]];
    for (size_t t = 1; t < I.size(); ++t)
        for (uint32_t j = 0; j < sys.n; ++j) out[j] = std::min(out[j], sys.vecs[I[t]][j]);
    return out;
}

SystemCheck check_vk(const VectorSystem& sys) { return check_impl(sys, false); }

SystemCheck check_vstar(const VectorSystem& sys) { return check_impl(sys, true); }

std::vector<std::vector<uint32_t>> tight_sets(const VectorSystem& sys) {
    validate(sys);
    if (!check_vk(sys).satisfied)
        fail(errc::condition_violated, "tightness is defined only for satisfying systems");
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t s = 1; s <= sys.m(); ++s) {
        std::vector<uint32_t> I(s);
        for (uint32_t i = 0; i < s; ++i) I[i] = i;
        do {
            if (sum_lhs(sys, I) == sys.k) out.push_back(I);
        } while (next_comb(I, sys.m()));
    }
    return out;
}

VectorSystem lemma_divide(const VectorSystem& sys, uint32_t j) {
    validate(sys);
    if (j >= sys.n) fail(errc::bad_input, "coordinate out of range");
    for (const auto& v : sys.vecs)
        if (v[j] == 0)
            fail(errc::precondition_violated, "every row needs multiplicity at that coordinate");
    VectorSystem out = sys;
    out.k = sys.k - 1;
    for (auto& v : out.vecs) --v[j];
    return out;
}

TightSplit lemma_tight_split(const VectorSystem& sys, const std::vector<uint32_t>& I) {
    check_index_set(sys, I);
    if (!check_vk(sys).satisfied)
        fail(errc::condition_violated, "splitting is defined only for satisfying systems");
    if (I.size() < 2 || I.size() >= sys.m())
        fail(errc::trivial_split, "need 1 < |I| < m for a proper split");
    if (sum_lhs(sys, I) != sys.k) fail(errc::not_tight, "the index set is not tight");

    TightSplit out;
    out.left.n = out.right.n = sys.n;
    out.left.k = out.right.k = sys.k;
    size_t t = 0;
    for (uint32_t i = 0; i < sys.m(); ++i) {
        if (t < I.size() && I[t] == i) {
            out.right.vecs.push_back(sys.vecs[i]);
            ++t;
        } else {
            out.left.vecs.push_back(sys.vecs[i]);
        }
    }
    out.left.vecs.push_back(meet(sys, I));
    return out;
}

VectorSystem lemma_merge_last(const VectorSystem& sys) {
    validate(sys);
    if (sys.n < 2) fail(errc::ambient_too_small, "need two coordinates to merge");
    VectorSystem out;
    out.n = sys.n - 1;
    out.k = sys.k;
    for (const auto& v : sys.vecs) {
        std::vector<uint32_t> w(v.begin(), v.end() - 1);
        w.back() += v.back();
        out.vecs.push_back(std::move(w));
    }
    return out;
}

IncrementResult lemma_increment_last(const VectorSystem& sys) {
    validate(sys);
    if (sys.n >= sys.k)
        fail(errc::precondition_violated, "the step applies only when n < k");
    const auto& last = sys.vecs.back();
    for (uint32_t j = 0; j + 1 < sys.n; ++j)
        if (last[j] != 1)
            fail(errc::precondition_violated, "the last row must be all ones except its tail");
    if (last.back() != 0)
        fail(errc::precondition_violated, "the last row must end in zero");

    IncrementResult out{sys, FormalPoly::constant(sys.n, 1)};
    ++out.sys.vecs.back().back();
    FormalPoly x = FormalPoly::var_x(sys.n);
    for (uint32_t j = 0; j + 1 < sys.n; ++j)
        out.extra = out.extra * (x - FormalPoly::var_a(sys.n, j));
    return out;
}

}  // namespace zmds
