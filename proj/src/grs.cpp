#include "zmds/grs.hpp"

#include <algorithm>
#include <cstring>

#include "zmds/rng.hpp"
#include "zmds/verify.hpp"

namespace zmds {
namespace {

// write the expanded monic product of (x - r) over `roots` into dst[0..k-1]
void poly_from_roots_into(const Field& f, const std::vector<uint32_t>& roots, uint32_t k,
                          uint32_t* dst) {
    std::fill(dst, dst + k, 0u);
    dst[0] = 1;
    uint32_t deg = 0;
    for (uint32_t r : roots) {
        ++deg;
        for (uint32_t e = deg; e >= 1; --e) dst[e] = f.sub(dst[e - 1], f.mul(r, dst[e]));
        dst[0] = f.mul(f.neg(r), dst[0]);
    }
}

void check_distinct(const EvalPoints& pts) {
    std::vector<uint32_t> s = pts.alpha;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        fail(errc::points_not_distinct, "evaluation points repeat");
}

}  // namespace

uint32_t poly_eval(const Field& f, const std::vector<uint32_t>& coeffs, uint32_t x) {
    uint32_t acc = 0;
    for (size_t e = coeffs.size(); e-- > 0;) acc = f.add(f.mul(acc, x), coeffs[e]);
    return acc;
}

CoeffDetEvaluator::CoeffDetEvaluator(const ZeroPattern& pat, Field f)
    : pat_(pat), f_(std::move(f)), c_(f_, pat.k, pat.k) {
    if (!pattern_is_maximal(pat_)) fail(errc::pattern_not_maximal, "rows must have size k-1");
}

uint32_t CoeffDetEvaluator::at(const std::vector<uint32_t>& alpha) {
    for (uint32_t i = 0; i < pat_.k; ++i) {
        roots_.clear();
        for (uint32_t j : pat_.sets[i]) roots_.push_back(alpha[j]);
        poly_from_roots_into(f_, roots_, pat_.k, c_.row(i));
    }
    return gf_det_inplace(c_);
}

std::vector<RowPoly> build_row_polys(const ZeroPattern& pat, const EvalPoints& pts) {
    if (!pattern_is_maximal(pat)) fail(errc::pattern_not_maximal, "rows must have size k-1");
    if (pts.alpha.size() != pat.n) fail(errc::shape_mismatch, "points do not cover the columns");
    check_distinct(pts);
    std::vector<RowPoly> out(pat.k);
    for (uint32_t i = 0; i < pat.k; ++i) {
        RowPoly& rp = out[i];
        rp.row = i;
        for (uint32_t j : pat.sets[i]) rp.roots.push_back(pts.alpha[j]);
        rp.coeffs.resize(pat.k);
        poly_from_roots_into(pts.f, rp.roots, pat.k, rp.coeffs.data());
    }
    return out;
}

GfMat coefficient_matrix(const Field& f, const std::vector<RowPoly>& polys) {
    size_t k = polys.size();
    GfMat c(f, k, k);
    for (size_t i = 0; i < k; ++i) {
        if (polys[i].coeffs.size() != k) fail(errc::shape_mismatch, "row polynomial degree bound");
        std::copy(polys[i].coeffs.begin(), polys[i].coeffs.end(), c.row(i));
    }
    return c;
}

uint32_t det_c_at(const ZeroPattern& pat, const EvalPoints& pts) {
    if (pts.alpha.size() != pat.n) fail(errc::shape_mismatch, "points do not cover the columns");
    CoeffDetEvaluator ev(pat, pts.f);
    return ev.at(pts.alpha);
}

EvalPoints select_points_random(const ZeroPattern& pat, const Field& f, uint32_t max_tries,
                                uint64_t seed) {
    if (!pattern_is_maximal(pat)) fail(errc::pattern_not_maximal, "rows must have size k-1");
    uint32_t q = f.order(), n = pat.n;
    if (q < n) fail(errc::field_too_small, "fewer field elements than columns");
    CoeffDetEvaluator ev(pat, f);
    auto rng = make_rng(seed, 0xa11);
    std::vector<uint32_t> alpha;
    std::vector<char> used(q);
    for (uint32_t t = 0; t < max_tries; ++t) {
        std::fill(used.begin(), used.end(), 0);
        alpha.clear();
        while (alpha.size() < n) {
            uint32_t v = uint32_t(rng() % q);
            if (!used[v]) {
                used[v] = 1;
                alpha.push_back(v);
            }
        }
        if (ev.at(alpha) != 0) return {f, alpha};
    }
    fail(errc::tries_exhausted, "no nonsingular coefficient matrix found");
}

EvalPoints select_points_sequential(const ZeroPattern& pat, const Field& f,
                                    const SequentialOptions& opt) {
    if (!pattern_is_maximal(pat)) fail(errc::pattern_not_maximal, "rows must have size k-1");
    uint32_t n = pat.n, k = pat.k, q = f.order();
    if (uint64_t(q) < uint64_t(n) + k - 1)
        fail(errc::field_too_small, "sequential selection needs q >= n+k-1");

    // det C has degree at most r_j in the j-th point variable (one factor per
    // row whose zero set contains j), so a grid of r_j+1 values per remaining
    // variable is an exact identically-zero test.
    std::vector<uint32_t> r(n, 0);
    for (const auto& s : pat.sets)
        for (uint32_t j : s) ++r[j];

    CoeffDetEvaluator ev(pat, f);
    std::vector<uint32_t> alpha(n, 0), digit(n, 0);
    std::vector<char> used(q, 0);
    auto rng = make_rng(opt.seed, 0x5e9);

    for (uint32_t t = 0; t < n; ++t) {
        uint64_t grid = 1;
        bool exact = true;
        for (uint32_t j = t + 1; j < n && exact; ++j) {
            grid *= r[j] + 1;
            if (grid > opt.grid_budget) exact = false;
        }
        bool found = false;
        for (uint32_t cand = 0; cand < q && !found; ++cand) {
            if (used[cand]) continue;
            alpha[t] = cand;
            bool nonzero = false;
            if (exact) {
                std::fill(digit.begin() + t + 1, digit.end(), 0u);
                while (true) {
                    for (uint32_t j = t + 1; j < n; ++j) alpha[j] = digit[j];
                    if (ev.at(alpha) != 0) {
                        nonzero = true;
                        break;
                    }
                    uint32_t j = t + 1;
                    for (; j < n; ++j) {
                        if (digit[j] < r[j]) {
                            ++digit[j];
                            break;
                        }
                        digit[j] = 0;
                    }
                    if (j == n) break;
                }
            } else {
                for (int trial = 0; trial < opt.prob_trials && !nonzero; ++trial) {
                    for (uint32_t j = t + 1; j < n; ++j) alpha[j] = uint32_t(rng() % q);
                    nonzero = ev.at(alpha) != 0;
                }
            }
            if (nonzero) {
                used[cand] = 1;
                found = true;
                alpha[t] = cand;
            }
        }
        if (!found) {
            if (exact)
                fail(errc::construction_failed, "every candidate value was certifiably bad");
            fail(errc::certification_inconclusive,
                 "probabilistic certificates rejected every candidate");
        }
    }
    return {f, alpha};
}

GeneratorMatrix assemble_matrix(const ZeroPattern& pat, const std::vector<RowPoly>& polys,
                                const EvalPoints& pts) {
    if (polys.size() != pat.k) fail(errc::shape_mismatch, "one polynomial per row required");
    if (pts.alpha.size() != pat.n) fail(errc::shape_mismatch, "points do not cover the columns");
    check_distinct(pts);
    const Field& f = pts.f;
    GeneratorMatrix g;
    g.a = GfMat(f, pat.k, pat.n);
    for (uint32_t i = 0; i < pat.k; ++i)
        for (uint32_t j = 0; j < pat.n; ++j)
            g.a.at(i, j) = poly_eval(f, polys[i].coeffs, pts.alpha[j]);
    g.full = g.a;
    g.requested = pat;
    g.completed = pat;
    g.points = pts;
    g.coeff = coefficient_matrix(f, polys);
    g.det_c = gf_det(g.coeff);
    return g;
}

GeneratorMatrix construct_mds(const ZeroPattern& pat, std::optional<Field> field,
                              const ConstructOptions& opt) {
    auto chk = check_mds(pat);
    if (!chk.satisfied) fail(errc::condition_violated, "pattern fails the MDS condition");
    ZeroPattern comp = complete_to_maximal(pat);
    Field f = field ? *field : Field::smallest_at_least(comp.n + comp.k - 1);
    if (f.order() < comp.n)
        fail(errc::field_too_small, "field cannot host that many distinct points");

    SequentialOptions seq = opt.seq;
    seq.seed = opt.seed;
    EvalPoints pts = opt.mode == PointMode::sequential
                         ? select_points_sequential(comp, f, seq)
                         : select_points_random(comp, f, opt.max_tries, opt.seed);

    GeneratorMatrix g = assemble_matrix(comp, build_row_polys(comp, pts), pts);
    g.requested = pat;

    // never hand back an unchecked matrix
    if (g.det_c == 0) fail(errc::construction_failed, "coefficient matrix singular");
    if (!verify_zero_pattern(g.full, comp, ZeroCheckMode::strict))
        fail(errc::construction_failed, "zero pattern not realized exactly");
    if (verify_mds(g.full)) fail(errc::construction_failed, "a minor came out singular");

    if (comp.n != pat.n) {
        GfMat restr(f, pat.k, pat.n);
        for (uint32_t i = 0; i < pat.k; ++i)
            for (uint32_t j = 0; j < pat.n; ++j) restr.at(i, j) = g.full.at(i, j);
        g.a = std::move(restr);
    }
    return g;
}

}  // namespace zmds
