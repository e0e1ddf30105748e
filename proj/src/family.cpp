#include "zmds/family.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "zmds/rng.hpp"

namespace zmds {

namespace {

constexpr uint64_t P = kEvalPrime;

uint64_t mul_p(uint64_t a, uint64_t b) { return a * b % P; }

uint64_t pow_p(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, b = mul_p(b, b))
        if (e & 1) r = mul_p(r, b);
    return r;
}

std::vector<uint32_t> random_avals(std::mt19937_64& rng, uint32_t n) {
    std::uniform_int_distribution<uint32_t> dist(0, kEvalPrime - 1);
    std::vector<uint32_t> avals(n);
    for (auto& a : avals) a = dist(rng);
    return avals;
}

// row rank of an r x c matrix mod P, destroying the rows
uint32_t mod_rank(std::vector<std::vector<uint32_t>>& m, uint32_t cols) {
    uint32_t rank = 0;
    for (uint32_t c = 0; c < cols && rank < m.size(); ++c) {
        uint32_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        uint64_t inv = pow_p(m[rank][c], P - 2);
        for (uint32_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            uint64_t f = mul_p(m[i][c], inv);
            for (uint32_t j = c; j < cols; ++j)
                m[i][j] = uint32_t((m[i][j] + P - mul_p(f, m[rank][j])) % P);
        }
        ++rank;
    }
    return rank;
}

void check_members(const std::vector<FormalPoly>& polys, uint32_t n, uint32_t k) {
    for (const auto& p : polys) {
        if (p.nvars() != n)
            fail(errc::shape_mismatch, "family members live over different variable sets");
        if (!p.is_zero() && p.deg_x() >= k)
            fail(errc::bad_input, "member degree exceeds the budget");
    }
}

std::vector<std::vector<uint32_t>> eval_matrix(const std::vector<FormalPoly>& polys,
                                               const std::vector<uint32_t>& avals, uint32_t k) {
    std::vector<std::vector<uint32_t>> m;
    m.reserve(polys.size());
    for (const auto& p : polys) m.push_back(p.eval_coeffs_mod(avals, kEvalPrime, k));
    return m;
}

}  // namespace

FormalPoly root_product(const std::vector<uint32_t>& v) {
    uint32_t n = uint32_t(v.size());
    FormalPoly r = FormalPoly::constant(n, 1);
    FormalPoly x = FormalPoly::var_x(n);
    for (uint32_t j = 0; j < n; ++j) {
        FormalPoly lin = x - FormalPoly::var_a(n, j);
        for (uint32_t t = 0; t < v[j]; ++t) r = r * lin;
    }
    return r;
}

std::vector<FormalPoly> basis_multiples(uint32_t k, const std::vector<uint32_t>& v) {
    if (k == 0) fail(errc::bad_input, "degree budget must be positive");
    uint64_t w = vec_weight(v);
    if (w > k - 1)
        fail(errc::multiplicity_too_large, "total multiplicity leaves no room below degree k");
    FormalPoly x = FormalPoly::var_x(uint32_t(v.size()));
    std::vector<FormalPoly> out;
    out.reserve(size_t(k - w));
    FormalPoly cur = root_product(v);
    for (uint64_t e = 0; e + w < k; ++e) {
        out.push_back(cur);
        if (e + w + 1 < k) cur = cur * x;
    }
    return out;
}

PolyFamily system_family(const VectorSystem& sys) {
    if (sys.n == 0 || sys.k == 0 || sys.vecs.empty()) fail(errc::bad_input, "malformed system");
    PolyFamily fam;
    fam.n = sys.n;
    fam.k = sys.k;
    for (uint32_t i = 0; i < sys.m(); ++i) {
        if (sys.vecs[i].size() != sys.n)
            fail(errc::shape_mismatch, "vector length differs from n");
        auto polys = basis_multiples(sys.k, sys.vecs[i]);
        for (uint32_t e = 0; e < polys.size(); ++e)
            fam.members.push_back({std::move(polys[e]), i, e});
    }
    return fam;
}

IndependenceReport independence_check(const PolyFamily& fam, const IndependenceOptions& opt) {
    if (fam.members.empty()) fail(errc::bad_input, "empty family");
    std::vector<FormalPoly> polys;
    polys.reserve(fam.members.size());
    for (const auto& mem : fam.members) polys.push_back(mem.poly);
    check_members(polys, fam.n, fam.k);
    uint32_t d = fam.size(), k = fam.k;

    if (opt.mode == IndepMode::exact) {
        if (fam.n > 4 || k > 6 || d > 12)
            fail(errc::exact_mode_cap_exceeded,
                 "exact mode is limited to n <= 4, k <= 6 and 12 members");
        // Fraction-free elimination on the coefficient matrix augmented with
        // an identity block; every intermediate entry is a minor of the
        // starting matrix, so the divisions below are exact.
        uint32_t cols = k + d;
        std::vector<std::vector<FormalPoly>> b(
            d, std::vector<FormalPoly>(cols, FormalPoly(fam.n)));
        for (uint32_t i = 0; i < d; ++i) {
            for (uint32_t c = 0; c < k; ++c) b[i][c] = polys[i].coeff_x(c);
            b[i][k + i] = FormalPoly::constant(fam.n, 1);
        }
        FormalPoly prev = FormalPoly::constant(fam.n, 1);
        uint32_t rank = 0;
        for (uint32_t c = 0; c < k && rank < d; ++c) {
            uint32_t piv = rank;
            while (piv < d && b[piv][c].is_zero()) ++piv;
            if (piv == d) continue;
            std::swap(b[piv], b[rank]);
            for (uint32_t i = rank + 1; i < d; ++i) {
                for (uint32_t j = c + 1; j < cols; ++j) {
                    FormalPoly num = b[rank][c] * b[i][j] - b[i][c] * b[rank][j];
                    auto q = exact_div(num, prev);
                    if (!q) fail(errc::internal, "fraction-free division left a remainder");
                    b[i][j] = std::move(*q);
                }
                b[i][c] = FormalPoly(fam.n);
            }
            prev = b[rank][c];
            ++rank;
        }
        IndependenceReport rep;
        rep.independent = (rank == d);
        if (!rep.independent) {
            // the first pivotless row is zero across the coefficient block,
            // so its identity block holds a linear dependence
            std::vector<FormalPoly> w(b[rank].begin() + k, b[rank].end());
            FormalPoly combo(fam.n);
            bool nonzero = false;
            for (uint32_t i = 0; i < d; ++i) {
                nonzero = nonzero || !w[i].is_zero();
                combo = combo + w[i] * polys[i];
            }
            if (!nonzero || !combo.is_zero())
                fail(errc::internal, "dependence certificate failed to verify");
            rep.witness = std::move(w);
        }
        return rep;
    }

    if (opt.trials <= 0) fail(errc::bad_input, "trials must be positive");
    IndependenceReport rep;
    uint64_t degree_sum = 0;
    for (const auto& p : polys) degree_sum += p.total_degree();
    for (int t = 0; t < opt.trials; ++t) {
        auto rng = make_rng(opt.seed, uint64_t(t));
        auto avals = random_avals(rng, fam.n);
        auto m = eval_matrix(polys, avals, k);
        ++rep.trials;
        if (mod_rank(m, k) == d) {
            // a full-rank substitution certifies independence outright
            rep.independent = true;
            return rep;
        }
    }
    // every substitution came up short; if the family were independent, a
    // fixed nonzero d x d minor (degree <= degree_sum) vanished every time
    double miss = std::min(1.0, double(degree_sum) / double(kEvalPrime));
    rep.error_bound = std::pow(miss, rep.trials);
    return rep;
}

uint32_t eval_rank(const std::vector<FormalPoly>& polys, uint32_t k, uint64_t seed, int trials) {
    if (polys.empty()) return 0;
    if (k == 0) fail(errc::bad_input, "degree budget must be positive");
    if (trials <= 0) fail(errc::bad_input, "trials must be positive");
    uint32_t n = polys[0].nvars();
    check_members(polys, n, k);
    uint32_t best = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = make_rng(seed, uint64_t(t));
        auto avals = random_avals(rng, n);
        auto m = eval_matrix(polys, avals, k);
        best = std::max(best, mod_rank(m, k));
        if (best == std::min<uint32_t>(uint32_t(polys.size()), k)) break;
    }
    return best;
}

}  // namespace zmds
