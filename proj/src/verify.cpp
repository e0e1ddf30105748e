#include "zmds/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "zmds/grs.hpp"
#include "zmds/kernels.hpp"

namespace zmds {
namespace {

uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(r);
}

// lexicographic rank -> k-combination of {0..n-1}
std::vector<uint32_t> unrank_comb(uint64_t rank, uint32_t n, uint32_t k) {
    std::vector<uint32_t> out;
    out.reserve(k);
    uint32_t x = 0;
    for (uint32_t i = 0; i < k; ++i) {
        while (true) {
            uint64_t block = binom(n - 1 - x, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        out.push_back(x++);
    }
    return out;
}

bool next_comb(std::vector<uint32_t>& idx, uint32_t n) {
    uint32_t s = uint32_t(idx.size());
    for (uint32_t i = s; i-- > 0;) {
        if (idx[i] + (s - i) < n) {
            ++idx[i];
            for (uint32_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// first singular minor with lex rank in [lo, hi), or nothing
std::optional<MinorWitness> scan_lex_range(const GfMat& a, uint64_t lo, uint64_t hi) {
    uint32_t k = uint32_t(a.rows), n = uint32_t(a.cols);
    std::vector<uint32_t> cols = unrank_comb(lo, n, k);
    GfMat sub(a.f, k, k);
    for (uint64_t rank = lo; rank < hi; ++rank) {
        for (uint32_t r = 0; r < k; ++r)
            for (uint32_t c = 0; c < k; ++c) sub.at(r, c) = a.at(r, cols[c]);
        if (gf_det_inplace(sub) == 0) return MinorWitness{cols, 0};
        if (rank + 1 < hi) next_comb(cols, n);
    }
    return std::nullopt;
}

// Revolving-door enumeration of k-subsets: consecutive visits differ by one
// element swap. L(n,k) = L(n-1,k) then {S + (n-1) : S in reverse L(n-1,k-1)}.
void rd_gen(uint32_t n, uint32_t k, bool rev, std::vector<uint32_t>& cur,
            const std::function<void()>& visit) {
    if (k == 0) {
        visit();
        return;
    }
    if (k == n) {
        for (uint32_t i = 0; i < n; ++i) cur.push_back(i);
        visit();
        cur.resize(cur.size() - n);
        return;
    }
    if (!rev) {
        rd_gen(n - 1, k, false, cur, visit);
        cur.push_back(n - 1);
        rd_gen(n - 1, k - 1, true, cur, visit);
        cur.pop_back();
    } else {
        cur.push_back(n - 1);
        rd_gen(n - 1, k - 1, false, cur, visit);
        cur.pop_back();
        rd_gen(n - 1, k, true, cur, visit);
    }
}

// Minor verification that carries the inverse across single-column swaps.
// A column replacement M' = M with column s := b is nonsingular iff
// u = inv(M)*b has u[s] != 0, and then inv(M') comes from inv(M) by one
// row-scaled elimination sweep.
struct GrayScanner {
    const GfMat& a;
    uint32_t k, n;
    GfMat m, minv;
    std::vector<uint32_t> order;   // matrix position -> column id
    std::vector<uint32_t> prev;    // previous sorted subset
    bool have_state = false;       // inverse valid for prev
    std::vector<MinorWitness> bad;
    std::vector<uint32_t> u;

    explicit GrayScanner(const GfMat& mat)
        : a(mat), k(uint32_t(mat.rows)), n(uint32_t(mat.cols)), m(mat.f, k, k),
          minv(mat.f, k, k), u(k) {}

    void rebuild(const std::vector<uint32_t>& cols) {
        order = cols;
        for (uint32_t r = 0; r < k; ++r)
            for (uint32_t c = 0; c < k; ++c) m.at(r, c) = a.at(r, cols[c]);
        auto inv = gf_inverse(m);
        if (!inv) {
            bad.push_back({cols, 0});
            have_state = false;
            return;
        }
        minv = std::move(*inv);
        have_state = true;
    }

    void step(const std::vector<uint32_t>& cols) {
        if (!have_state) {
            rebuild(cols);
            prev = cols;
            return;
        }
        uint32_t out_col = 0, in_col = 0;
        {
            size_t i = 0, j = 0;
            int outs = 0, ins = 0;
            while (i < prev.size() || j < cols.size()) {
                if (i < prev.size() && (j == cols.size() || prev[i] < cols[j])) {
                    out_col = prev[i++];
                    ++outs;
                } else if (j < cols.size() && (i == prev.size() || cols[j] < prev[i])) {
                    in_col = cols[j++];
                    ++ins;
                } else {
                    ++i;
                    ++j;
                }
            }
            if (outs != 1 || ins != 1) fail(errc::internal, "enumeration lost the swap property");
        }
        const Field& f = a.f;
        uint32_t s = uint32_t(std::find(order.begin(), order.end(), out_col) - order.begin());
        for (uint32_t r = 0; r < k; ++r) {
            uint32_t acc = 0;
            for (uint32_t c = 0; c < k; ++c) acc = f.add(acc, f.mul(minv.at(r, c), a.at(c, in_col)));
            u[r] = acc;
        }
        if (u[s] == 0) {
            bad.push_back({cols, 0});
            have_state = false;  // next subset rebuilds from scratch
            prev = cols;
            return;
        }
        uint32_t g = f.inv(u[s]);
        for (uint32_t c = 0; c < k; ++c) minv.at(s, c) = f.mul(minv.at(s, c), g);
        for (uint32_t r = 0; r < k; ++r) {
            if (r == s || u[r] == 0) continue;
            gf_row_axpy(f, minv.row(r), minv.row(s), k, f.neg(u[r]));
        }
        for (uint32_t r = 0; r < k; ++r) m.at(r, s) = a.at(r, in_col);
        order[s] = in_col;
        prev = cols;
    }
};

}  // namespace

bool verify_zero_pattern(const GfMat& a, const ZeroPattern& pat, ZeroCheckMode mode) {
    if (a.rows != pat.k || a.cols != pat.n)
        fail(errc::shape_mismatch, "matrix and pattern shapes disagree");
    std::vector<char> in(pat.n);
    for (uint32_t i = 0; i < pat.k; ++i) {
        std::fill(in.begin(), in.end(), 0);
        for (uint32_t j : pat.sets[i]) in[j] = 1;
        for (uint32_t j = 0; j < pat.n; ++j) {
            bool zero = a.at(i, j) == 0;
            if (in[j] && !zero) return false;
            if (!in[j] && zero && mode == ZeroCheckMode::strict) return false;
        }
    }
    return true;
}

std::optional<MinorWitness> verify_mds(const GfMat& a, const VerifyOptions& opt) {
    uint32_t k = uint32_t(a.rows), n = uint32_t(a.cols);
    if (k == 0 || k > n) fail(errc::shape_mismatch, "need 1 <= k <= n");
    uint64_t total = binom(n, k);

    if (opt.gray) {
        GrayScanner scan(a);
        std::vector<uint32_t> cur, sorted;
        rd_gen(n, k, false, cur, [&] {
            sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            scan.step(sorted);
        });
        if (scan.bad.empty()) return std::nullopt;
        return *std::min_element(scan.bad.begin(), scan.bad.end(),
                                 [](const MinorWitness& x, const MinorWitness& y) {
                                     return x.cols < y.cols;
                                 });
    }

    unsigned threads = opt.threads ? opt.threads : 1;
    if (threads <= 1 || total < 2 * threads) return scan_lex_range(a, 0, total);

    std::vector<std::optional<MinorWitness>> found(threads);
    std::vector<std::thread> pool;
    std::atomic<uint64_t> stop_before{total};  // ranks past this can quit early
    uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        uint64_t lo = uint64_t(t) * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] {
            if (lo >= stop_before.load(std::memory_order_relaxed)) return;
            found[t] = scan_lex_range(a, lo, hi);
            if (found[t]) {
                uint64_t cur = stop_before.load(std::memory_order_relaxed);
                while (lo < cur &&
                       !stop_before.compare_exchange_weak(cur, lo, std::memory_order_relaxed)) {
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& w : found)
        if (w) return w;  // chunks are in rank order, so first hit is lex-first
    return std::nullopt;
}

uint32_t min_distance(const GfMat& a, uint64_t budget) {
    uint32_t k = uint32_t(a.rows), n = uint32_t(a.cols), q = a.f.order();
    if (k == 0) fail(errc::shape_mismatch, "empty matrix");
    unsigned __int128 words = 1;
    for (uint32_t i = 0; i < k; ++i) {
        words *= q;
        if (words > budget) fail(errc::budget_exceeded, "q^k exceeds the enumeration budget");
    }

    const Field& f = a.f;
    const Kernels& kr = Kernels::active();
    std::vector<uint32_t> cw(n);
    std::vector<uint32_t> digit(k);
    uint32_t best = n + 1;

    // one representative per scaling class: leading coordinate fixed to 1
    for (uint32_t lead = 0; lead < k && best > 0; ++lead) {
        std::copy(a.row(lead), a.row(lead) + n, cw.begin());
        std::fill(digit.begin() + lead + 1, digit.end(), 0u);
        while (true) {
            uint32_t w = uint32_t(kr.count_nonzero_u32(cw.data(), n));
            best = std::min(best, w);
            uint32_t i = lead + 1;
            for (; i < k; ++i) {
                if (digit[i] + 1 < q) {
                    // bump coordinate i by one element step
                    gf_row_axpy(f, cw.data(), a.row(i), n, f.sub(digit[i] + 1, digit[i]));
                    ++digit[i];
                    break;
                }
                gf_row_axpy(f, cw.data(), a.row(i), n, f.sub(0, digit[i]));
                digit[i] = 0;
            }
            if (i == k) break;
        }
    }
    return best;
}

ZeroPattern extract_pattern(const GfMat& a) {
    std::vector<std::vector<uint32_t>> sets(a.rows);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) == 0) sets[i].push_back(uint32_t(j));
    return pattern_from_sets(uint32_t(a.cols), uint32_t(a.rows), std::move(sets));
}

std::vector<FieldFeasibility> min_field_search(const ZeroPattern& pat, uint32_t q_max,
                                               uint64_t tuple_cap) {
    if (!pattern_is_maximal(pat)) fail(errc::pattern_not_maximal, "rows must have size k-1");
    if (!check_mds(pat).satisfied) fail(errc::pattern_violates_mds, "pattern fails the MDS condition");
    uint32_t n = pat.n;
    std::vector<FieldFeasibility> out;
    for (uint32_t q = 2; q <= q_max; ++q) {
        uint32_t p, m;
        if (!prime_power_split(q, p, m)) continue;
        FieldFeasibility rec{q, false, 0};
        if (q < n) {
            out.push_back(rec);
            continue;
        }
        Field f = Field::make(p, m);
        CoeffDetEvaluator ev(pat, f);
        std::vector<uint32_t> alpha(n, 0);

        if (n == 1) {
            rec.tuples_tried = 1;
            rec.feasible = ev.at(alpha) != 0;
            out.push_back(rec);
            continue;
        }

        // Determinant feasibility is invariant under x -> c*x + b on the whole
        // tuple (matrix entries are products of point differences, so det C
        // only picks up a nonzero power of c), so two coordinates can be
        // pinned: alpha_0 = 0, alpha_1 = 1.
        unsigned __int128 count = 1;
        for (uint32_t i = 2; i < n; ++i) count *= (q - i);
        if (count > tuple_cap)
            fail(errc::search_space_too_large, "distinct point tuples exceed the cap");

        alpha[0] = 0;
        alpha[1] = 1;
        std::vector<char> used(q, 0);
        used[0] = used[1] = 1;
        std::vector<uint32_t> pos(n, 0);  // DFS over injective values for slots 2..n-1
        uint32_t depth = 2;
        if (n == 2) {
            rec.tuples_tried = 1;
            rec.feasible = ev.at(alpha) != 0;
        } else {
            pos[2] = 0;
            while (true) {
                if (depth == n) {
                    ++rec.tuples_tried;
                    if (ev.at(alpha) != 0) {
                        rec.feasible = true;
                        break;
                    }
                    --depth;
                    used[alpha[depth]] = 0;
                    pos[depth] = alpha[depth] + 1;
                }
                uint32_t v = pos[depth];
                while (v < q && used[v]) ++v;
                if (v >= q) {
                    if (depth == 2) break;
                    --depth;
                    used[alpha[depth]] = 0;
                    pos[depth] = alpha[depth] + 1;
                    continue;
                }
                alpha[depth] = v;
                used[v] = 1;
                ++depth;
                if (depth < n) pos[depth] = 0;
            }
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace zmds
