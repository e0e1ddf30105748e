// Acceptance gate: end-to-end checks of the construction pipeline, the
// pattern theory, the polynomial-family oracles, and the transformation
// suites. Plain binary, one PASS/FAIL line per criterion, nonzero exit if
// anything fails. Runs in minutes; every random draw is seeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "zmds/errors.hpp"
#include "zmds/family.hpp"
#include "zmds/field.hpp"
#include "zmds/gfmat.hpp"
#include "zmds/grs.hpp"
#include "zmds/lemma_suite.hpp"
#include "zmds/pattern.hpp"
#include "zmds/rng.hpp"
#include "zmds/vecsys.hpp"
#include "zmds/verify.hpp"

using namespace zmds;

namespace {

using Sets = std::vector<std::vector<uint32_t>>;

std::string fmt_sets(const ZeroPattern& pat) {
    std::string s = "n=" + std::to_string(pat.n) + " k=" + std::to_string(pat.k) + " [";
    for (uint32_t i = 0; i < pat.k; ++i) {
        s += i ? " {" : "{";
        for (size_t t = 0; t < pat.sets[i].size(); ++t)
            s += (t ? "," : "") + std::to_string(pat.sets[i][t] + 1);
        s += "}";
    }
    return s + "]";
}

std::string fmt_vecs(const VectorSystem& sys) {
    std::string s = "n=" + std::to_string(sys.n) + " k=" + std::to_string(sys.k) + " [";
    for (uint32_t i = 0; i < sys.m(); ++i) {
        s += i ? " (" : "(";
        for (uint32_t j = 0; j < sys.n; ++j) s += (j ? "," : "") + std::to_string(sys.vecs[i][j]);
        s += ")";
    }
    return s + "]";
}

// all subsets of {0..n-1} with at most cap elements, sorted ascending
Sets subsets_up_to(uint32_t n, uint32_t cap) {
    Sets out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<uint32_t> s;
        for (uint32_t j = 0; j < n; ++j)
            if (mask & (1u << j)) s.push_back(j);
        if (s.size() <= cap) out.push_back(std::move(s));
    }
    return out;
}

std::vector<uint32_t> random_subset(std::mt19937_64& rng, uint32_t n, uint32_t size) {
    std::vector<uint32_t> cols(n);
    for (uint32_t j = 0; j < n; ++j) cols[j] = j;
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(size);
    std::sort(cols.begin(), cols.end());
    return cols;
}

// construct at the default (smallest sufficient) field, then re-verify the
// delivered matrix independently of the pipeline's internal checks
std::string construct_and_audit(const ZeroPattern& pat) {
    GeneratorMatrix g = construct_mds(pat);
    if (g.a.rows != pat.k || g.a.cols != pat.n) return "delivered block has wrong shape";
    if (!verify_zero_pattern(g.a, pat, ZeroCheckMode::one_sided))
        return "prescribed zeros missing from delivered block";
    if (!verify_zero_pattern(g.full, g.completed, ZeroCheckMode::strict))
        return "full matrix does not match its completed pattern exactly";
    if (auto w = verify_mds(g.a)) {
        std::string cols;
        for (uint32_t c : w->cols) cols += std::to_string(c + 1) + " ";
        return "singular minor at columns " + cols;
    }
    return "";
}

// ---------------------------------------------------------------- criterion 1
// Every condition-satisfying pattern with k <= 4, n <= 6 is realized by the
// construction at the default field: exhaustively when the pattern space is
// small, by >= 2000 seeded samples otherwise.
bool a1() {
    const uint64_t exhaustive_cap = 20000;
    uint64_t built = 0, enumerated = 0, sampled_pairs = 0;
    for (uint32_t k = 1; k <= 4; ++k)
        for (uint32_t n = k; n <= 6; ++n) {
            Sets rows = subsets_up_to(n, k - 1);
            uint64_t total = 1;
            for (uint32_t i = 0; i < k; ++i) total *= rows.size();
            if (total <= exhaustive_cap) {
                std::vector<size_t> idx(k, 0);
                while (true) {
                    Sets sets(k);
                    for (uint32_t i = 0; i < k; ++i) sets[i] = rows[idx[i]];
                    ZeroPattern pat = pattern_from_sets(n, k, std::move(sets));
                    ++enumerated;
                    if (check_mds(pat).satisfied) {
                        if (std::string why = construct_and_audit(pat); !why.empty()) {
                            std::printf("A1 FAIL — %s at %s\n", why.c_str(),
                                        fmt_sets(pat).c_str());
                            return false;
                        }
                        ++built;
                    }
                    uint32_t carry = 0;
                    while (carry < k && ++idx[carry] == rows.size()) idx[carry++] = 0;
                    if (carry == k) break;
                }
            } else {
                ++sampled_pairs;
                auto rng = make_rng(0xa1, k * 16 + n);
                int kept = 0;
                while (kept < 2000) {
                    Sets sets(k);
                    for (uint32_t i = 0; i < k; ++i)
                        sets[i] = rows[rng() % rows.size()];
                    ZeroPattern pat = pattern_from_sets(n, k, std::move(sets));
                    if (!check_mds(pat).satisfied) continue;
                    if (std::string why = construct_and_audit(pat); !why.empty()) {
                        std::printf("A1 FAIL — %s at %s\n", why.c_str(), fmt_sets(pat).c_str());
                        return false;
                    }
                    ++kept;
                    ++built;
                }
            }
        }
    std::printf("A1 PASS — constructed %llu satisfying patterns (k<=4, n<=6; %llu enumerated "
                "exhaustively, %llu (k,n) pairs sampled at 2000 each)\n",
                (unsigned long long)built, (unsigned long long)enumerated,
                (unsigned long long)sampled_pairs);
    return true;
}

// ---------------------------------------------------------------- criterion 2
// Converse direction: the zero pattern of any verified-MDS matrix satisfies
// the intersection condition. 500 random matrices kept after verification.
bool a2() {
    struct Dim {
        uint32_t k, n, p, m;
    };
    const std::vector<Dim> dims = {{2, 3, 2, 1}, {2, 3, 3, 1}, {2, 4, 3, 1}, {2, 4, 2, 2},
                                   {2, 5, 2, 2}, {2, 5, 5, 1}, {3, 4, 2, 2}, {3, 4, 5, 1},
                                   {3, 5, 5, 1}, {3, 5, 7, 1}};
    auto rng = make_rng(0xa2, 0);
    uint64_t attempts = 0;
    int found = 0, with_zeros = 0;
    while (found < 500 && attempts < 2000000) {
        const Dim& dm = dims[attempts++ % dims.size()];
        Field f = Field::make(dm.p, dm.m);
        GfMat a(f, dm.k, dm.n);
        uint32_t zeros = 0;
        for (auto& e : a.a) {
            e = uint32_t(rng() % f.order());
            zeros += e == 0;
        }
        if (verify_mds(a)) continue;  // some singular minor: not MDS, resample
        ZeroPattern pat = extract_pattern(a);
        CheckResult chk = check_mds(pat);
        if (!chk.satisfied) {
            std::printf("A2 FAIL — verified MDS matrix has a condition-violating pattern %s\n",
                        fmt_sets(pat).c_str());
            return false;
        }
        ++found;
        with_zeros += zeros > 0;
    }
    if (found < 500) {
        std::printf("A2 FAIL — only %d verified-MDS matrices in %llu attempts\n", found,
                    (unsigned long long)attempts);
        return false;
    }
    std::printf("A2 PASS — 500 verified-MDS matrices all have condition-satisfying patterns "
                "(%d with at least one zero entry)\n",
                with_zeros);
    return true;
}

// ---------------------------------------------------------------- criterion 3
// Curated patterns succeed in sequential exact-grid mode at exactly the
// smallest prime power >= n' + k - 1, where n' is the column count after
// completion. Grids here are far below the certification budget, so every
// candidate is certified exactly.
bool a3() {
    std::vector<ZeroPattern> pats;
    // cyclic staircases S_i = {i, i+1, ..., i+k-2} mod n are maximal and
    // satisfy the condition: any |I| rows meet in at most k - |I| columns
    const std::vector<std::pair<uint32_t, uint32_t>> stairs = {
        {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4},
        {3, 5}, {3, 6}, {4, 4}, {4, 5}, {4, 6}, {5, 5}, {5, 6}};
    for (auto [k, n] : stairs) {
        Sets sets(k);
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = 0; j + 1 < k; ++j) sets[i].push_back((i + j) % n);
        pats.push_back(pattern_from_sets(n, k, std::move(sets)));
    }
    // maximal, non-staircase shapes
    pats.push_back(pattern_from_sets(6, 3, {{0, 1}, {2, 3}, {4, 5}}));
    pats.push_back(pattern_from_sets(6, 4, {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}, {1, 4, 5}}));
    // non-maximal shapes, including ones the greedy completion must grow or pad
    pats.push_back(pattern_from_sets(5, 3, {{}, {}, {}}));
    pats.push_back(pattern_from_sets(4, 2, {{0}, {}}));
    pats.push_back(pattern_from_sets(3, 3, {{0}, {}, {1, 2}}));
    pats.push_back(pattern_from_sets(6, 4, {{0, 1}, {2}, {3, 4, 5}, {}}));
    pats.push_back(pattern_from_sets(6, 2, {{3}, {}}));
    pats.push_back(pattern_from_sets(3, 2, {{0}, {1}}));

    for (const ZeroPattern& pat : pats) {
        if (!check_mds(pat).satisfied) {
            std::printf("A3 FAIL — curated pattern violates the condition: %s\n",
                        fmt_sets(pat).c_str());
            return false;
        }
        GeneratorMatrix g;
        try {
            g = construct_mds(pat);
        } catch (const error& e) {
            std::printf("A3 FAIL — construction threw \"%s\" at %s\n", e.what(),
                        fmt_sets(pat).c_str());
            return false;
        }
        uint32_t q0 = Field::smallest_at_least(g.completed.n + g.completed.k - 1).order();
        if (g.points.f.order() != q0) {
            std::printf("A3 FAIL — expected field of order %u, got %u at %s\n", q0,
                        g.points.f.order(), fmt_sets(pat).c_str());
            return false;
        }
        if (auto w = verify_mds(g.full)) {
            std::printf("A3 FAIL — singular minor over GF(%u) at %s\n", q0,
                        fmt_sets(pat).c_str());
            return false;
        }
    }
    std::printf("A3 PASS — %zu curated patterns constructed at exactly the smallest prime "
                "power >= n'+k-1\n",
                pats.size());
    return true;
}

// ---------------------------------------------------------------- criterion 4
// Distance generalization, sufficiency: patterns satisfying the bound
// n - d + 1 realize distance >= d through reduce -> construct -> top block.
// Combos whose measurement space q^k exceeds 10^6 messages are skipped.
bool a4_sufficiency() {
    uint64_t verified = 0, skipped_triples = 0, skipped_instances = 0;
    for (uint32_t k = 1; k <= 6; ++k)
        for (uint32_t n = k; n <= 6; ++n)
            for (uint32_t d = 1; d + k <= n + 1; ++d) {
                uint32_t kr = n - d + 1;  // rows after reduction
                uint64_t est = 1;
                uint32_t q_est = Field::smallest_at_least(n + kr - 1).order();
                for (uint32_t i = 0; i < k; ++i) est *= q_est;
                if (est > 1000000) {
                    ++skipped_triples;
                    continue;
                }
                auto rng = make_rng(0xa4, (k * 8 + n) * 8 + d);
                int kept = 0;
                uint64_t attempts = 0;
                while (kept < 200) {
                    if (++attempts > 400000) {
                        std::printf("A4 FAIL — generation starved at k=%u n=%u d=%u\n", k, n, d);
                        return false;
                    }
                    Sets sets(k);
                    for (uint32_t i = 0; i < k; ++i)
                        sets[i] = random_subset(rng, n, uint32_t(rng() % (n - d + 1)));
                    ZeroPattern pat = pattern_from_sets(n, k, std::move(sets));
                    if (!distance_condition_check(pat, d).satisfied) continue;
                    ++kept;
                    GeneratorMatrix g = construct_mds(distance_reduce(pat, d));
                    uint64_t space = 1;
                    for (uint32_t i = 0; i < k; ++i) space *= g.points.f.order();
                    if (space > 1000000) {  // padding pushed the field up
                        ++skipped_instances;
                        continue;
                    }
                    GfMat top(g.points.f, k, g.a.cols);
                    for (uint32_t r = 0; r < k; ++r)
                        for (uint32_t c = 0; c < g.a.cols; ++c) top.at(r, c) = g.a.at(r, c);
                    if (!verify_zero_pattern(top, pat, ZeroCheckMode::one_sided)) {
                        std::printf("A4 FAIL — top block lost prescribed zeros at %s d=%u\n",
                                    fmt_sets(pat).c_str(), d);
                        return false;
                    }
                    uint32_t dist = min_distance(top);
                    if (dist < d) {
                        std::printf("A4 FAIL — distance %u < %u at %s\n", dist, d,
                                    fmt_sets(pat).c_str());
                        return false;
                    }
                    ++verified;
                }
            }
    std::printf("A4 PASS — sufficiency: %llu reduced constructions measured at distance >= d "
                "(skipped over the 10^6 message budget: %llu triple(s), %llu instance(s))\n",
                (unsigned long long)verified, (unsigned long long)skipped_triples,
                (unsigned long long)skipped_instances);
    return true;
}

// Necessity: when the distance bound fails, no matrix over GF(q) with the
// prescribed zeros reaches distance >= d. Exhaustive over all assignments of
// the free entries; distance >= d iff every n-d+1 columns have rank k.
bool a4_necessity() {
    auto rng = make_rng(0xa4f, 1);
    int instances = 0;
    uint64_t matrices = 0, attempts = 0;
    while (instances < 200) {
        if (++attempts > 200000) {
            std::printf("A4 FAIL — necessity generation starved after %d instances\n",
                        instances);
            return false;
        }
        uint32_t k = 2 + uint32_t(rng() % 2);
        uint32_t n = k + 1 + uint32_t(rng() % (5 - k));
        uint32_t d = 1 + uint32_t(rng() % (n - k + 1));
        Sets sets(k);
        uint32_t zeros = 0;
        for (uint32_t i = 0; i < k; ++i) {
            sets[i] = random_subset(rng, n, uint32_t(rng() % n));
            zeros += uint32_t(sets[i].size());
        }
        ZeroPattern pat = pattern_from_sets(n, k, std::move(sets));
        if (distance_condition_check(pat, d).satisfied) continue;
        uint32_t free = k * n - zeros;
        std::vector<uint32_t> qs;
        for (uint32_t q : {2u, 3u, 4u, 5u}) {
            uint64_t space = 1;
            bool fits = true;
            for (uint32_t i = 0; i < free && fits; ++i) fits = (space *= q) <= 10000;
            if (fits) qs.push_back(q);
        }
        if (qs.empty()) continue;
        uint32_t q = qs[rng() % qs.size()];
        Field f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);

        // free cells in row-major order; prescribed zeros stay fixed
        std::vector<std::pair<uint32_t, uint32_t>> cells;
        GfMat a(f, k, n);
        for (uint32_t r = 0; r < k; ++r) {
            auto& s = pat.sets[r];
            for (uint32_t c = 0; c < n; ++c)
                if (!std::binary_search(s.begin(), s.end(), c)) cells.push_back({r, c});
        }
        const uint32_t w = n - d + 1;
        std::vector<std::vector<uint32_t>> col_sets;  // all w-subsets of columns
        {
            std::vector<uint32_t> pick(w);
            for (uint32_t i = 0; i < w; ++i) pick[i] = i;
            while (true) {
                col_sets.push_back(pick);
                int i = int(w) - 1;
                while (i >= 0 && pick[i] == n - w + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (uint32_t j = uint32_t(i) + 1; j < w; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        GfMat sub(f, k, w);
        std::vector<uint32_t> digits(cells.size(), 0);
        while (true) {
            ++matrices;
            bool wide_enough = true;  // distance >= d so far
            for (const auto& cols : col_sets) {
                for (uint32_t r = 0; r < k; ++r)
                    for (uint32_t c = 0; c < w; ++c) sub.at(r, c) = a.at(r, cols[c]);
                if (gf_rank_inplace(sub) < k) {
                    wide_enough = false;
                    break;
                }
            }
            if (wide_enough) {
                std::printf("A4 FAIL — violating pattern %s reached distance >= %u over "
                            "GF(%u)\n",
                            fmt_sets(pat).c_str(), d, q);
                return false;
            }
            size_t t = 0;
            while (t < cells.size() && ++digits[t] == f.order()) digits[t++] = 0;
            if (t == cells.size()) break;
            for (size_t u = 0; u <= t && u < cells.size(); ++u)
                a.at(cells[u].first, cells[u].second) = digits[u];
        }
        ++instances;
    }
    std::printf("A4 PASS — necessity: 200 bound-violating patterns, %llu exhaustive matrices, "
                "none reach the target distance\n",
                (unsigned long long)matrices);
    return true;
}

// ---------------------------------------------------------------- criterion 5
// The exact and randomized independence oracles agree, and every system
// passing the shape-restricted weight condition yields an independent family.
// Exhaustive over canonical (nondecreasing) systems up to a budget, plus 500
// random systems, all within the exact-mode caps.
bool a5() {
    uint64_t verified = 0;
    const uint64_t budget = 4000;
    auto audit = [&](const VectorSystem& sys, uint64_t seed) -> std::string {
        PolyFamily fam = system_family(sys);
        IndependenceOptions ex;
        ex.mode = IndepMode::exact;
        IndependenceReport exact = independence_check(fam, ex);
        if (!exact.independent) return "exact oracle reports a dependence";
        IndependenceOptions rnd;
        rnd.mode = IndepMode::randomized;
        rnd.seed = seed;
        rnd.trials = 3;
        IndependenceReport sampled = independence_check(fam, rnd);
        if (!sampled.independent) return "randomized oracle disagrees with exact";
        return "";
    };
    for (uint32_t n = 2; n <= 4 && verified < budget; ++n)
        for (uint32_t k = 2; k <= 5 && verified < budget; ++k) {
            // row alphabet: 0/1 coordinates, free last coordinate, weight <= k-1
            std::vector<std::vector<uint32_t>> alphabet;
            for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
                for (uint32_t last = 0; last < k; ++last) {
                    std::vector<uint32_t> v(n);
                    uint64_t wt = last;
                    for (uint32_t j = 0; j + 1 < n; ++j) wt += v[j] = (mask >> j) & 1;
                    v[n - 1] = last;
                    if (wt <= k - 1) alphabet.push_back(std::move(v));
                }
            for (uint32_t m = 1; m <= 3 && verified < budget; ++m) {
                std::vector<uint32_t> idx(m, 0);  // nondecreasing: one order per multiset
                while (verified < budget) {
                    std::vector<std::vector<uint32_t>> vecs(m);
                    for (uint32_t i = 0; i < m; ++i) vecs[i] = alphabet[idx[i]];
                    VectorSystem sys = system_from(n, k, std::move(vecs));
                    if (check_vstar(sys).satisfied) {
                        if (std::string why = audit(sys, verified); !why.empty()) {
                            std::printf("A5 FAIL — %s at %s\n", why.c_str(),
                                        fmt_vecs(sys).c_str());
                            return false;
                        }
                        ++verified;
                    }
                    int i = int(m) - 1;
                    while (i >= 0 && idx[i] == alphabet.size() - 1) --i;
                    if (i < 0) break;
                    uint32_t next = idx[i] + 1;
                    for (uint32_t j = uint32_t(i); j < m; ++j) idx[j] = next;
                }
            }
        }
    auto rng = make_rng(0xa5, 2);
    for (int t = 0; t < 500; ++t) {
        VectorSystem sys = random_vstar_system(rng, 4, 5);
        if (std::string why = audit(sys, 1000 + uint64_t(t)); !why.empty()) {
            std::printf("A5 FAIL — %s at %s\n", why.c_str(), fmt_vecs(sys).c_str());
            return false;
        }
    }
    std::printf("A5 PASS — %llu exhaustively enumerated and 500 random shape-restricted "
                "systems: exact oracle independent, randomized oracle agrees\n",
                (unsigned long long)verified);
    return true;
}

// ---------------------------------------------------------------- criterion 6
// The four transformation suites hold on generated instances.
bool a6() {
    struct Named {
        const char* name;
        SuiteReport rep;
    };
    const Named suites[] = {{"divide", run_divide_suite(120, 0xacce6)},
                            {"tight-split", run_tight_split_suite(120, 0xacce6)},
                            {"merge-last", run_merge_suite(120, 0xacce6)},
                            {"increment-last", run_increment_suite(120, 0xacce6)}};
    for (const Named& s : suites) {
        if (s.rep.failures != 0) {
            std::printf("A6 FAIL — %s suite: %u/%u failed; first: %s\n", s.name,
                        s.rep.failures, s.rep.instances, s.rep.first_failure.c_str());
            return false;
        }
        if (s.rep.instances < 100) {
            std::printf("A6 FAIL — %s suite ran only %u instances\n", s.name, s.rep.instances);
            return false;
        }
    }
    std::printf("A6 PASS — divide, tight-split, merge-last, increment-last: 120 instances "
                "each, zero failures\n");
    return true;
}

// ---------------------------------------------------------------- criterion 7
// Random point selection beats the binomial bound in practice: at k=3, n=6
// over GF(11) (11 > C(5,2) = 10), a single random tuple certifies a random
// maximal satisfying pattern in >= 95% of 200 seeded trials.
bool a7() {
    const uint32_t k = 3, n = 6;
    Field f = Field::make(11, 1);
    auto rng = make_rng(20260819, 7);
    std::vector<uint32_t> cols(n);
    for (uint32_t j = 0; j < n; ++j) cols[j] = j;
    int ok = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        ZeroPattern pat;
        while (true) {
            Sets sets(k);
            for (auto& s : sets) {
                std::shuffle(cols.begin(), cols.end(), rng);
                s.assign(cols.begin(), cols.begin() + (k - 1));
            }
            pat = pattern_from_sets(n, k, std::move(sets));
            if (check_mds(pat).satisfied) break;
        }
        try {
            select_points_random(pat, f, 1, rng());
            ++ok;
        } catch (const error&) {
            // single try exhausted: this trial counts as a miss
        }
    }
    if (ok * 100 < trials * 95) {
        std::printf("A7 FAIL — first-try success %d/%d below 95%% over GF(11)\n", ok, trials);
        return false;
    }
    std::printf("A7 PASS — first-try point selection succeeded %d/%d times over GF(11) "
                "(field order beats the C(5,2)=10 bound)\n",
                ok, trials);
    return true;
}

// ---------------------------------------------------------------- criterion 8
// Verification throughput: all C(16,8) = 12870 minors of an 8x16 matrix over
// GF(32) in under two seconds single-threaded. Threaded and revolving-door
// timings are informational.
bool a8() {
    const uint32_t k = 8, n = 16;
    Field f = Field::make(2, 5);
    GfMat a(f, k, n);
    for (uint32_t j = 0; j < n; ++j) {
        uint32_t pw = 1;  // code 1 is the multiplicative identity
        for (uint32_t i = 0; i < k; ++i) {
            a.at(i, j) = pw;
            pw = f.mul(pw, j);
        }
    }
    auto time_ms = [&](const VerifyOptions& opt, bool& mds) {
        auto t0 = std::chrono::steady_clock::now();
        mds = !verify_mds(a, opt);
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count();
    };
    bool mds1 = false, mds4 = false, mdsg = false;
    VerifyOptions lex1, lex4, gray;
    lex4.threads = 4;
    gray.gray = true;
    double ms1 = time_ms(lex1, mds1);
    double ms4 = time_ms(lex4, mds4);
    double msg = time_ms(gray, mdsg);
    if (!mds1 || !mds4 || !mdsg) {
        std::printf("A8 FAIL — the distinct-point power matrix must be MDS\n");
        return false;
    }
    if (ms1 >= 2000.0) {
        std::printf("A8 FAIL — single-threaded verification took %.0f ms (>= 2000)\n", ms1);
        return false;
    }
    std::printf("A8 PASS — 12870 minors of 8x16 over GF(32) in %.1f ms single-threaded "
                "(4 threads: %.1f ms, revolving-door: %.1f ms; informational)\n",
                ms1, ms4, msg);
    return true;
}

bool guard(const char* name, bool (*fn)()) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::printf("%s FAIL — unexpected exception: %s\n", name, e.what());
        return false;
    }
}

}  // namespace

int main() {
    int failed = 0;
    failed += !guard("A1", a1);
    failed += !guard("A2", a2);
    failed += !guard("A3", a3);
    failed += !guard("A4", a4_sufficiency) + !guard("A4", a4_necessity);
    failed += !guard("A5", a5);
    failed += !guard("A6", a6);
    failed += !guard("A7", a7);
    failed += !guard("A8", a8);
    if (failed) {
        std::printf("acceptance: %d criterion check(s) failed\n", failed);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
