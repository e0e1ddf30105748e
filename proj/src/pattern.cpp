#include "zmds/pattern.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace zmds {
namespace {

using Mask = std::vector<uint64_t>;

Mask row_mask(const std::vector<uint32_t>& s, uint32_t n) {
    Mask m((n + 63) / 64, 0);
    for (uint32_t c : s) m[c >> 6] |= uint64_t(1) << (c & 63);
    return m;
}

void and_into(Mask& a, const Mask& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}

uint32_t popcnt(const Mask& m) {
    uint32_t c = 0;
    for (uint64_t w : m) c += uint32_t(std::popcount(w));
    return c;
}

std::vector<uint32_t> mask_cols(const Mask& m) {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < m.size(); ++i)
        for (uint64_t w = m[i]; w; w &= w - 1)
            out.push_back(uint32_t(i * 64 + std::countr_zero(w)));
    return out;
}

bool mask_subset(const Mask& a, const Mask& b) {  // a contained in b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// next k-combination of {0..n-1} in lexicographic order; false when done
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

CheckResult check_naive(const ZeroPattern& pat, uint32_t bound) {
    std::vector<Mask> rows;
    rows.reserve(pat.k);
    for (const auto& s : pat.sets) rows.push_back(row_mask(s, pat.n));
    for (uint32_t size = 1; size <= pat.k; ++size) {
        std::vector<uint32_t> idx(size);
        for (uint32_t i = 0; i < size; ++i) idx[i] = i;
        do {
            Mask t = rows[idx[0]];
            for (uint32_t i = 1; i < size; ++i) and_into(t, rows[idx[i]]);
            uint32_t lhs = size + popcnt(t);
            if (lhs > bound) {
                ConditionWitness w;
                w.rows = idx;
                w.meet_cols = mask_cols(t);
                w.lhs = lhs;
                w.bound = bound;
                return {false, std::move(w)};
            }
        } while (next_comb(idx, pat.k));
    }
    return {true, std::nullopt};
}

// For any I, let T be its intersection and J = {i : S_i contains T}. Then
// I is a subset of J, the intersection over J is exactly T, and the left
// side over J dominates the one over I - so checking the closed families
// J suffices. The distinct intersections are generated by closing the row
// masks under pairwise intersection.
CheckResult check_closed(const ZeroPattern& pat, uint32_t bound) {
    std::vector<Mask> rows;
    rows.reserve(pat.k);
    for (const auto& s : pat.sets) rows.push_back(row_mask(s, pat.n));
    std::set<Mask> seen(rows.begin(), rows.end());
    std::vector<Mask> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        Mask t = std::move(queue.back());
        queue.pop_back();
        for (const Mask& r : rows) {
            Mask u = t;
            and_into(u, r);
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    for (const Mask& t : seen) {
        std::vector<uint32_t> fam;
        for (uint32_t i = 0; i < pat.k; ++i)
            if (mask_subset(t, rows[i])) fam.push_back(i);
        if (fam.empty()) continue;
        uint32_t lhs = uint32_t(fam.size()) + popcnt(t);
        if (lhs > bound) {
            ConditionWitness w;
            w.rows = std::move(fam);
            w.meet_cols = mask_cols(t);
            w.lhs = lhs;
            w.bound = bound;
            return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

}  // namespace

ZeroPattern pattern_from_sets(uint32_t n, uint32_t k, std::vector<std::vector<uint32_t>> sets) {
    if (k < 1 || k > n) fail(errc::bad_input, "need 1 <= k <= n");
    if (sets.size() != k) fail(errc::bad_input, "expected exactly k zero sets");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && s.back() >= n) fail(errc::bad_input, "column index out of range");
    }
    ZeroPattern p;
    p.n = n;
    p.k = k;
    p.sets = std::move(sets);
    return p;
}

bool pattern_is_maximal(const ZeroPattern& pat) {
    for (const auto& s : pat.sets)
        if (s.size() != pat.k - 1) return false;
    return true;
}

CheckResult check_mds(const ZeroPattern& pat, bool fast) {
    return fast ? check_closed(pat, pat.k) : check_naive(pat, pat.k);
}

CheckResult distance_condition_check(const ZeroPattern& pat, uint32_t d) {
    if (d < 1 || d > pat.n - pat.k + 1) fail(errc::distance_out_of_range, "need 1 <= d <= n-k+1");
    return check_naive(pat, pat.n - d + 1);
}

std::vector<ConditionWitness> tight_index_sets(const ZeroPattern& pat, TightConvention conv) {
    if (!check_mds(pat).satisfied) fail(errc::pattern_violates_mds, "pattern fails the MDS condition");
    std::vector<Mask> rows;
    rows.reserve(pat.k);
    for (const auto& s : pat.sets) rows.push_back(row_mask(s, pat.n));
    std::vector<ConditionWitness> out;
    for (uint32_t size = 1; size <= pat.k; ++size) {
        std::vector<uint32_t> idx(size);
        for (uint32_t i = 0; i < size; ++i) idx[i] = i;
        do {
            Mask t = rows[idx[0]];
            uint32_t lhs = 0;
            for (uint32_t i = 0; i < size; ++i) {
                and_into(t, rows[idx[i]]);
                lhs += conv == TightConvention::set_system
                           ? 0
                           : pat.k - uint32_t(pat.sets[idx[i]].size());
            }
            if (conv == TightConvention::set_system) lhs += size;
            lhs += popcnt(t);
            if (lhs == pat.k) {
                ConditionWitness w;
                w.rows = idx;
                w.meet_cols = mask_cols(t);
                w.lhs = lhs;
                w.bound = pat.k;
                out.push_back(std::move(w));
            }
        } while (next_comb(idx, pat.k));
    }
    return out;
}

ZeroPattern pad_to_maximal(const ZeroPattern& pat) {
    if (!check_mds(pat).satisfied) fail(errc::pattern_violates_mds, "pattern fails the MDS condition");
    ZeroPattern out = pat;
    uint32_t next = pat.n;
    for (auto& s : out.sets)
        while (s.size() < size_t(pat.k - 1)) s.push_back(next++);
    if (next != pat.n) {
        out.n = next;
        out.n_increased_from = pat.n;
    }
    return out;
}

ZeroPattern complete_to_maximal(const ZeroPattern& pat) {
    if (!check_mds(pat).satisfied) fail(errc::pattern_violates_mds, "pattern fails the MDS condition");
    ZeroPattern cur = pat;
    for (uint32_t i = 0; i < cur.k; ++i) {
        while (cur.sets[i].size() < size_t(cur.k - 1)) {
            std::vector<uint32_t> freq(cur.n, 0);
            for (const auto& s : cur.sets)
                for (uint32_t c : s) ++freq[c];
            std::vector<uint32_t> cand;
            for (uint32_t c = 0; c < cur.n; ++c)
                if (!std::binary_search(cur.sets[i].begin(), cur.sets[i].end(), c))
                    cand.push_back(c);
            std::stable_sort(cand.begin(), cand.end(),
                             [&](uint32_t a, uint32_t b) { return freq[a] < freq[b]; });
            bool grown = false;
            for (uint32_t c : cand) {
                auto& s = cur.sets[i];
                s.insert(std::upper_bound(s.begin(), s.end(), c), c);
                if (check_mds(cur).satisfied) {
                    grown = true;
                    break;
                }
                s.erase(std::find(s.begin(), s.end(), c));
            }
            if (!grown) break;  // this row is stuck; padding handles it below
        }
    }
    ZeroPattern out = pad_to_maximal(cur);
    if (out.n_increased_from) out.n_increased_from = pat.n;
    return out;
}

ZeroPattern distance_reduce(const ZeroPattern& pat, uint32_t d) {
    auto chk = distance_condition_check(pat, d);
    if (!chk.satisfied) fail(errc::condition_violated, "distance condition fails");
    ZeroPattern out = pat;
    out.k = pat.n - d + 1;
    out.sets.resize(out.k);
    return out;
}

}  // namespace zmds
