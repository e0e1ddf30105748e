#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zmds/errors.hpp"

namespace zmds {

// Prescribed zero positions S_1..S_k as subsets of {0..n-1}. Columns are
// 0-based internally; the JSON layer shifts to 1-based. Rows are kept sorted
// and deduplicated.
struct ZeroPattern {
    uint32_t n = 0, k = 0;
    std::vector<std::vector<uint32_t>> sets;
    // original column count when maximal completion had to pad fresh columns
    std::optional<uint32_t> n_increased_from;
};

// validates 1 <= k <= n and column range, canonicalizes rows
ZeroPattern pattern_from_sets(uint32_t n, uint32_t k, std::vector<std::vector<uint32_t>> sets);

bool pattern_is_maximal(const ZeroPattern& pat);  // every |S_i| == k-1

struct ConditionWitness {
    std::vector<uint32_t> rows;       // index set I (0-based, sorted)
    std::vector<uint32_t> meet_cols;  // T = intersection of the S_i over I
    uint32_t lhs = 0;
    uint32_t bound = 0;
};

struct CheckResult {
    bool satisfied = true;
    std::optional<ConditionWitness> witness;  // first violation when unsatisfied
};

// The feasibility condition: |I| + |intersection of S_i over I| <= k for
// every nonempty I. The default checker walks index sets by size then
// lexicographically and reports the first violation; fast mode restricts to
// intersection-closed row families (same verdict, possibly different
// witness).
CheckResult check_mds(const ZeroPattern& pat, bool fast = false);

// Same inequality against bound n-d+1; requires 1 <= d <= n-k+1.
CheckResult distance_condition_check(const ZeroPattern& pat, uint32_t d);

// Two readings of "tight": the plain set-system one, and the one induced by
// indicator vectors where row i contributes k-|S_i| (so singletons are always
// tight). The latter matches symcore's vector-system semantics.
enum class TightConvention { set_system, vector_system };

// all nonempty I achieving equality, in size-then-lex order
std::vector<ConditionWitness> tight_index_sets(
    const ZeroPattern& pat, TightConvention conv = TightConvention::set_system);

// Grows every row to size exactly k-1: greedy in-place growth (candidate
// columns by ascending frequency, ties by index, re-checked after each
// addition); rows the greedy cannot finish are padded with fresh columns,
// increasing n and recording n_increased_from.
ZeroPattern complete_to_maximal(const ZeroPattern& pat);

// the padding fallback by itself: every short row gets fresh disjoint columns
ZeroPattern pad_to_maximal(const ZeroPattern& pat);

// appends n-d+1-k empty rows (the general-distance reduction)
ZeroPattern distance_reduce(const ZeroPattern& pat, uint32_t d);

}  // namespace zmds
