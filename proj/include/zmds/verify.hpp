#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zmds/gfmat.hpp"
#include "zmds/pattern.hpp"

namespace zmds {

struct MinorWitness {
    std::vector<uint32_t> cols;  // the k columns of the singular minor, sorted
    uint32_t det = 0;
};

enum class ZeroCheckMode {
    strict,    // zero exactly where prescribed
    one_sided  // zero at least where prescribed
};

bool verify_zero_pattern(const GfMat& a, const ZeroPattern& pat,
                         ZeroCheckMode mode = ZeroCheckMode::strict);

struct VerifyOptions {
    // Revolving-door order reuses the previous minor's inverse across the
    // one-column swap between neighbours; default recomputes every minor
    // for auditability.
    bool gray = false;
    unsigned threads = 1;  // lexicographic mode only; gray runs sequentially
};

// nullopt = every k x k minor nonsingular; otherwise the lexicographically
// first singular column set, regardless of order or thread schedule.
std::optional<MinorWitness> verify_mds(const GfMat& a, const VerifyOptions& opt = {});

// Least Hamming weight over nonzero messages u of u*A (0 for rank-deficient
// A). Enumerates one representative per scaling class.
uint32_t min_distance(const GfMat& a, uint64_t budget = 1'000'000);

struct FieldFeasibility {
    uint32_t q = 0;
    bool feasible = false;  // some distinct point tuple has det C != 0
    uint64_t tuples_tried = 0;
};

// For each prime power q <= q_max: is the (maximal, condition-satisfying)
// pattern realizable by the row-polynomial construction over GF(q)?
// GRS-only: an infeasible verdict says nothing about other constructions.
std::vector<FieldFeasibility> min_field_search(const ZeroPattern& pat, uint32_t q_max,
                                               uint64_t tuple_cap = 20'000'000);

// S_i = zero positions of row i
ZeroPattern extract_pattern(const GfMat& a);

}  // namespace zmds
