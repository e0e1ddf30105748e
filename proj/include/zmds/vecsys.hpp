#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zmds/errors.hpp"
#include "zmds/formal.hpp"

namespace zmds {

// Ordered multiset of multiplicity vectors over n coordinates, aiming at a
// target row space of polynomials of degree <= k-1. Duplicates are allowed
// and meaningful.
struct VectorSystem {
    uint32_t n = 0, k = 0;
    std::vector<std::vector<uint32_t>> vecs;  // m >= 1 rows, each of length n

    uint32_t m() const { return uint32_t(vecs.size()); }
};

// validated constructor
VectorSystem system_from(uint32_t n, uint32_t k, std::vector<std::vector<uint32_t>> vecs);

uint64_t vec_weight(const std::vector<uint32_t>& v);

// coordinatewise minimum over the rows indexed by I (0-based, sorted, distinct)
std::vector<uint32_t> meet(const VectorSystem& sys, const std::vector<uint32_t>& I);

enum class SystemViolation {
    multiplicity_bound,  // some |v_i| > k-1
    coordinate_bound,    // some v_i(j) > 1 with j not the last coordinate
    sum_bound            // some I with sum(k-|v_i|) + |meet| > k
};

struct SystemWitness {
    SystemViolation kind = SystemViolation::sum_bound;
    std::vector<uint32_t> rows;  // offending row(s); the index set I for sum_bound
    uint64_t lhs = 0, bound = 0;
    uint32_t coord = 0;  // offending coordinate, coordinate_bound only
};

struct SystemCheck {
    bool satisfied = true;
    std::optional<SystemWitness> witness;
};

// The weight condition: (i) every |v_i| <= k-1, then (ii) for every nonempty
// I in size-then-lex order, sum_{i in I}(k-|v_i|) + |meet_I| <= k. First
// violation wins, rows checked in ascending order.
SystemCheck check_vk(const VectorSystem& sys);

// check_vk plus the shape restriction (iii): all coordinates except the last
// lie in {0,1}. Order: (i) per row, (iii) per row, then (ii).
SystemCheck check_vstar(const VectorSystem& sys);

// all nonempty I achieving equality in (ii), in size-then-lex order; every
// singleton is always present. Requires check_vk to pass.
std::vector<std::vector<uint32_t>> tight_sets(const VectorSystem& sys);

// Every row loses one multiplicity at coordinate j and the degree target
// drops to k-1; valid only when every row actually has one to give.
VectorSystem lemma_divide(const VectorSystem& sys, uint32_t j);

struct TightSplit {
    VectorSystem left;   // rows outside I, in order, then meet_I appended last
    VectorSystem right;  // the rows of I, in order
};

// Split at a tight index set with 1 < |I| < m.
TightSplit lemma_tight_split(const VectorSystem& sys, const std::vector<uint32_t>& I);

// Fuse the last two coordinates by addition, shrinking the ambient dimension.
VectorSystem lemma_merge_last(const VectorSystem& sys);

struct IncrementResult {
    VectorSystem sys;  // last row becomes all-ones
    FormalPoly extra;  // the dropped direction: product of (x - a_j), j < n
};

// Requires n < k and the last row equal to (1,...,1,0).
IncrementResult lemma_increment_last(const VectorSystem& sys);

}  // namespace zmds
