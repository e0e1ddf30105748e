#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "zmds/vecsys.hpp"

namespace zmds {

// Random system passing the shape-restricted check: 2 <= n <= nmax
// coordinates, 2 <= k <= kmax, at most four rows with 0/1 leading
// coordinates and a free final coordinate. Rejection-sampled, so every
// returned system genuinely satisfies check_vstar.
VectorSystem random_vstar_system(std::mt19937_64& rng, uint32_t nmax = 5, uint32_t kmax = 5);

struct SuiteReport {
    uint32_t instances = 0;  // property checks completed
    uint32_t failures = 0;   // instances where a claimed invariant broke
    std::string first_failure;  // human-readable note for the first break
};

// Each suite draws seeded random systems meeting the step's preconditions,
// applies the step, and checks the invariants the step promises:
//
//   divide      result satisfies the check one degree lower and every family
//               member factors exactly as (x - a_j) times its image
//   tight split both halves satisfy the check, the left keeps the family
//               size, and the right rows span exactly the degree-bounded
//               multiples of their meet
//   merge       the fused system satisfies the check and the family maps
//               member-by-member under the variable substitution
//   increment   the bumped system satisfies the check and its family plus
//               the dropped direction spans the same space as before
SuiteReport run_divide_suite(uint32_t instances, uint64_t seed);
SuiteReport run_tight_split_suite(uint32_t instances, uint64_t seed);
SuiteReport run_merge_suite(uint32_t instances, uint64_t seed);
SuiteReport run_increment_suite(uint32_t instances, uint64_t seed);

// The per-instance invariant checks behind the suites, usable on a caller's
// own system: empty string when every claimed invariant holds, else a note
// naming the first break. Precondition violations still throw, as in the
// underlying steps. `probe` seeds the randomized span comparisons.
std::string check_divide_instance(const VectorSystem& sys, uint32_t j);
std::string check_tight_split_instance(const VectorSystem& sys,
                                       const std::vector<uint32_t>& I, uint64_t probe);
std::string check_merge_instance(const VectorSystem& sys);
std::string check_increment_instance(const VectorSystem& sys, uint64_t probe);

}  // namespace zmds
