#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zmds/errors.hpp"
#include "zmds/formal.hpp"
#include "zmds/vecsys.hpp"

namespace zmds {

// prod_j (x - a_j)^{v(j)} over nvars = v.size() ambient variables
FormalPoly root_product(const std::vector<uint32_t>& v);

// All x-power multiples of the root product that stay below degree k:
// prod_j (x - a_j)^{v(j)} * x^e for e = 0 .. k-1-|v|. These span the
// degree-bounded polynomials divisible by the root product. Requires
// |v| <= k-1 so the list is nonempty.
std::vector<FormalPoly> basis_multiples(uint32_t k, const std::vector<uint32_t>& v);

struct FamilyMember {
    FormalPoly poly;
    uint32_t row = 0;  // which system row produced it
    uint32_t e = 0;    // the extra power of x
};

struct PolyFamily {
    uint32_t n = 0;  // ambient a-variables
    uint32_t k = 0;  // all member degrees are < k
    std::vector<FamilyMember> members;

    uint32_t size() const { return uint32_t(members.size()); }
};

// Concatenation of basis_multiples(k, v_i) over the system rows in order
// (row index ascending, then e ascending). The family has sum(k - |v_i|)
// members; the check conditions make that at most k when they hold.
PolyFamily system_family(const VectorSystem& sys);

// Largest prime below 2^31: evaluation modulus for the randomized oracle.
// Products of two residues fit in uint64 without overflow.
inline constexpr uint32_t kEvalPrime = 2147483647;

enum class IndepMode { exact, randomized };

struct IndependenceOptions {
    IndepMode mode = IndepMode::randomized;
    uint64_t seed = 1;
    int trials = 3;
};

struct IndependenceReport {
    bool independent = false;
    // exact mode, dependent verdicts only: coefficients w with
    // sum_i w[i] * p_i = 0, verified by exact expansion
    std::optional<std::vector<FormalPoly>> witness;
    int trials = 0;         // randomized mode: evaluations performed
    double error_bound = 0.0;  // probability a dependent verdict is wrong
};

// Linear independence of the members over the rationals, treating the
// coefficients as polynomials in the a-variables.
//
//   exact       fraction-free elimination over the integers; certain both
//               ways and produces a dependence witness, but capped at
//               n <= 4, k <= 6, 12 members to keep expression swell sane
//   randomized  substitutes uniform a-values mod kEvalPrime and ranks the
//               coefficient matrix; an independent verdict is certain, a
//               dependent verdict is wrong with probability <= error_bound
IndependenceReport independence_check(const PolyFamily& fam,
                                      const IndependenceOptions& opt = {});

// Rank of the span of arbitrary degree-< k polynomials by the same random
// substitution, maximized over trials; never exceeds the true rank, and the
// bound is tight with high probability. Same seed means same substitution
// points, so ranks of related families can be compared consistently.
uint32_t eval_rank(const std::vector<FormalPoly>& polys, uint32_t k, uint64_t seed = 1,
                   int trials = 3);

}  // namespace zmds
