#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zmds/field.hpp"
#include "zmds/gfmat.hpp"
#include "zmds/pattern.hpp"

namespace zmds {

// Row polynomial: the monic degree-(k-1) product of (x - alpha_j) over the
// row's prescribed zero columns, expanded over the field.
struct RowPoly {
    std::vector<uint32_t> coeffs;  // length k, coeffs[e] multiplies x^e
    std::vector<uint32_t> roots;   // alpha_j codes, in column order
    uint32_t row = 0;
};

struct EvalPoints {
    Field f;
    std::vector<uint32_t> alpha;  // pairwise distinct element codes
};

// k x n generator matrix together with how it was made. `a` is the matrix on
// the caller's n columns; when maximal completion had to pad columns, `full`
// keeps all n' columns (a is its left block) and `points` covers n'.
struct GeneratorMatrix {
    GfMat a;
    GfMat full;
    ZeroPattern requested;
    ZeroPattern completed;
    EvalPoints points;
    GfMat coeff;  // k x k coefficient matrix C with A_full = C * Vandermonde
    uint32_t det_c = 0;
};

// evaluate coefficients (ascending) at x by Horner's rule
uint32_t poly_eval(const Field& f, const std::vector<uint32_t>& coeffs, uint32_t x);

// Reusable workspace for evaluating det C at many point tuples (the inner
// loop of point certification and the minimal-field explorer).
class CoeffDetEvaluator {
  public:
    CoeffDetEvaluator(const ZeroPattern& pat, Field f);  // pat must be maximal
    uint32_t at(const std::vector<uint32_t>& alpha);     // one code per column

  private:
    ZeroPattern pat_;
    Field f_;
    GfMat c_;
    std::vector<uint32_t> roots_;
};

std::vector<RowPoly> build_row_polys(const ZeroPattern& pat, const EvalPoints& pts);

// C[i][e] = coefficient of x^e in row polynomial i
GfMat coefficient_matrix(const Field& f, const std::vector<RowPoly>& polys);

// det of the coefficient matrix for a maximal pattern at concrete points;
// the workhorse of point certification and the minimal-field explorer
uint32_t det_c_at(const ZeroPattern& pat, const EvalPoints& pts);

// Uniform resampling of distinct points until det C is nonzero.
EvalPoints select_points_random(const ZeroPattern& pat, const Field& f, uint32_t max_tries,
                                uint64_t seed);

struct SequentialOptions {
    // Certification of "not identically zero" per candidate is exact when the
    // remaining evaluation grid fits the budget; beyond it, random trials give
    // a one-sided probabilistic certificate.
    uint64_t grid_budget = 4'000'000;
    int prob_trials = 24;
    uint64_t seed = 1;  // probabilistic mode only
};

// One variable at a time, smallest candidate value first: a value is kept iff
// the partially substituted det C is certifiably not identically zero in the
// remaining variables. Deterministic; always succeeds in exact-grid mode when
// q >= n+k-1.
EvalPoints select_points_sequential(const ZeroPattern& pat, const Field& f,
                                    const SequentialOptions& opt = {});

GeneratorMatrix assemble_matrix(const ZeroPattern& pat, const std::vector<RowPoly>& polys,
                                const EvalPoints& pts);

enum class PointMode { sequential, random };

struct ConstructOptions {
    PointMode mode = PointMode::sequential;
    uint64_t seed = 1;
    uint32_t max_tries = 64;
    SequentialOptions seq{};
};

// Full pipeline: completion, field choice (smallest q >= n'+k-1 by default),
// point selection, assembly, then zero-pattern and minor verification before
// returning.
GeneratorMatrix construct_mds(const ZeroPattern& pat, std::optional<Field> field = {},
                              const ConstructOptions& opt = {});

}  // namespace zmds
