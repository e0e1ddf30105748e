#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zmds/errors.hpp"

namespace zmds {

// Exponent vector for one monomial: slots 0..nvars-1 are the formal point
// variables a_1..a_n, the final slot is x.
using Mono = std::vector<uint32_t>;

// Graded order: total degree first, ties broken by comparing exponents from
// the most significant variable (x) down to a_1. Fixed so leading terms,
// printing, and witness selection are deterministic.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        uint64_t da = 0, db = 0;
        for (uint32_t e : a) da += e;
        for (uint32_t e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Exact sparse multivariate polynomial in a_1..a_n and x over the integers.
// Canonical form: no zero-coefficient terms.
class FormalPoly {
  public:
    using TermMap = std::map<Mono, mpz_class, MonoLess>;

    explicit FormalPoly(uint32_t nvars = 0) : nvars_(nvars) {}

    static FormalPoly constant(uint32_t nvars, const mpz_class& c);
    static FormalPoly var_a(uint32_t nvars, uint32_t j);  // a_{j+1}, 0 <= j < nvars
    static FormalPoly var_x(uint32_t nvars);

    uint32_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    uint32_t deg_x() const;
    uint64_t total_degree() const;  // 0 for the zero polynomial

    FormalPoly operator-() const;
    FormalPoly operator+(const FormalPoly& o) const;
    FormalPoly operator-(const FormalPoly& o) const;
    FormalPoly operator*(const FormalPoly& o) const;
    bool operator==(const FormalPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const FormalPoly& o) const { return !(*this == o); }

    // coefficient of x^e, a polynomial in the a-variables only
    FormalPoly coeff_x(uint32_t e) const;

    // substitute a_n <- a_{n-1}, dropping the last a-variable
    FormalPoly merge_last_vars() const;

    // residues mod p of the coefficients of x^0..x^{slots-1} after substituting
    // a_j <- avals[j]; the x-degree must fit the slot count
    std::vector<uint32_t> eval_coeffs_mod(const std::vector<uint32_t>& avals, uint32_t p,
                                          uint32_t slots) const;

    std::string to_string() const;

    // building block for arithmetic; drops the term when c becomes 0
    void add_term(const Mono& m, const mpz_class& c);

  private:
    void check_same(const FormalPoly& o) const {
        if (nvars_ != o.nvars_)
            fail(errc::shape_mismatch, "polynomials live over different variable sets");
    }

    uint32_t nvars_;
    TermMap terms_;
};

// Exact quotient f / g, or nothing when g does not divide f. Division is by
// leading-term elimination in the fixed monomial order.
std::optional<FormalPoly> exact_div(const FormalPoly& f, const FormalPoly& g);

// strict total order consistent across runs (term-by-term in the monomial
// order, coefficients as integers); for sorting families into multisets
bool formal_less(const FormalPoly& a, const FormalPoly& b);

}  // namespace zmds
