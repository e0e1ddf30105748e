#pragma once

#include <stdexcept>
#include <string>

namespace zmds {

enum class errc {
    non_prime_characteristic,
    degree_out_of_range,
    division_by_zero,
    field_mismatch,
    shape_mismatch,
    pattern_violates_mds,
    distance_out_of_range,
    condition_violated,
    pattern_not_maximal,
    points_not_distinct,
    field_too_small,
    tries_exhausted,
    certification_inconclusive,
    construction_failed,
    search_space_too_large,
    budget_exceeded,
    empty_index_set,
    multiplicity_too_large,
    exact_mode_cap_exceeded,
    precondition_violated,
    not_tight,
    trivial_split,
    ambient_too_small,
    bad_input,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace zmds
