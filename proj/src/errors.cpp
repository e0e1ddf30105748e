#include "zmds/errors.hpp"

namespace zmds {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "non_prime_characteristic";
        case errc::degree_out_of_range: return "degree_out_of_range";
        case errc::division_by_zero: return "division_by_zero";
        case errc::field_mismatch: return "field_mismatch";
        case errc::shape_mismatch: return "shape_mismatch";
        case errc::pattern_violates_mds: return "pattern_violates_mds";
        case errc::distance_out_of_range: return "distance_out_of_range";
        case errc::condition_violated: return "condition_violated";
        case errc::pattern_not_maximal: return "pattern_not_maximal";
        case errc::points_not_distinct: return "points_not_distinct";
        case errc::field_too_small: return "field_too_small";
        case errc::tries_exhausted: return "tries_exhausted";
        case errc::certification_inconclusive: return "certification_inconclusive";
        case errc::construction_failed: return "construction_failed";
        case errc::search_space_too_large: return "search_space_too_large";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::empty_index_set: return "empty_index_set";
        case errc::multiplicity_too_large: return "multiplicity_too_large";
        case errc::exact_mode_cap_exceeded: return "exact_mode_cap_exceeded";
        case errc::precondition_violated: return "precondition_violated";
        case errc::not_tight: return "not_tight";
        case errc::trivial_split: return "trivial_split";
        case errc::ambient_too_small: return "ambient_too_small";
        case errc::bad_input: return "bad_input";
        case errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace zmds
