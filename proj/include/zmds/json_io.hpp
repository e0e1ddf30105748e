#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zmds/field.hpp"
#include "zmds/gfmat.hpp"
#include "zmds/pattern.hpp"
#include "zmds/vecsys.hpp"

namespace zmds {

// Wire formats. Columns in pattern documents are 1-based; everything in
// memory stays 0-based. Parsers reject malformed documents with bad_input
// and a pointed diagnostic. parse(emit(x)) == x throughout.

// {"n":.., "k":.., "sets":[[..],..]} plus optional "n_increased_from"
nlohmann::json pattern_to_json(const ZeroPattern& pat);
ZeroPattern pattern_from_json(const nlohmann::json& j);

// a matrix document; points and det_C are present when the producer knew them
struct MatrixDoc {
    Field field = Field::make(2, 1);
    GfMat rows;  // k x n, entries are element codes
    std::vector<uint32_t> points;
    std::optional<uint32_t> det_c;
};

// {"field":"p^m", "k":.., "n":.., "rows":[[..],..], "points":[..], "det_C":..}
nlohmann::json matrix_to_json(const MatrixDoc& doc);
MatrixDoc matrix_from_json(const nlohmann::json& j);

// rows as plain comma-separated codes, one line per row
std::string matrix_to_csv(const GfMat& rows);

// {"n":.., "k":.., "vectors":[[..],..]}
nlohmann::json system_to_json(const VectorSystem& sys);
VectorSystem system_from_json(const nlohmann::json& j);

// FNV-1a 64-bit digest of raw input bytes, as fixed-width hex
std::string input_digest(const std::string& bytes);

// Envelope every command emits: enough to replay the run and audit the
// verdict. The details member carries command-specific structure
// (witnesses, matrices, timings).
struct RunReport {
    std::string command;
    std::string version;
    std::string digest;   // of the primary input document
    uint64_t seed = 0;
    std::string verdict;  // command-specific summary token
    nlohmann::json details = nlohmann::json::object();
    double elapsed_ms = 0.0;
};

nlohmann::json report_to_json(const RunReport& rep);

// strict parse of a whole document; bad_input on any syntax error
nlohmann::json parse_json_text(const std::string& text);

}  // namespace zmds
