#include "zmds/json_io.hpp"

#include <cstdio>

namespace zmds {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
    if (!j.is_object()) fail(errc::bad_input, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(errc::bad_input, std::string("missing \"") + key + "\" field");
    return *it;
}

uint32_t as_u32(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() > 0xffffffffll)
        fail(errc::bad_input, std::string(what) + " must be a nonnegative integer");
    return uint32_t(v.get<int64_t>());
}

std::vector<uint32_t> as_u32_list(const json& v, const char* what) {
    if (!v.is_array()) fail(errc::bad_input, std::string(what) + " must be an array");
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(as_u32(e, what));
    return out;
}

std::vector<std::vector<uint32_t>> as_u32_lists(const json& v, const char* what) {
    if (!v.is_array()) fail(errc::bad_input, std::string(what) + " must be an array");
    std::vector<std::vector<uint32_t>> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(as_u32_list(e, what));
    return out;
}

}  // namespace

json pattern_to_json(const ZeroPattern& pat) {
    json sets = json::array();
    for (const auto& s : pat.sets) {
        json row = json::array();
        for (uint32_t c : s) row.push_back(c + 1);
        sets.push_back(std::move(row));
    }
    json j = {{"n", pat.n}, {"k", pat.k}, {"sets", std::move(sets)}};
    if (pat.n_increased_from) j["n_increased_from"] = *pat.n_increased_from;
    return j;
}

ZeroPattern pattern_from_json(const json& j) {
    uint32_t n = as_u32(need(j, "n"), "\"n\"");
    uint32_t k = as_u32(need(j, "k"), "\"k\"");
    auto sets = as_u32_lists(need(j, "sets"), "\"sets\"");
    for (auto& s : sets)
        for (auto& c : s) {
            if (c == 0) fail(errc::bad_input, "column indices are 1-based");
            --c;
        }
    ZeroPattern pat = pattern_from_sets(n, k, std::move(sets));
    if (auto it = j.find("n_increased_from"); it != j.end())
        pat.n_increased_from = as_u32(*it, "\"n_increased_from\"");
    return pat;
}

json matrix_to_json(const MatrixDoc& doc) {
    json rows = json::array();
    for (size_t r = 0; r < doc.rows.rows; ++r) {
        json row = json::array();
        for (size_t c = 0; c < doc.rows.cols; ++c) row.push_back(doc.rows.at(r, c));
        rows.push_back(std::move(row));
    }
    json j = {{"field", doc.field.to_string()},
              {"k", doc.rows.rows},
              {"n", doc.rows.cols},
              {"rows", std::move(rows)}};
    if (!doc.points.empty()) j["points"] = doc.points;
    if (doc.det_c) j["det_C"] = *doc.det_c;
    return j;
}

MatrixDoc matrix_from_json(const json& j) {
    const json& fs = need(j, "field");
    if (!fs.is_string()) fail(errc::bad_input, "\"field\" must be a \"p^m\" string");
    MatrixDoc doc;
    doc.field = Field::parse(fs.get<std::string>());
    uint32_t k = as_u32(need(j, "k"), "\"k\"");
    uint32_t n = as_u32(need(j, "n"), "\"n\"");
    if (k == 0 || n == 0) fail(errc::bad_input, "matrix dimensions must be positive");
    auto rows = as_u32_lists(need(j, "rows"), "\"rows\"");
    if (rows.size() != k) fail(errc::bad_input, "expected exactly k rows");
    doc.rows = GfMat(doc.field, k, n);
    for (uint32_t r = 0; r < k; ++r) {
        if (rows[r].size() != n) fail(errc::bad_input, "expected exactly n entries per row");
        for (uint32_t c = 0; c < n; ++c) {
            if (rows[r][c] >= doc.field.order())
                fail(errc::bad_input, "matrix entry is not an element code of the field");
            doc.rows.at(r, c) = rows[r][c];
        }
    }
    if (auto it = j.find("points"); it != j.end()) {
        doc.points = as_u32_list(*it, "\"points\"");
        if (doc.points.size() != n) fail(errc::bad_input, "expected one point per column");
        for (uint32_t p : doc.points)
            if (p >= doc.field.order())
                fail(errc::bad_input, "point is not an element code of the field");
    }
    if (auto it = j.find("det_C"); it != j.end()) {
        uint32_t d = as_u32(*it, "\"det_C\"");
        if (d >= doc.field.order())
            fail(errc::bad_input, "det_C is not an element code of the field");
        doc.det_c = d;
    }
    return doc;
}

std::string matrix_to_csv(const GfMat& rows) {
    std::string out;
    for (size_t r = 0; r < rows.rows; ++r) {
        for (size_t c = 0; c < rows.cols; ++c) {
            if (c) out += ',';
            out += std::to_string(rows.at(r, c));
        }
        out += '\n';
    }
    return out;
}

json system_to_json(const VectorSystem& sys) {
    return {{"n", sys.n}, {"k", sys.k}, {"vectors", sys.vecs}};
}

VectorSystem system_from_json(const json& j) {
    uint32_t n = as_u32(need(j, "n"), "\"n\"");
    uint32_t k = as_u32(need(j, "k"), "\"k\"");
    auto vecs = as_u32_lists(need(j, "vectors"), "\"vectors\"");
    return system_from(n, k, std::move(vecs));
}

std::string input_digest(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_to_json(const RunReport& rep) {
    return {{"command", rep.command}, {"version", rep.version},
            {"input_digest", rep.digest}, {"seed", rep.seed},
            {"verdict", rep.verdict},     {"details", rep.details},
            {"elapsed_ms", rep.elapsed_ms}};
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::bad_input, "input is not valid JSON");
    return j;
}

}  // namespace zmds
