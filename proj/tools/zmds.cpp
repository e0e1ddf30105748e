#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zmds/errors.hpp"
#include "zmds/family.hpp"
#include "zmds/field.hpp"
#include "zmds/grs.hpp"
#include "zmds/json_io.hpp"
#include "zmds/lemma_suite.hpp"
#include "zmds/pattern.hpp"
#include "zmds/rng.hpp"
#include "zmds/vecsys.hpp"
#include "zmds/verify.hpp"

using namespace zmds;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit contract: 0 pass, 1 negative verdict, 2 input error, 3 a cap or
// budget stopped the computation before a verdict.
int exit_code_for(errc c) {
    switch (c) {
        case errc::condition_violated:
        case errc::pattern_violates_mds:
            return 1;
        case errc::budget_exceeded:
        case errc::search_space_too_large:
        case errc::exact_mode_cap_exceeded:
        case errc::tries_exhausted:
        case errc::certification_inconclusive:
        case errc::construction_failed:
            return 3;
        default:
            return 2;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::bad_input, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// all indices in reports are 1-based, matching the input documents
json one_based(const std::vector<uint32_t>& v) {
    json a = json::array();
    for (uint32_t x : v) a.push_back(x + 1);
    return a;
}

void emit(RunReport& rep, const Timer& t, const std::string& human) {
    rep.elapsed_ms = t.ms();
    std::cout << report_to_json(rep).dump(2) << "\n";
    std::cerr << human << "\n";
}

int emit_error(RunReport& rep, const Timer& t, const error& e) {
    rep.verdict = "error";
    rep.details["error"] = errc_name(e.code());
    rep.details["message"] = e.what();
    emit(rep, t, e.what());
    return exit_code_for(e.code());
}

RunReport base_report(const std::string& command, const std::string& input_bytes,
                      uint64_t seed) {
    RunReport rep;
    rep.command = command;
    rep.version = kVersion;
    rep.digest = input_digest(input_bytes);
    rep.seed = seed;
    return rep;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ZMDS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0 && v <= 4096) return unsigned(v);
    }
    return 1;
}

uint64_t binom_u64(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(r);
}

json condition_witness_json(const ConditionWitness& w) {
    return {{"rows", one_based(w.rows)},
            {"intersection", one_based(w.meet_cols)},
            {"lhs", w.lhs},
            {"bound", w.bound}};
}

// ---------------------------------------------------------------- check ---

int cmd_check(const std::string& file, bool fast) {
    Timer t;
    std::string bytes;
    RunReport rep = base_report("check", "", 0);
    try {
        bytes = read_file(file);
        rep.digest = input_digest(bytes);
        ZeroPattern pat = pattern_from_json(parse_json_text(bytes));
        CheckResult res = check_mds(pat, fast);
        rep.details["n"] = pat.n;
        rep.details["k"] = pat.k;
        if (res.satisfied) {
            rep.verdict = "satisfied";
            emit(rep, t, "pattern satisfies the support condition");
            return 0;
        }
        rep.verdict = "violated";
        rep.details["witness"] = condition_witness_json(*res.witness);
        std::ostringstream h;
        h << "violated: rows " << one_based(res.witness->rows).dump() << " give "
          << res.witness->lhs << " > " << res.witness->bound;
        emit(rep, t, h.str());
        return 1;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// ------------------------------------------------------------ construct ---

int cmd_construct(const std::string& file, const std::string& field_spec,
                  const std::string& mode, uint64_t seed, uint32_t max_tries,
                  const std::string& emit_fmt, uint32_t d) {
    Timer t;
    RunReport rep = base_report("construct", "", seed);
    ZeroPattern pat;
    bool have_pat = false;
    try {
        std::string bytes = read_file(file);
        rep.digest = input_digest(bytes);
        pat = pattern_from_json(parse_json_text(bytes));
        have_pat = true;
        uint32_t keep_rows = pat.k;
        ZeroPattern target = d ? distance_reduce(pat, d) : pat;

        ConstructOptions opt;
        opt.mode = (mode == "random") ? PointMode::random : PointMode::sequential;
        opt.seed = seed;
        opt.seq.seed = seed;
        opt.max_tries = max_tries;
        std::optional<Field> field;
        if (!field_spec.empty()) field = Field::parse(field_spec);

        GeneratorMatrix g = construct_mds(target, field, opt);

        GfMat out = g.a;
        if (d && keep_rows < g.a.rows) {
            GfMat top(g.points.f, keep_rows, g.a.cols);
            for (uint32_t r = 0; r < keep_rows; ++r)
                for (uint32_t c = 0; c < g.a.cols; ++c) top.at(r, c) = g.a.at(r, c);
            out = std::move(top);
        }

        MatrixDoc doc;
        doc.field = g.points.f;
        doc.rows = out;
        doc.points.assign(g.points.alpha.begin(), g.points.alpha.begin() + out.cols);
        if (out.rows == g.full.rows) doc.det_c = g.det_c;

        rep.verdict = "constructed";
        rep.details["field"] = g.points.f.to_string();
        rep.details["points"] = g.points.alpha;
        rep.details["det_C"] = g.det_c;
        rep.details["verified"] = true;  // construct re-checks zeros and minors
        rep.details["requested"] = pattern_to_json(g.requested);
        rep.details["completed"] = pattern_to_json(g.completed);
        rep.details["matrix"] = matrix_to_json(doc);
        std::ostringstream h;
        h << "built " << out.rows << "x" << out.cols << " over GF("
          << g.points.f.to_string() << "), det C = " << g.det_c << ", verified";
        if (d) {
            rep.details["distance_target"] = d;
            try {
                uint32_t dist = min_distance(out);
                rep.details["min_distance"] = dist;
                h << ", distance " << dist;
            } catch (const error& e) {
                if (e.code() != errc::budget_exceeded) throw;
                rep.details["min_distance"] = nullptr;
                rep.details["distance_note"] = "measurement budget exceeded";
            }
        }
        if (emit_fmt == "csv") {
            std::cout << matrix_to_csv(out);
            std::cerr << h.str() << "\n";
        } else {
            emit(rep, t, h.str());
        }
        return 0;
    } catch (const error& e) {
        if (e.code() == errc::condition_violated && have_pat) {
            rep.verdict = "condition_violated";
            CheckResult res = d && check_mds(pat).satisfied
                                  ? distance_condition_check(pat, d)
                                  : check_mds(pat);
            if (!res.satisfied)
                rep.details["witness"] = condition_witness_json(*res.witness);
            emit(rep, t, e.what());
            return 1;
        }
        return emit_error(rep, t, e);
    }
}

// --------------------------------------------------------------- verify ---

int cmd_verify(const std::string& matrix_file, const std::string& pattern_file,
               bool one_sided, bool gray, unsigned threads) {
    Timer t;
    RunReport rep = base_report("verify", "", 0);
    try {
        std::string bytes = read_file(matrix_file);
        rep.digest = input_digest(bytes);
        MatrixDoc doc = matrix_from_json(parse_json_text(bytes));

        VerifyOptions vo;
        vo.gray = gray;
        vo.threads = resolve_threads(threads);
        auto witness = verify_mds(doc.rows, vo);
        bool mds = !witness.has_value();
        rep.details["mds"] = mds;
        rep.details["minors"] = binom_u64(doc.rows.cols, doc.rows.rows);
        if (witness) {
            rep.details["minor_witness"] = {{"columns", one_based(witness->cols)},
                                            {"det", witness->det}};
        }

        bool pattern_ok = true;
        if (!pattern_file.empty()) {
            ZeroPattern pat = pattern_from_json(parse_json_text(read_file(pattern_file)));
            pattern_ok = verify_zero_pattern(
                doc.rows, pat, one_sided ? ZeroCheckMode::one_sided : ZeroCheckMode::strict);
            rep.details["pattern"] = pattern_ok;
            rep.details["pattern_mode"] = one_sided ? "one_sided" : "strict";
        }

        bool pass = mds && pattern_ok;
        rep.verdict = pass ? "pass" : "fail";
        std::ostringstream h;
        if (mds)
            h << "all " << rep.details["minors"] << " minors nonsingular";
        else
            h << "singular minor at columns " << rep.details["minor_witness"]["columns"].dump();
        if (!pattern_file.empty()) h << (pattern_ok ? "; zeros match" : "; zeros mismatch");
        emit(rep, t, h.str());
        return pass ? 0 : 1;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// -------------------------------------------------------------- mindist ---

int cmd_mindist(const std::string& matrix_file, uint64_t budget) {
    Timer t;
    RunReport rep = base_report("mindist", "", 0);
    try {
        std::string bytes = read_file(matrix_file);
        rep.digest = input_digest(bytes);
        MatrixDoc doc = matrix_from_json(parse_json_text(bytes));
        uint32_t dist = min_distance(doc.rows, budget);
        uint32_t singleton = uint32_t(doc.rows.cols - doc.rows.rows + 1);
        rep.verdict = "ok";
        rep.details["min_distance"] = dist;
        rep.details["singleton_bound"] = singleton;
        std::ostringstream h;
        h << "minimum distance " << dist << " (Singleton bound " << singleton << ")";
        emit(rep, t, h.str());
        return 0;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// ------------------------------------------------------------- minfield ---

int cmd_minfield(const std::string& file, uint32_t qmax, uint64_t tuple_cap) {
    Timer t;
    RunReport rep = base_report("minfield", "", 0);
    try {
        std::string bytes = read_file(file);
        rep.digest = input_digest(bytes);
        ZeroPattern pat = pattern_from_json(parse_json_text(bytes));
        auto recs = min_field_search(pat, qmax, tuple_cap);
        json per = json::array();
        std::optional<uint32_t> first;
        for (const auto& r : recs) {
            per.push_back({{"q", r.q}, {"feasible", r.feasible}, {"tuples_tried", r.tuples_tried}});
            if (r.feasible && !first) first = r.q;
        }
        rep.details["per_field"] = std::move(per);
        rep.details["first_feasible"] = first ? json(*first) : json(nullptr);
        // reference bounds: guaranteed size for sequential selection, and the
        // sizes above which random selection works with positive probability
        rep.details["bounds"] = {
            {"sequential_guarantee", uint64_t(pat.n) + pat.k - 1},
            {"random_positive_probability_above", binom_u64(pat.n, pat.k)},
            {"random_improved_above", binom_u64(pat.n - 1, pat.k - 1)}};
        rep.details["note"] =
            "feasibility is relative to the row-polynomial construction; an infeasible "
            "field may still admit other matrices with this pattern";
        rep.verdict = first ? "found" : "none";
        std::ostringstream h;
        if (first)
            h << "first feasible field: q = " << *first;
        else
            h << "no feasible field up to q = " << qmax;
        emit(rep, t, h.str());
        return first ? 0 : 1;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// ---------------------------------------------------------- vstar-check ---

const char* violation_name(SystemViolation v) {
    switch (v) {
        case SystemViolation::multiplicity_bound: return "multiplicity_bound";
        case SystemViolation::coordinate_bound: return "coordinate_bound";
        default: return "sum_bound";
    }
}

int cmd_vstar(const std::string& file) {
    Timer t;
    RunReport rep = base_report("vstar-check", "", 0);
    try {
        std::string bytes = read_file(file);
        rep.digest = input_digest(bytes);
        VectorSystem sys = system_from_json(parse_json_text(bytes));
        SystemCheck res = check_vstar(sys);
        rep.details["n"] = sys.n;
        rep.details["k"] = sys.k;
        rep.details["m"] = sys.m();
        if (res.satisfied) {
            rep.verdict = "satisfied";
            emit(rep, t, "system satisfies the restricted weight condition");
            return 0;
        }
        const SystemWitness& w = *res.witness;
        json wj = {{"kind", violation_name(w.kind)},
                   {"rows", one_based(w.rows)},
                   {"lhs", w.lhs},
                   {"bound", w.bound}};
        if (w.kind == SystemViolation::coordinate_bound) wj["coordinate"] = w.coord + 1;
        rep.details["witness"] = std::move(wj);
        rep.verdict = "violated";
        std::ostringstream h;
        h << "violated (" << violation_name(w.kind) << "): rows "
          << one_based(w.rows).dump() << " give " << w.lhs << " > " << w.bound;
        emit(rep, t, h.str());
        return 1;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// ---------------------------------------------------------------- indep ---

int cmd_indep(const std::string& file, const std::string& mode, uint64_t seed, int trials) {
    Timer t;
    RunReport rep = base_report("indep", "", seed);
    try {
        std::string bytes = read_file(file);
        rep.digest = input_digest(bytes);
        VectorSystem sys = system_from_json(parse_json_text(bytes));
        PolyFamily fam = system_family(sys);

        IndependenceOptions opt;
        opt.mode = (mode == "exact") ? IndepMode::exact : IndepMode::randomized;
        opt.seed = seed;
        opt.trials = trials;
        IndependenceReport res = independence_check(fam, opt);

        rep.details["members"] = fam.size();
        rep.details["mode"] = mode;
        if (opt.mode == IndepMode::exact) {
            // integer elimination decides independence over the rationals;
            // positive-characteristic verdicts come from randomized mode over
            // a prime field
            rep.details["verdict_scope"] = "characteristic 0";
            if (res.witness) {
                json w = json::array();
                for (const auto& p : *res.witness) w.push_back(p.to_string());
                rep.details["witness"] = std::move(w);
            }
        } else {
            rep.details["trials"] = res.trials;
            rep.details["error_bound"] = res.error_bound;
            rep.details["modulus"] = kEvalPrime;
        }
        rep.verdict = res.independent ? "independent" : "dependent";
        std::ostringstream h;
        h << fam.size() << " members " << rep.verdict;
        if (!res.independent && opt.mode == IndepMode::randomized)
            h << " (error bound " << res.error_bound << ")";
        emit(rep, t, h.str());
        return res.independent ? 0 : 1;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// --------------------------------------------------------------- lemmas ---

json suite_json(const SuiteReport& r) {
    json j = {{"instances", r.instances}, {"failures", r.failures}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    return j;
}

int cmd_lemmas(const std::string& file, uint32_t generate, uint64_t seed) {
    Timer t;
    RunReport rep = base_report("lemmas", "", seed);
    try {
        if (file.empty()) {
            SuiteReport divide = run_divide_suite(generate, seed);
            SuiteReport split = run_tight_split_suite(generate, seed);
            SuiteReport merge = run_merge_suite(generate, seed);
            SuiteReport increment = run_increment_suite(generate, seed);
            rep.details["divide"] = suite_json(divide);
            rep.details["tight_split"] = suite_json(split);
            rep.details["merge"] = suite_json(merge);
            rep.details["increment"] = suite_json(increment);
            uint32_t failures =
                divide.failures + split.failures + merge.failures + increment.failures;
            rep.verdict = failures == 0 ? "pass" : "fail";
            std::ostringstream h;
            h << "four transformation suites, " << generate << " instances each: "
              << (failures == 0 ? "all held" : "invariants broke");
            emit(rep, t, h.str());
            return failures == 0 ? 0 : 1;
        }

        // single-system mode: apply whichever steps have their preconditions
        std::string bytes = read_file(file);
        rep.digest = input_digest(bytes);
        VectorSystem sys = system_from_json(parse_json_text(bytes));
        if (!check_vstar(sys).satisfied) {
            rep.verdict = "violated";
            emit(rep, t, "system fails the restricted weight condition");
            return 1;
        }
        auto rng = make_rng(seed, 0xcc);
        uint32_t failures = 0;

        json divide = json::array();
        for (uint32_t j = 0; j < sys.n; ++j) {
            bool all = true;
            for (const auto& v : sys.vecs) all = all && v[j] >= 1;
            if (!all) continue;
            std::string broke = check_divide_instance(sys, j);
            failures += !broke.empty();
            divide.push_back({{"coordinate", j + 1},
                              {"result", broke.empty() ? "held" : broke}});
        }
        rep.details["divide"] = divide.empty() ? json("skipped: no shared coordinate")
                                               : divide;

        json split = json::array();
        for (const auto& I : tight_sets(sys)) {
            if (I.size() < 2 || I.size() >= sys.m()) continue;
            std::string broke = check_tight_split_instance(sys, I, rng());
            failures += !broke.empty();
            split.push_back({{"rows", one_based(I)},
                             {"result", broke.empty() ? "held" : broke}});
        }
        rep.details["tight_split"] =
            split.empty() ? json("skipped: no nontrivial tight set") : split;

        if (sys.n >= 2 && tight_sets(sys).size() == sys.m()) {
            std::string broke = check_merge_instance(sys);
            failures += !broke.empty();
            rep.details["merge"] = broke.empty() ? "held" : broke;
        } else {
            rep.details["merge"] = "skipped: nonsingleton tight set or too few coordinates";
        }

        bool inc_ok = sys.n < sys.k;
        if (inc_ok) {
            const auto& last = sys.vecs.back();
            for (uint32_t j = 0; j + 1 < sys.n; ++j) inc_ok = inc_ok && last[j] == 1;
            inc_ok = inc_ok && last.back() == 0;
        }
        if (inc_ok) {
            std::string broke = check_increment_instance(sys, rng());
            failures += !broke.empty();
            rep.details["increment"] = broke.empty() ? "held" : broke;
        } else {
            rep.details["increment"] = "skipped: needs n < k and last row (1,..,1,0)";
        }

        rep.verdict = failures == 0 ? "pass" : "fail";
        emit(rep, t,
             failures == 0 ? "every applicable step held" : "an applicable step broke");
        return failures == 0 ? 0 : 1;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

// ---------------------------------------------------------------- bench ---

int cmd_bench_minors(uint32_t k, uint32_t n, const std::string& field_spec,
                     unsigned threads, uint64_t seed) {
    Timer t;
    RunReport rep = base_report("bench minors", "", seed);
    try {
        if (k == 0 || n < k) fail(errc::bad_input, "need 1 <= k <= n");
        if (n > 65536) fail(errc::bad_input, "benchmark sizes stop at n = 65536");
        Field f = field_spec.empty() ? Field::smallest_at_least(n + k - 1)
                                     : Field::parse(field_spec);
        if (f.order() < n) fail(errc::field_too_small, "need q >= n distinct points");

        // a matrix that is MDS by construction: rows alpha_j^i at distinct
        // points (every k x k minor is a nonzero Vandermonde determinant)
        std::vector<uint32_t> codes(f.order());
        for (uint32_t i = 0; i < f.order(); ++i) codes[i] = i;
        auto rng = make_rng(seed, 0xbe);
        std::shuffle(codes.begin(), codes.end(), rng);
        GfMat a(f, k, n);
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t pw = 1;  // code 1 is the multiplicative identity
            for (uint32_t i = 0; i < k; ++i) {
                a.at(i, j) = pw;
                pw = f.mul(pw, codes[j]);
            }
        }

        unsigned tn = threads ? threads : resolve_threads(0);
        Timer single;
        auto w1 = verify_mds(a, {false, 1});
        double ms_single = single.ms();
        Timer multi;
        auto w2 = verify_mds(a, {false, tn});
        double ms_multi = multi.ms();
        if (w1 || w2) fail(errc::internal, "benchmark matrix failed verification");

        rep.verdict = "ok";
        rep.details["k"] = k;
        rep.details["n"] = n;
        rep.details["field"] = f.to_string();
        rep.details["minors"] = binom_u64(n, k);
        rep.details["ms_single"] = ms_single;
        rep.details["ms_threads"] = ms_multi;
        rep.details["threads"] = tn;
        rep.details["speedup"] = ms_multi > 0 ? ms_single / ms_multi : 0.0;
        std::ostringstream h;
        h << binom_u64(n, k) << " minors: " << ms_single << " ms single, " << ms_multi
          << " ms with " << tn << " threads";
        emit(rep, t, h.str());
        return 0;
    } catch (const error& e) {
        return emit_error(rep, t, e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "MDS generator matrices with prescribed zeros, and the polynomial-family "
        "machinery behind them. Machine-readable JSON goes to stdout, a one-line "
        "summary to stderr. Thread counts default to the ZMDS_THREADS environment "
        "variable when set."};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    int rc = 0;

    // check
    std::string check_file;
    bool check_fast = false;
    auto* check = app.add_subcommand("check", "test a zero pattern against the support condition");
    check->add_option("pattern", check_file, "pattern JSON file")->required();
    check->add_flag("--fast", check_fast, "restrict to intersection-closed row sets");
    check->callback([&] { rc = cmd_check(check_file, check_fast); });

    // construct
    std::string cons_file, cons_field, cons_mode = "sequential", cons_emit = "json";
    uint64_t cons_seed = 1;
    uint32_t cons_tries = 64, cons_d = 0;
    auto* cons = app.add_subcommand("construct", "build a verified matrix with prescribed zeros");
    cons->add_option("pattern", cons_file, "pattern JSON file")->required();
    cons->add_option("--field", cons_field, "field as p or p^m (default: smallest workable)");
    cons->add_option("--mode", cons_mode, "point selection strategy")
        ->check(CLI::IsMember({"sequential", "random"}));
    cons->add_option("--seed", cons_seed, "seed for randomized selection");
    cons->add_option("--max-tries", cons_tries, "attempts in random mode");
    cons->add_option("--emit", cons_emit, "output format for the matrix")
        ->check(CLI::IsMember({"json", "csv"}));
    cons->add_option("--d", cons_d,
                     "target distance: pad rows, construct, keep the original rows");
    cons->callback([&] {
        rc = cmd_construct(cons_file, cons_field, cons_mode, cons_seed, cons_tries, cons_emit,
                           cons_d);
    });

    // verify
    std::string ver_matrix, ver_pattern;
    bool ver_one_sided = false, ver_gray = false;
    unsigned ver_threads = 0;
    auto* ver = app.add_subcommand("verify", "check all maximal minors, optionally a zero pattern");
    ver->add_option("matrix", ver_matrix, "matrix JSON file")->required();
    ver->add_option("--pattern", ver_pattern, "pattern JSON file to match zeros against");
    ver->add_flag("--one-sided", ver_one_sided, "only require prescribed zeros to be zero");
    ver->add_flag("--gray", ver_gray, "single-swap minor order with inverse updates");
    ver->add_option("--threads", ver_threads, "worker threads (0 = ZMDS_THREADS or 1)");
    ver->callback(
        [&] { rc = cmd_verify(ver_matrix, ver_pattern, ver_one_sided, ver_gray, ver_threads); });

    // mindist
    std::string md_matrix;
    uint64_t md_budget = 1'000'000;
    auto* md = app.add_subcommand("mindist", "brute-force minimum distance of the row code");
    md->add_option("matrix", md_matrix, "matrix JSON file")->required();
    md->add_option("--budget", md_budget, "largest q^k message space to enumerate");
    md->callback([&] { rc = cmd_mindist(md_matrix, md_budget); });

    // minfield
    std::string mf_file;
    uint32_t mf_qmax = 0;
    uint64_t mf_cap = 20'000'000;
    auto* mf = app.add_subcommand(
        "minfield", "which small fields admit the construction for a maximal pattern");
    mf->add_option("pattern", mf_file, "pattern JSON file")->required();
    mf->add_option("--qmax", mf_qmax, "largest field order to try")->required();
    mf->add_option("--tuple-cap", mf_cap, "largest point-tuple count to enumerate per field");
    mf->callback([&] { rc = cmd_minfield(mf_file, mf_qmax, mf_cap); });

    // vstar-check
    std::string vs_file;
    auto* vs = app.add_subcommand("vstar-check",
                                  "test a vector system against the restricted weight condition");
    vs->add_option("system", vs_file, "system JSON file")->required();
    vs->callback([&] { rc = cmd_vstar(vs_file); });

    // indep
    std::string in_file, in_mode = "randomized";
    uint64_t in_seed = 1;
    int in_trials = 3;
    auto* ind = app.add_subcommand("indep",
                                   "linear independence of a system's polynomial family");
    ind->add_option("system", in_file, "system JSON file")->required();
    ind->add_option("--mode", in_mode, "exact integer elimination or randomized evaluation")
        ->check(CLI::IsMember({"exact", "randomized"}));
    ind->add_option("--seed", in_seed, "seed for randomized evaluation");
    ind->add_option("--trials", in_trials, "randomized evaluation rounds");
    ind->callback([&] { rc = cmd_indep(in_file, in_mode, in_seed, in_trials); });

    // lemmas
    std::string lm_file;
    uint32_t lm_generate = 100;
    uint64_t lm_seed = 1;
    auto* lm = app.add_subcommand(
        "lemmas", "property suites for the four system transformations");
    lm->add_option("system", lm_file, "optional system JSON file to run the steps on");
    lm->add_option("--generate", lm_generate, "random instances per suite when no file given");
    lm->add_option("--seed", lm_seed, "generation seed");
    lm->callback([&] { rc = cmd_lemmas(lm_file, lm_generate, lm_seed); });

    // bench
    auto* bench = app.add_subcommand("bench", "performance measurements");
    bench->require_subcommand(1);
    uint32_t bm_k = 8, bm_n = 16;
    std::string bm_field;
    unsigned bm_threads = 0;
    uint64_t bm_seed = 1;
    auto* bm = bench->add_subcommand("minors", "time full minor verification");
    bm->add_option("--k", bm_k, "rows");
    bm->add_option("--n", bm_n, "columns");
    bm->add_option("--field", bm_field, "field as p or p^m (default: smallest workable)");
    bm->add_option("--threads", bm_threads, "threads for the parallel pass (0 = auto)");
    bm->add_option("--seed", bm_seed, "point shuffle seed");
    bm->callback([&] { rc = cmd_bench_minors(bm_k, bm_n, bm_field, bm_threads, bm_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }
    return rc;
}
