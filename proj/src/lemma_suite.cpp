#include "zmds/lemma_suite.hpp"

#include <algorithm>

#include "zmds/family.hpp"
#include "zmds/rng.hpp"

namespace zmds {

namespace {

void note(SuiteReport& rep, const std::string& broke) {
    if (broke.empty()) return;
    if (rep.failures++ == 0) rep.first_failure = broke;
}

std::vector<FormalPoly> member_polys(const PolyFamily& fam) {
    std::vector<FormalPoly> out;
    out.reserve(fam.members.size());
    for (const auto& m : fam.members) out.push_back(m.poly);
    return out;
}

// nontrivial tight index sets: 1 < |I| < m
std::vector<std::vector<uint32_t>> splittable_sets(const VectorSystem& sys) {
    std::vector<std::vector<uint32_t>> out;
    for (auto& I : tight_sets(sys))
        if (I.size() > 1 && I.size() < sys.m()) out.push_back(std::move(I));
    return out;
}

}  // namespace

VectorSystem random_vstar_system(std::mt19937_64& rng, uint32_t nmax, uint32_t kmax) {
    while (true) {
        uint32_t n = 2 + uint32_t(rng() % (nmax - 1));
        uint32_t k = 2 + uint32_t(rng() % (kmax - 1));
        uint32_t m = 1 + uint32_t(rng() % std::min(k, 4u));
        std::vector<std::vector<uint32_t>> vecs(m, std::vector<uint32_t>(n, 0));
        for (auto& v : vecs) {
            for (uint32_t j = 0; j + 1 < n; ++j) v[j] = uint32_t(rng() % 2);
            v[n - 1] = uint32_t(rng() % k);
            while (vec_weight(v) > k - 1) {
                uint32_t j = uint32_t(rng() % n);
                if (v[j]) --v[j];
            }
        }
        VectorSystem sys = system_from(n, k, std::move(vecs));
        if (check_vstar(sys).satisfied) return sys;
    }
}

std::string check_divide_instance(const VectorSystem& sys, uint32_t j) {
    VectorSystem div = lemma_divide(sys, j);
    if (div.k != sys.k - 1) return "degree target did not drop by one";
    if (!check_vstar(div).satisfied) return "divided system fails the check";

    PolyFamily before = system_family(sys), after = system_family(div);
    if (before.size() != after.size()) return "family size changed";
    FormalPoly lin = FormalPoly::var_x(sys.n) - FormalPoly::var_a(sys.n, j);
    for (uint32_t t = 0; t < before.size(); ++t) {
        bool match = before.members[t].row == after.members[t].row &&
                     before.members[t].e == after.members[t].e &&
                     before.members[t].poly == lin * after.members[t].poly;
        if (!match) return "family members did not factor through (x - a_j)";
    }
    return {};
}

std::string check_tight_split_instance(const VectorSystem& sys,
                                       const std::vector<uint32_t>& I, uint64_t probe) {
    TightSplit sp = lemma_tight_split(sys, I);
    if (!check_vstar(sp.left).satisfied) return "left system fails the check";
    if (!check_vstar(sp.right).satisfied) return "right system fails the check";
    if (system_family(sp.left).size() != system_family(sys).size())
        return "left family size drifted";

    // the split-off rows span exactly the degree-bounded multiples of
    // their meet
    std::vector<uint32_t> mv = meet(sys, I);
    auto right = member_polys(system_family(sp.right));
    auto meet_basis = basis_multiples(sys.k, mv);
    uint32_t want = uint32_t(sys.k - vec_weight(mv));
    if (uint32_t(right.size()) != want) return "tightness bookkeeping failed";

    auto both = right;
    both.insert(both.end(), meet_basis.begin(), meet_basis.end());
    bool spans = eval_rank(right, sys.k, probe) == want &&
                 eval_rank(meet_basis, sys.k, probe) == want &&
                 eval_rank(both, sys.k, probe) == want;
    if (!spans) return "split rows do not span the meet multiples";
    return {};
}

std::string check_merge_instance(const VectorSystem& sys) {
    VectorSystem merged = lemma_merge_last(sys);
    if (!check_vstar(merged).satisfied) return "merged system fails the check";

    PolyFamily before = system_family(sys), after = system_family(merged);
    if (before.size() != after.size()) return "family size changed";
    for (uint32_t t = 0; t < before.size(); ++t) {
        bool match = before.members[t].row == after.members[t].row &&
                     before.members[t].e == after.members[t].e &&
                     before.members[t].poly.merge_last_vars() == after.members[t].poly;
        if (!match) return "family members did not map under the substitution";
    }
    return {};
}

std::string check_increment_instance(const VectorSystem& sys, uint64_t probe) {
    IncrementResult inc = lemma_increment_last(sys);
    if (!check_vstar(inc.sys).satisfied) return "bumped system fails the check";

    auto before = member_polys(system_family(sys));
    auto after = member_polys(system_family(inc.sys));
    uint32_t d = uint32_t(before.size());
    if (uint32_t(after.size()) != d - 1) return "bumped family has the wrong size";
    after.push_back(inc.extra);

    auto both = before;
    both.insert(both.end(), after.begin(), after.end());
    bool spans = eval_rank(before, sys.k, probe) == d &&
                 eval_rank(after, sys.k, probe) == d &&
                 eval_rank(both, sys.k, probe) == d;
    if (!spans) return "dropped direction does not restore the span";
    return {};
}

SuiteReport run_divide_suite(uint32_t instances, uint64_t seed) {
    auto rng = make_rng(seed, 0xd1);
    SuiteReport rep;
    while (rep.instances < instances) {
        VectorSystem sys = random_vstar_system(rng);
        // pick a coordinate every row can give up; force the free final
        // coordinate when none exists naturally
        std::vector<uint32_t> cand;
        for (uint32_t c = 0; c < sys.n; ++c) {
            bool all = true;
            for (const auto& v : sys.vecs) all = all && v[c] >= 1;
            if (all) cand.push_back(c);
        }
        uint32_t j;
        if (!cand.empty()) {
            j = cand[rng() % cand.size()];
        } else {
            for (auto& v : sys.vecs) v[sys.n - 1] = std::max(v[sys.n - 1], 1u);
            if (!check_vstar(sys).satisfied) continue;
            j = sys.n - 1;
        }
        ++rep.instances;
        note(rep, check_divide_instance(sys, j));
    }
    return rep;
}

SuiteReport run_tight_split_suite(uint32_t instances, uint64_t seed) {
    auto rng = make_rng(seed, 0x5b);
    SuiteReport rep;
    while (rep.instances < instances) {
        VectorSystem sys = random_vstar_system(rng);
        if (sys.m() < 3) continue;
        auto cands = splittable_sets(sys);
        if (cands.empty()) continue;
        std::vector<uint32_t> I = cands[rng() % cands.size()];
        ++rep.instances;
        note(rep, check_tight_split_instance(sys, I, rng()));
    }
    return rep;
}

SuiteReport run_merge_suite(uint32_t instances, uint64_t seed) {
    auto rng = make_rng(seed, 0x3e);
    SuiteReport rep;
    while (rep.instances < instances) {
        VectorSystem sys = random_vstar_system(rng);
        // the fuse is only claimed safe when no nonsingleton set is tight
        if (tight_sets(sys).size() != sys.m()) continue;
        ++rep.instances;
        note(rep, check_merge_instance(sys));
    }
    return rep;
}

SuiteReport run_increment_suite(uint32_t instances, uint64_t seed) {
    auto rng = make_rng(seed, 0x1c);
    SuiteReport rep;
    while (rep.instances < instances) {
        VectorSystem sys = random_vstar_system(rng);
        if (sys.n >= sys.k) continue;
        // force the required last row and keep only systems still passing
        sys.vecs.back().assign(sys.n, 1);
        sys.vecs.back().back() = 0;
        if (!check_vstar(sys).satisfied) continue;
        ++rep.instances;
        note(rep, check_increment_instance(sys, rng()));
    }
    return rep;
}

}  // namespace zmds
