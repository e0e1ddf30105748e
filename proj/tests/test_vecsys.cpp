#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zmds/pattern.hpp"
#include "zmds/rng.hpp"
#include "zmds/vecsys.hpp"

using namespace zmds;

namespace {

using Vecs = std::vector<std::vector<uint32_t>>;

// indicator system of a set pattern: m = k rows over the pattern's columns
VectorSystem indicator_system(const ZeroPattern& pat) {
    Vecs vecs(pat.k, std::vector<uint32_t>(pat.n, 0));
    for (uint32_t i = 0; i < pat.k; ++i)
        for (uint32_t j : pat.sets[i]) vecs[i][j] = 1;
    return system_from(pat.n, pat.k, std::move(vecs));
}

VectorSystem random_vstar_system(std::mt19937_64& rng, uint32_t nmax = 5, uint32_t kmax = 5) {
    while (true) {
        uint32_t n = 2 + uint32_t(rng() % (nmax - 1));
        uint32_t k = 2 + uint32_t(rng() % (kmax - 1));
        uint32_t m = 1 + uint32_t(rng() % std::min(k, 4u));
        Vecs vecs(m, std::vector<uint32_t>(n, 0));
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

}  // namespace

TEST_CASE("system construction and meet") {
    SUBCASE("meet of complementary indicators is zero") {
        VectorSystem sys = system_from(2, 2, {{1, 0}, {0, 1}});
        CHECK(meet(sys, {0, 1}) == std::vector<uint32_t>{0, 0});
        CHECK(meet(sys, {0}) == std::vector<uint32_t>{1, 0});  // singleton is the row itself
        CHECK(meet(sys, {1}) == std::vector<uint32_t>{0, 1});
    }

    SUBCASE("meet of indicators is the indicator of the intersection") {
        ZeroPattern pat = pattern_from_sets(5, 3, {{0, 1}, {1, 2}, {1, 4}});
        VectorSystem sys = indicator_system(pat);
        CHECK(meet(sys, {0, 1, 2}) == std::vector<uint32_t>{0, 1, 0, 0, 0});  // common column 1
        CHECK(meet(sys, {0, 2}) == std::vector<uint32_t>{0, 1, 0, 0, 0});
    }

    SUBCASE("coordinatewise minimum with multiplicities") {
        VectorSystem sys = system_from(3, 4, {{2, 1, 0}, {1, 3, 0}});
        CHECK(meet(sys, {0, 1}) == std::vector<uint32_t>{1, 1, 0});
    }

    SUBCASE("index set validation") {
        VectorSystem sys = system_from(2, 2, {{1, 0}, {0, 1}});
        CHECK_THROWS_AS(meet(sys, {}), error);
        try {
            meet(sys, {});
        } catch (const error& e) {
            CHECK(e.code() == errc::empty_index_set);
        }
        CHECK_THROWS_AS(meet(sys, {0, 0}), error);
        CHECK_THROWS_AS(meet(sys, {2}), error);
    }

    SUBCASE("construction validation") {
        CHECK_THROWS_AS(system_from(2, 2, {}), error);
        CHECK_THROWS_AS(system_from(2, 2, {{1, 0, 0}}), error);
        CHECK_THROWS_AS(system_from(0, 2, {{}}), error);
        CHECK_THROWS_AS(system_from(2, 0, {{1, 0}}), error);
    }
}

TEST_CASE("weight condition check") {
    SUBCASE("hand verdicts") {
        // (3-2)+(3-2)+0 = 2 <= 3
        CHECK(check_vk(system_from(2, 3, {{2, 0}, {0, 2}})).satisfied);
        // (2-1)+(2-1)+|(0,0)| = 2 <= 2, tight
        CHECK(check_vk(system_from(2, 2, {{1, 0}, {0, 1}})).satisfied);
        // same system at k=1 fails the per-row bound first, at row 0
        auto r = check_vk(system_from(2, 1, {{1, 0}, {0, 1}}));
        REQUIRE(!r.satisfied);
        CHECK(r.witness->kind == SystemViolation::multiplicity_bound);
        CHECK(r.witness->rows == std::vector<uint32_t>{0});
        CHECK(r.witness->lhs == 1);
        CHECK(r.witness->bound == 0);
    }

    SUBCASE("sum violation reports the first index set in size-lex order") {
        // I = {0,1}: (3-1)+(3-1)+|(1,0,0)| = 5 > 3
        auto r = check_vk(system_from(3, 3, {{1, 0, 0}, {1, 0, 0}, {0, 0, 0}}));
        REQUIRE(!r.satisfied);
        CHECK(r.witness->kind == SystemViolation::sum_bound);
        CHECK(r.witness->rows == std::vector<uint32_t>{0, 1});
        CHECK(r.witness->lhs == 5);
        CHECK(r.witness->bound == 3);
    }

    SUBCASE("no satisfying system holds two comparable rows") {
        auto rng = make_rng(5050, 16);
        for (int trial = 0; trial < 200; ++trial) {
            uint32_t n = 2 + uint32_t(rng() % 4);
            uint32_t k = 2 + uint32_t(rng() % 4);
            uint32_t m = 2 + uint32_t(rng() % 3);
            Vecs vecs(m, std::vector<uint32_t>(n, 0));
            for (auto& v : vecs)
                for (auto& e : v) e = uint32_t(rng() % 2);
            // plant a comparable pair: row b dominates row a
            uint32_t a = uint32_t(rng() % m), b = (a + 1) % m;
            for (uint32_t j = 0; j < n; ++j)
                vecs[b][j] = std::max(vecs[b][j], vecs[a][j]);
            REQUIRE(!check_vk(system_from(n, k, std::move(vecs))).satisfied);
        }
    }

    SUBCASE("indicator systems of maximal patterns agree with the pattern check") {
        // the equivalence only holds when every row has exactly k-1 zeros
        auto rng = make_rng(6174, 17);
        int agree_sat = 0;
        for (int trial = 0; trial < 400; ++trial) {
            uint32_t n = 3 + uint32_t(rng() % 3);
            uint32_t k = 2 + uint32_t(rng() % std::min(n - 1, 3u));
            std::vector<uint32_t> cols(n);
            for (uint32_t j = 0; j < n; ++j) cols[j] = j;
            Vecs sets(k);
            for (auto& s : sets) {
                std::shuffle(cols.begin(), cols.end(), rng);
                s.assign(cols.begin(), cols.begin() + (k - 1));
            }
            ZeroPattern pat = pattern_from_sets(n, k, std::move(sets));
            bool vk = check_vk(indicator_system(pat)).satisfied;
            bool mds = check_mds(pat).satisfied;
            REQUIRE(vk == mds);
            agree_sat += vk;
        }
        CHECK(agree_sat > 50);  // both verdicts actually appear
    }
}

TEST_CASE("shape-restricted check") {
    SUBCASE("last coordinate escapes the 0/1 shape restriction") {
        // weight 5 <= k-1, and the 4 in the final slot is allowed
        CHECK(check_vstar(system_from(3, 6, {{1, 0, 4}})).satisfied);
    }

    SUBCASE("a 2 in a leading coordinate violates the shape") {
        auto r = check_vstar(system_from(3, 6, {{0, 2, 0}}));
        REQUIRE(!r.satisfied);
        CHECK(r.witness->kind == SystemViolation::coordinate_bound);
        CHECK(r.witness->rows == std::vector<uint32_t>{0});
        CHECK(r.witness->coord == 1);
        CHECK(r.witness->lhs == 2);
        // plain check has no shape restriction
        CHECK(check_vk(system_from(3, 6, {{0, 2, 0}})).satisfied);
    }

    SUBCASE("any 0/1 system passing the weight check passes") {
        auto rng = make_rng(8128, 18);
        for (int trial = 0; trial < 100; ++trial) {
            VectorSystem sys = random_vstar_system(rng);
            auto r = check_vk(sys);
            REQUIRE(r.satisfied);
            // entries outside the final coordinate are 0/1 by construction
            for (const auto& v : sys.vecs)
                for (uint32_t j = 0; j + 1 < sys.n; ++j) REQUIRE(v[j] <= 1);
        }
    }

    SUBCASE("multiplicity bound fires before the shape bound") {
        auto r = check_vstar(system_from(2, 2, {{3, 0}}));
        REQUIRE(!r.satisfied);
        CHECK(r.witness->kind == SystemViolation::multiplicity_bound);
    }
}

TEST_CASE("tight index sets") {
    SUBCASE("singletons are always tight") {
        auto rng = make_rng(1089, 19);
        for (int trial = 0; trial < 50; ++trial) {
            VectorSystem sys = random_vstar_system(rng);
            auto ts = tight_sets(sys);
            for (uint32_t i = 0; i < sys.m(); ++i)
                REQUIRE(std::find(ts.begin(), ts.end(), std::vector<uint32_t>{i}) != ts.end());
        }
    }

    SUBCASE("worked indicator example over seven subsets") {
        ZeroPattern pat = pattern_from_sets(5, 3, {{0, 1}, {1, 2}, {3, 4}});
        auto ts = tight_sets(indicator_system(pat));
        std::vector<std::vector<uint32_t>> expect = {{0}, {1}, {2}, {0, 1}, {0, 1, 2}};
        CHECK(ts == expect);
    }

    SUBCASE("strict inequality everywhere leaves only singletons") {
        auto ts = tight_sets(system_from(2, 3, {{2, 0}, {0, 2}}));
        CHECK(ts == std::vector<std::vector<uint32_t>>{{0}, {1}});
    }

    SUBCASE("violating systems are rejected") {
        CHECK_THROWS_AS(tight_sets(system_from(2, 2, {{1, 0}, {1, 0}})), error);
    }
}

TEST_CASE("divide step") {
    SUBCASE("worked example decrements coordinate 2 and the target") {
        VectorSystem v = system_from(2, 4, {{1, 1}, {2, 1}});
        VectorSystem d = lemma_divide(v, 1);
        CHECK(d.k == 3);
        CHECK(d.vecs == Vecs{{1, 0}, {2, 0}});
    }

    SUBCASE("a zero at the coordinate blocks the step") {
        VectorSystem v = system_from(2, 4, {{1, 1}, {2, 0}});
        CHECK_THROWS_AS(lemma_divide(v, 1), error);
        try {
            lemma_divide(v, 1);
        } catch (const error& e) {
            CHECK(e.code() == errc::precondition_violated);
        }
        CHECK_THROWS_AS(lemma_divide(v, 5), error);  // out of range
    }

    SUBCASE("preserves the shape-restricted property with one lower target") {
        auto rng = make_rng(2025, 20);
        int done = 0;
        while (done < 100) {
            VectorSystem sys = random_vstar_system(rng);
            // force a shared coordinate: use the last (unconstrained) one
            for (auto& v : sys.vecs)
                if (v.back() == 0) v.back() = 1;
            if (!check_vstar(sys).satisfied) continue;
            VectorSystem d = lemma_divide(sys, sys.n - 1);
            REQUIRE(d.k == sys.k - 1);
            REQUIRE(check_vstar(d).satisfied);
            ++done;
        }
    }
}

TEST_CASE("tight split step") {
    ZeroPattern pat = pattern_from_sets(5, 3, {{0, 1}, {1, 2}, {3, 4}});
    VectorSystem sys = indicator_system(pat);

    SUBCASE("worked example") {
        TightSplit sp = lemma_tight_split(sys, {0, 1});
        REQUIRE(sp.left.m() == 2);
        CHECK(sp.left.vecs[0] == std::vector<uint32_t>{0, 0, 0, 1, 1});  // the outside row
        CHECK(sp.left.vecs[1] == std::vector<uint32_t>{0, 1, 0, 0, 0});  // the meet, appended
        REQUIRE(sp.right.m() == 2);
        CHECK(sp.right.vecs[0] == sys.vecs[0]);
        CHECK(sp.right.vecs[1] == sys.vecs[1]);
        CHECK(sp.left.k == 3);
        CHECK(sp.right.k == 3);
        // the replaced system still satisfies the property
        CHECK(check_vstar(sp.left).satisfied);
    }

    SUBCASE("trivial and non-tight sets are refused") {
        CHECK_THROWS_AS(lemma_tight_split(sys, {0}), error);
        CHECK_THROWS_AS(lemma_tight_split(sys, {0, 1, 2}), error);
        try {
            lemma_tight_split(sys, {0});
        } catch (const error& e) {
            CHECK(e.code() == errc::trivial_split);
        }
        CHECK_THROWS_AS(lemma_tight_split(sys, {0, 2}), error);
        try {
            lemma_tight_split(sys, {0, 2});
        } catch (const error& e) {
            CHECK(e.code() == errc::not_tight);
        }
    }

    SUBCASE("size bookkeeping: the left system keeps the family size") {
        // sum over left of (k - |v|) = sum over outside + (k - |meet I|)
        // = sum over all of (k - |v|) because I is tight
        uint64_t before = 0;
        for (const auto& v : sys.vecs) before += sys.k - vec_weight(v);
        TightSplit sp = lemma_tight_split(sys, {0, 1});
        uint64_t after = 0;
        for (const auto& v : sp.left.vecs) after += sp.left.k - vec_weight(v);
        CHECK(before == after);
    }
}

TEST_CASE("merge-last step") {
    SUBCASE("worked example") {
        VectorSystem v = system_from(3, 4, {{1, 0, 1}, {0, 1, 0}});
        VectorSystem m = lemma_merge_last(v);
        CHECK(m.n == 2);
        CHECK(m.vecs == Vecs{{1, 1}, {0, 1}});
        CHECK(m.k == 4);
    }

    SUBCASE("weights are preserved") {
        auto rng = make_rng(777, 21);
        for (int trial = 0; trial < 50; ++trial) {
            VectorSystem sys = random_vstar_system(rng);
            VectorSystem m = lemma_merge_last(sys);
            REQUIRE(m.m() == sys.m());
            for (uint32_t i = 0; i < sys.m(); ++i)
                REQUIRE(vec_weight(m.vecs[i]) == vec_weight(sys.vecs[i]));
        }
    }

    SUBCASE("one coordinate is too few") {
        CHECK_THROWS_AS(lemma_merge_last(system_from(1, 2, {{1}})), error);
    }
}

TEST_CASE("increment-last step") {
    SUBCASE("worked example: n=2, k=3") {
        VectorSystem v = system_from(2, 3, {{1, 0}});
        IncrementResult r = lemma_increment_last(v);
        CHECK(r.sys.vecs == Vecs{{1, 1}});
        // extra = x - a1
        FormalPoly expect = FormalPoly::var_x(2) - FormalPoly::var_a(2, 0);
        CHECK(r.extra == expect);
    }

    SUBCASE("three coordinates") {
        VectorSystem v = system_from(3, 5, {{0, 1, 2}, {1, 1, 0}});
        IncrementResult r = lemma_increment_last(v);
        CHECK(r.sys.vecs == Vecs{{0, 1, 2}, {1, 1, 1}});
        FormalPoly x = FormalPoly::var_x(3);
        FormalPoly expect =
            (x - FormalPoly::var_a(3, 0)) * (x - FormalPoly::var_a(3, 1));
        CHECK(r.extra == expect);
    }

    SUBCASE("preconditions") {
        // n >= k
        CHECK_THROWS_AS(lemma_increment_last(system_from(3, 3, {{1, 1, 0}})), error);
        // last row not of the required shape
        CHECK_THROWS_AS(lemma_increment_last(system_from(2, 3, {{0, 0}})), error);
        CHECK_THROWS_AS(lemma_increment_last(system_from(2, 3, {{1, 1}})), error);
        try {
            lemma_increment_last(system_from(3, 3, {{1, 1, 0}}));
        } catch (const error& e) {
            CHECK(e.code() == errc::precondition_violated);
        }
    }
}
