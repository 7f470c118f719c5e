#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <filesystem>

#include "fbc/code_search.hpp"

using namespace fbc;

namespace {

NonadaptiveCode as_z_code(const FOptimalEntry& e) {
    return NonadaptiveCode(e.n, e.t, ErrorGraph::z_channel(), e.centers);
}

}  // namespace

TEST_CASE("hamming codes are perfect") {
    for (int k : {1, 2, 3}) {
        NonadaptiveCode code = hamming_code(k);
        int n = (1 << k) - 1;
        CHECK(code.n == n);
        CHECK(code.size() == (1L << (n - k)));
        CHECK(validate_code(code).pass);
        CHECK(free_points(code).empty());
    }
    // independent cover check at k = 3: every point lies in exactly one ball
    NonadaptiveCode code = hamming_code(3);
    std::vector<int> cover(1 << 7, 0);
    for (long m = 0; m < code.size(); ++m)
        for (const Word& w : code.cloud(m).members) ++cover[w.packed];
    for (int c : cover) CHECK(c == 1);
    CHECK(hamming_code(2).centers ==
          std::vector<Word>{Word::from_string("000", 2), Word::from_string("111", 2)});
}

TEST_CASE("search reproduces small optima") {
    FOptimalEntry e = search_f_optimal(4, 2);
    CHECK(e.F == 12);
    CHECK(e.centers == std::vector<Word>{Word::from_string("0000", 2), Word::from_string("0011", 2)});

    FOptimalEntry e4 = search_f_optimal(4, 4);
    CHECK(e4.F == 4);

    FOptimalEntry e6 = search_f_optimal(6, 12);
    CHECK(e6.F == 16);
    CHECK(e6.weights.str() == "1+0+3+4+3+0+1");
    CHECK(e6.optimal_flag);
}

TEST_CASE("search results are valid and internally consistent") {
    for (auto [n, M] : {std::pair{5, 6L}, {6, 9L}, {7, 14L}}) {
        FOptimalEntry e = search_f_optimal(n, M);
        NonadaptiveCode code = as_z_code(e);
        auto rep = validate_code(code);
        CHECK(rep.pass);
        CHECK(rep.free_count == e.F);  // reported F equals the recomputed count
        CHECK(e.weights.sum() == M);
        long bound = upper_bound_value(BoundProblem{n, M, 1});
        CHECK(e.F <= bound);
        // weight distribution matches the centers
        WeightDistribution z;
        z.z.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const Word& w : e.centers) ++z.z[static_cast<std::size_t>(w.weight())];
        CHECK(z.z == e.weights.z);
    }
}

TEST_CASE("search is deterministic") {
    FOptimalEntry a = search_f_optimal(6, 10);
    FOptimalEntry b = search_f_optimal(6, 10);
    CHECK(a.centers == b.centers);
    CHECK(a.F == b.F);
}

TEST_CASE("infeasible cardinality") {
    CHECK_THROWS_AS(search_f_optimal(4, 5), std::runtime_error);  // M_Z(4,1) = 4
}

TEST_CASE("the length-7 seventeen-word ambiguity") {
    FOptimalEntry e17 = search_f_optimal(7, 17);
    CHECK(e17.F == 55);
    CHECK_FALSE(e17.optimal_flag);  // the weight-distribution bound (56) is not attained
    CHECK(e17.exhausted);
    bool known = e17.weights.str() == "1+0+3+5+5+3+0+0" || e17.weights.str() == "1+0+3+5+6+1+1+0";
    CHECK(known);
    CHECK(e17.augmentable);  // extends to an 18-word code

    FOptimalEntry e18 = search_f_optimal(7, 18);
    CHECK(e18.F == 48);
    CHECK_FALSE(e18.optimal_flag);  // bound gives 49
    CHECK_FALSE(e18.augmentable);   // M_Z(7,1) = 18
}

TEST_CASE("nested family length 6") {
    auto fam = search_nested_family(6);
    REQUIRE(fam.size() == 12);
    std::vector<long> F;
    for (long M = 12; M >= 8; --M) F.push_back(fam[static_cast<std::size_t>(M - 1)].F);
    CHECK(F == std::vector<long>{16, 23, 28, 33, 38});
    // nesting and the delete-the-heaviest order
    for (std::size_t i = 1; i < fam.size(); ++i) {
        const auto& prev = fam[i - 1].centers;
        const auto& cur = fam[i].centers;
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        // the added codeword has maximal weight in the larger code
        std::vector<Word> added;
        std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(),
                            std::back_inserter(added));
        REQUIRE(added.size() == 1);
        int wmax = 0;
        for (const Word& w : cur) wmax = std::max(wmax, w.weight());
        CHECK(added[0].weight() == wmax);
        // F strictly decreases as codewords are added
        CHECK(fam[i].F < fam[i - 1].F);
    }
    // every member is valid
    for (const auto& e : fam) CHECK(validate_code(as_z_code(e)).pass);
}

TEST_CASE("search budget returns best found") {
    FOptimalEntry e = search_f_optimal(7, 18, 1, 50);
    CHECK_FALSE(e.exhausted);
    CHECK(e.M == 18);
    CHECK(validate_code(as_z_code(e)).pass);
}

TEST_CASE("cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "fbc_cache_test";
    std::filesystem::create_directories(dir);
    auto file = dir / "fopt_cache.tsv";
    std::vector<FOptimalEntry> entries{search_f_optimal(4, 2), search_f_optimal(4, 4)};
    write_fopt_cache(file, entries);
    auto back = read_fopt_cache(file);
    REQUIRE(back.size() == 2);
    CHECK(back[0].F == entries[0].F);
    CHECK(back[0].centers == entries[0].centers);
    CHECK(back[1].weights.z == entries[1].weights.z);
    std::filesystem::remove_all(dir);
}
