#include <catch2/catch_amalgamated.hpp>

#include "fbc/bounds.hpp"

using namespace fbc;

TEST_CASE("check_distribution on known rows") {
    BoundProblem p6{6, 12, 1};
    CHECK(check_distribution(WeightDistribution{{1, 0, 3, 4, 3, 0, 1}}, p6).pass);

    // condition 2: z_1 must vanish
    auto rep = check_distribution(WeightDistribution{{1, 1, 3, 4, 3, 0, 0}}, p6);
    CHECK_FALSE(rep.pass);
    bool has2 = false;
    for (auto& v : rep.violated) has2 |= v.rfind("2(", 0) == 0;
    CHECK(has2);

    BoundProblem p7{7, 17, 1};
    CHECK(check_distribution(WeightDistribution{{1, 0, 3, 5, 6, 1, 1, 0}}, p7).pass);
    CHECK(check_distribution(WeightDistribution{{1, 0, 3, 5, 5, 3, 0, 0}}, p7).pass);

    BoundProblem p18{7, 18, 1};
    CHECK(check_distribution(WeightDistribution{{1, 0, 3, 5, 5, 3, 1, 0}}, p18).pass);

    // wrong length and wrong cardinality
    CHECK_FALSE(check_distribution(WeightDistribution{{1, 0, 3}}, p6).pass);
    CHECK_FALSE(check_distribution(WeightDistribution{{1, 0, 3, 4, 3, 0, 0}}, p6).pass);
}

TEST_CASE("condition 6 as printed rejects known valid rows") {
    BoundProblem p6{6, 12, 1};
    auto strict = check_distribution(WeightDistribution{{1, 0, 3, 4, 3, 0, 1}}, p6, true);
    CHECK_FALSE(strict.pass);  // the literal reading is inconsistent with real codes
    auto lax = check_distribution(WeightDistribution{{1, 0, 3, 4, 3, 0, 1}}, p6, false);
    CHECK(lax.pass);
    bool warned = false;
    for (auto& w : lax.warnings) warned |= w.rfind("6-printed", 0) == 0;
    CHECK(warned);
}

TEST_CASE("missing constant-weight data skips conservatively") {
    BoundProblem p{6, 12, 1};
    p.cw_upper = [](int, int, int) -> std::optional<long> { return std::nullopt; };
    auto rep = check_distribution(WeightDistribution{{1, 0, 3, 4, 3, 0, 1}}, p);
    CHECK(rep.pass);
    CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("upper bound values") {
    CHECK(upper_bound_value(BoundProblem{6, 12, 1}) == 16);
    CHECK(upper_bound_value(BoundProblem{7, 18, 1}) == 49);
    BoundResult r = upper_bound_free_points(BoundProblem{6, 12, 1});
    REQUIRE(r.feasible);
    CHECK(r.value == 16);
    CHECK(r.best.str() == "1+0+3+4+3+0+1");
    CHECK(r.cond6_sensitive);  // the printed condition 6 admits nothing here
}

TEST_CASE("upper bound monotone in cardinality") {
    long prev = 1L << 6;
    for (long M = 1; M <= 12; ++M) {
        long v = upper_bound_value(BoundProblem{6, M, 1});
        REQUIRE(v >= 0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(upper_bound_value(BoundProblem{6, 13, 1}) < 0);  // beyond the maximum cardinality
}

TEST_CASE("hamming bound") {
    CHECK(hamming_bound_adaptive(3) == 2);
    CHECK(hamming_bound_adaptive(10) == 93);
    CHECK(hamming_bound_adaptive(12) == 315);
}
