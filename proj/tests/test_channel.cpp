#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "fbc/channel.hpp"

using namespace fbc;

namespace {

// Test-local oracle: enumerate every word of the space and keep those within
// t edge-consistent substitutions of w.
std::set<Word> ball_by_enumeration(const Word& w, const ErrorGraph& g, int t) {
    std::set<Word> out;
    std::uint64_t total = Word::space_size(w.n, w.q);
    for (std::uint64_t v = 0; v < total; ++v) {
        Word cand(w.n, w.q, v);
        int changed = 0;
        bool ok = true;
        for (int i = 0; i < w.n && ok; ++i) {
            if (cand.symbol(i) == w.symbol(i)) continue;
            ++changed;
            if (!g.has_edge(w.symbol(i), cand.symbol(i))) ok = false;
        }
        if (ok && changed <= t) out.insert(cand);
    }
    return out;
}

std::vector<Word> words(std::initializer_list<const char*> ss, int q = 2) {
    std::vector<Word> out;
    for (auto* s : ss) out.push_back(Word::from_string(s, q));
    return out;
}

}  // namespace

TEST_CASE("error graph invariants") {
    CHECK(ErrorGraph::bsc().edges == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
    CHECK(ErrorGraph::z_channel().edges == std::set<std::pair<int, int>>{{1, 0}});
    CHECK(ErrorGraph::one_way_ternary().q == 3);
    CHECK_THROWS_AS(ErrorGraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ErrorGraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("error ball examples") {
    auto ball = [](const char* w, const ErrorGraph& g, int t, int q = 2) {
        auto v = error_ball(Word::from_string(w, q), g, t);
        return std::set<Word>(v.begin(), v.end());
    };
    CHECK(ball("00", ErrorGraph::bsc(), 1) ==
          std::set<Word>{Word::from_string("00", 2), Word::from_string("01", 2),
                         Word::from_string("10", 2)});
    CHECK(ball("10", ErrorGraph::z_channel(), 1) ==
          std::set<Word>{Word::from_string("10", 2), Word::from_string("00", 2)});
    CHECK(ball("21", ErrorGraph::one_way_ternary(), 1, 3) ==
          std::set<Word>{Word::from_string("21", 3), Word::from_string("01", 3),
                         Word::from_string("11", 3), Word::from_string("20", 3)});
}

TEST_CASE("error ball matches enumeration oracle") {
    std::mt19937 rng(20240901);
    for (const ErrorGraph& g :
         {ErrorGraph::bsc(), ErrorGraph::z_channel(), ErrorGraph::one_way_ternary()}) {
        for (int trial = 0; trial < 20; ++trial) {
            int n = 1 + static_cast<int>(rng() % 5);
            int t = static_cast<int>(rng() % 3);
            Word w(n, g.q, rng() % Word::space_size(n, g.q));
            auto got = error_ball(w, g, t);
            auto want = ball_by_enumeration(w, g, t);
            CHECK(std::set<Word>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("error ball properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Word w(n, 2, rng() % (1ull << n));
        const auto g = (trial % 2) ? ErrorGraph::bsc() : ErrorGraph::z_channel();
        auto b0 = error_ball(w, g, 0);
        REQUIRE(b0.size() == 1);
        CHECK(b0[0] == w);
        auto b1 = error_ball(w, g, 1);
        auto b2 = error_ball(w, g, 2);
        CHECK(std::includes(b2.begin(), b2.end(), b1.begin(), b1.end()));
        CHECK(std::count(b1.begin(), b1.end(), w) == 1);
    }
}

TEST_CASE("cloud sizes") {
    // binary symmetric, t = 1: every cloud is a Hamming ball of n+1 words
    for (int n : {3, 5, 7}) {
        Word w(n, 2, 5 % (1u << n));
        CHECK(error_ball(w, ErrorGraph::bsc(), 1).size() == static_cast<std::size_t>(n) + 1);
    }
    // Z channel, t = 1: |cloud(c)| = weight(c) + 1
    for (std::uint32_t v : {0u, 3u, 7u, 12u}) {
        Word w(4, 2, v);
        CHECK(error_ball(w, ErrorGraph::z_channel(), 1).size() ==
              static_cast<std::size_t>(w.weight()) + 1);
    }
}

TEST_CASE("free points") {
    NonadaptiveCode perfect(3, 1, ErrorGraph::bsc(), words({"000", "111"}));
    CHECK(free_points(perfect).empty());

    NonadaptiveCode two(4, 1, ErrorGraph::z_channel(), words({"0000", "0011"}));
    CHECK(free_points(two).size() == 12);

    NonadaptiveCode four(4, 1, ErrorGraph::z_channel(), words({"0000", "0011", "1100", "1111"}));
    CHECK(free_points(four).size() == 4);
}

TEST_CASE("validate code") {
    NonadaptiveCode good(4, 1, ErrorGraph::z_channel(), words({"0000", "0011"}));
    auto rep = validate_code(good);
    CHECK(rep.pass);
    CHECK(rep.free_count == 12);

    NonadaptiveCode bad(3, 1, ErrorGraph::bsc(), words({"000", "100"}));
    auto rep2 = validate_code(bad);
    CHECK_FALSE(rep2.pass);
    CHECK_FALSE(rep2.overlapping.empty());

    NonadaptiveCode empty(2, 1, ErrorGraph::bsc(), {});
    auto rep3 = validate_code(empty);
    CHECK(rep3.pass);
    CHECK(rep3.free_count == 4);
}

TEST_CASE("code json round trip is bit exact") {
    NonadaptiveCode code(4, 1, ErrorGraph::z_channel(), words({"0000", "0011"}));
    std::string text = code_to_string(code);
    NonadaptiveCode back = code_from_string(text);
    CHECK(code_to_string(back) == text);
    CHECK(back.n == code.n);
    CHECK(back.centers == code.centers);
    CHECK(back.graph.edges == code.graph.edges);
}

TEST_CASE("word packing is msb first") {
    Word w = Word::from_string("0011", 2);
    CHECK(w.packed == 3);
    CHECK(w.symbol(0) == 0);
    CHECK(w.symbol(3) == 1);
    CHECK(w.str() == "0011");
    CHECK(w.weight() == 2);
    Word t = Word::from_string("21", 3);
    CHECK(t.packed == 7);
    CHECK(t.prefix(1).str() == "2");
    CHECK(t.suffix(1).str() == "1");
    CHECK(Word::from_string("10", 2).concat(Word::from_string("01", 2)).str() == "1001");
}
