#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <tuple>

#include "fbc/games.hpp"

using namespace fbc;

namespace {

// Test-local reference: the plain subset-question recursion, memoized on the
// full (a, b, n) state.  Intractable at interesting sizes but independent of
// the threshold tables used by the library.
struct NaiveOracle {
    Game game;
    std::map<std::tuple<long, long, int>, bool> memo;

    bool win(long a, long b, int n) {
        if (a + b <= 1) return true;
        if (n == 0) return false;
        auto key = std::make_tuple(a, b, n);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool result = false;
        for (long a1 = 0; a1 <= a && !result; ++a1)
            for (long b1 = 0; b1 <= b && !result; ++b1) {
                bool yes, no;
                if (game == Game::symmetric) {
                    yes = win(a1, b1 + a - a1, n - 1);
                    no = win(a - a1, b - b1 + a1, n - 1);
                } else {
                    yes = win(a1, b1, n - 1);
                    no = win(a - a1, a1 + b - b1, n - 1);
                }
                result = yes && no;
            }
        memo[key] = result;
        return result;
    }
};

}  // namespace

TEST_CASE("threshold tables agree with the naive recursion") {
    for (Game g : {Game::symmetric, Game::halflie}) {
        NaiveOracle naive{g, {}};
        GameOracle oracle(g);
        for (int n = 0; n <= 5; ++n)
            for (long a = 0; a <= 9; ++a)
                for (long b = 0; b <= 9 - a; ++b) {
                    INFO((g == Game::symmetric ? "symmetric" : "halflie")
                         << " a=" << a << " b=" << b << " n=" << n);
                    CHECK(oracle.winnable({a, b, n}) == naive.win(a, b, n));
                }
    }
}

TEST_CASE("symmetric game examples") {
    CHECK(symmetric_winnable({1, 0, 0}));
    CHECK(symmetric_winnable({2, 0, 3}));
    CHECK_FALSE(symmetric_winnable({3, 0, 3}));
    CHECK(symmetric_winnable({92, 0, 10}));
    CHECK_FALSE(symmetric_winnable({93, 0, 10}));
}

TEST_CASE("halflie game examples") {
    CHECK(halflie_winnable({1, 0, 0}));
    CHECK(halflie_winnable({11, 0, 5}));
    CHECK_FALSE(halflie_winnable({12, 0, 5}));
    CHECK(halflie_winnable({66, 0, 8}));
    CHECK_FALSE(halflie_winnable({67, 0, 8}));
}

TEST_CASE("max messages") {
    CHECK(max_messages(Game::symmetric, 12) == 314);
    CHECK(max_messages(Game::halflie, 13) == 1452);
    CHECK(max_messages(Game::symmetric, 0) == 1);
    CHECK(max_messages(Game::halflie, 0) == 1);
}

TEST_CASE("monotonicity") {
    GameOracle sym(Game::symmetric);
    for (int n = 1; n <= 8; ++n)
        for (long a = 0; a <= 20; ++a) {
            if (!sym.winnable({a, 0, n})) continue;
            if (a > 0) CHECK(sym.winnable({a - 1, 0, n}));
            CHECK(sym.winnable({a, 0, n + 1}));
        }
}

TEST_CASE("halflie dominates symmetric") {
    for (int n = 1; n <= 12; ++n)
        CHECK(max_messages(Game::halflie, n) >= max_messages(Game::symmetric, n));
}

TEST_CASE("berlekamp volume necessary condition") {
    GameOracle sym(Game::symmetric);
    for (int n = 1; n <= 10; ++n)
        for (long a = 0; a <= 100; ++a)
            for (long b : {0L, 1L, 5L, 17L})
                if (sym.winnable({a, b, n}))
                    CHECK(a * (n + 1) + b <= (1L << n));
}
