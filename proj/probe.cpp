// Development probe: adjudicate paper-internal questions numerically.
#include <chrono>
#include <cstdio>

#include "fbc/bounds.hpp"
#include "fbc/code_search.hpp"
#include "fbc/constant_weight.hpp"
#include "fbc/games.hpp"

using namespace fbc;

static double secs(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
    std::printf("== constant weight ==\n");
    for (auto [m, w, want] : {std::tuple{7, 2, 3L}, {7, 3, 7L}, {8, 3, 8L}, {8, 4, 14L},
                              {9, 4, 18L}, {10, 5, 36L}, {10, 4, 30L}, {11, 4, 35L},
                              {11, 3, 17L}, {10, 3, 13L}, {9, 3, 12L}, {4, 2, 2L}}) {
        auto b = constant_weight_bounds(m, 4, w);
        std::printf("A(%d,4,%d) = [%ld,%ld] exact=%d (expect %ld)\n", m, w, b.lower, b.upper,
                    b.exact, want);
    }

    std::printf("== bounds ==\n");
    for (auto [n, M, want] : {std::tuple{6, 12L, 16L}, {7, 18L, 49L}, {7, 17L, -1L},
                              {8, 36L, 76L}, {9, 62L, 177L}}) {
        auto t0 = std::chrono::steady_clock::now();
        BoundResult r = upper_bound_free_points(BoundProblem{n, M, 1});
        std::printf("Fbar(%d,%ld,1) = %ld (with6 %ld, sensitive %d) want %ld  z*=%s [%.2fs]\n", n,
                    M, r.value, r.value_with_cond6, r.cond6_sensitive, want, r.best.str().c_str(),
                    secs(t0));
    }

    std::printf("== hamming bound ==\n");
    std::printf("n=3 -> %llu, n=10 -> %llu, n=12 -> %llu\n", hamming_bound_adaptive(3),
                hamming_bound_adaptive(10), hamming_bound_adaptive(12));

    std::printf("== search small ==\n");
    for (auto [n, M] : {std::pair{4, 2L}, {4, 4L}, {6, 12L}, {6, 8L}}) {
        auto t0 = std::chrono::steady_clock::now();
        FOptimalEntry e = search_f_optimal(n, M);
        std::printf("fopt(%d,%ld): F=%ld opt=%d z=%s [%.2fs]\n", n, M, e.F, e.optimal_flag,
                    e.weights.str().c_str(), secs(t0));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        FOptimalEntry e = search_f_optimal(7, 17);
        std::printf("fopt(7,17): F=%ld opt=%d z=%s aug=%d [%.2fs]\n", e.F, e.optimal_flag,
                    e.weights.str().c_str(), e.augmentable, secs(t0));
        t0 = std::chrono::steady_clock::now();
        e = search_f_optimal(7, 18);
        std::printf("fopt(7,18): F=%ld opt=%d z=%s [%.2fs]\n", e.F, e.optimal_flag,
                    e.weights.str().c_str(), secs(t0));
    }

    std::printf("== games ==\n");
    {
        auto t0 = std::chrono::steady_clock::now();
        GameOracle sym(Game::symmetric);
        for (int n : {3, 9, 10, 12, 13})
            std::printf("sym max(%d) = %ld\n", n, sym.max_messages(n));
        std::printf("sym(2,0,3)=%d sym(3,0,3)=%d [%.2fs]\n",
                    sym.winnable({2, 0, 3}), sym.winnable({3, 0, 3}), secs(t0));
        t0 = std::chrono::steady_clock::now();
        GameOracle half(Game::halflie);
        for (int n : {5, 8, 13})
            std::printf("half max(%d) = %ld\n", n, half.max_messages(n));
        std::printf("[%.2fs]\n", secs(t0));
    }
    return 0;
}
