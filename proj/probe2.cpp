// Independent route: exhaustive codeword-ordered branch and bound for the
// minimum total cloud cost of an M-word single-asymmetric-error code.
#include <bit>
#include <chrono>
#include <cstdio>
#include <vector>

#include "fbc/code_search.hpp"

using namespace fbc;

struct Brute {
    int n;
    long M;
    long best_cost = 1L << 20;
    std::vector<std::uint32_t> cands;  // sorted by (weight, value)
    detail::ZSearchSpace space;
    long long nodes = 0;

    Brute(int n_, long M_) : n(n_), M(M_), space(n_) {
        for (int w = 0; w <= n; ++w)
            for (std::uint32_t v = 0; v < (1u << n); ++v)
                if (std::popcount(v) == w) cands.push_back(v);
    }

    void rec(std::size_t from, long chosen, long cost) {
        ++nodes;
        if (chosen == M) {
            if (cost < best_cost) best_cost = cost;
            return;
        }
        for (std::size_t i = from; i < cands.size(); ++i) {
            int w = std::popcount(cands[i]);
            long lb = cost + (M - chosen) * (w + 1);  // remaining weights >= w
            if (lb >= best_cost) return;               // candidates only get heavier
            if (static_cast<long>(cands.size() - i) < M - chosen) return;
            if (space.conflicts(cands[i])) continue;
            space.add(cands[i]);
            rec(i + 1, chosen + 1, cost + w + 1);
            space.remove(cands[i]);
        }
    }
};

int main() {
    for (auto [n, M] : {std::pair{7, 17L}, {7, 18L}, {6, 12L}}) {
        auto t0 = std::chrono::steady_clock::now();
        Brute b(n, M);
        // WLOG the zero word is a codeword: any valid code not containing it
        // can be improved by swapping a maximum-weight codeword for 0.
        b.space.add(0);
        b.rec(1, 1, 1);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("brute(%d,%ld): min cost = %ld -> F = %ld  (nodes %lld) [%.2fs]\n", n, M,
                    b.best_cost, (1L << n) - b.best_cost, b.nodes, dt);
    }
    return 0;
}
