#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

namespace fbc {

enum class Game { symmetric, halflie };

// (a, b): candidates with 0 / 1 spent lies; n questions remaining.
struct GameState {
    long a = 0;
    long b = 0;
    int n = 0;
};

// Exact winnability tables for the one-lie Renyi-Ulam game (symmetric channel)
// and the half-lie game (Z channel, lying only on affirmative true answers).
//
// Winnability is monotone in b, so each state class is captured by
// maxb[n][a] = the largest b for which (a, b, n) is winnable (-1 if none).
// For a question containing a1 zero-lie and b1 one-lie candidates:
//   symmetric: yes -> (a1, b1 + a - a1),  no -> (a - a1, b - b1 + a1)
//   half-lie:  got 1 -> (a1, b1),          got 0 -> (a - a1, a1 + b - b1)
// Optimizing b1 against the thresholds from level n-1 gives, with
// M1 = maxb[n-1][a1] and M0 = maxb[n-1][a-a1]:
//   symmetric: winnable iff  a - a1 <= M1, a1 <= M0,  b <= M0 + M1 - a
//   half-lie:  winnable iff  M1 >= 0,      a1 <= M0,  b <= M0 + M1 - a1
class GameOracle {
public:
    explicit GameOracle(Game g) : game_(g) {}

    bool winnable(const GameState& s) {
        if (s.a < 0 || s.b < 0 || s.n < 0) throw std::invalid_argument("winnable: negative state");
        ensure(s.n, s.a);
        return maxb_[static_cast<std::size_t>(s.n)][static_cast<std::size_t>(s.a)] >= s.b;
    }

    // Largest M with (M, 0, n) winnable.
    long max_messages(int n) {
        if (n < 0) throw std::invalid_argument("max_messages: n < 0");
        long lo = 1;
        while (true) {
            ensure(n, 2 * lo);
            const auto& row = maxb_[static_cast<std::size_t>(n)];
            long hi = static_cast<long>(row.size()) - 1;
            long best = -1;
            // winnability at b = 0 is monotone in a
            long l = 0, r = hi;
            while (l <= r) {
                long mid = (l + r) / 2;
                if (row[static_cast<std::size_t>(mid)] >= 0) {
                    best = mid;
                    l = mid + 1;
                } else {
                    r = mid - 1;
                }
            }
            if (best < hi) return best;
            lo = hi;  // table too small, grow and retry
        }
    }

private:
    void ensure(int n, long amax) {
        std::lock_guard<std::mutex> lk(mu_);
        if (!maxb_.empty() && static_cast<int>(maxb_.size()) > n && built_amax_ > amax) return;
        long newmax = std::max<long>(amax + 1, built_amax_);
        int newn = std::max<int>(n + 1, static_cast<int>(maxb_.size()));
        maxb_.assign(static_cast<std::size_t>(newn), {});
        auto& base = maxb_[0];
        base.assign(static_cast<std::size_t>(newmax), -1);
        base[0] = 1;
        if (newmax > 1) base[1] = 0;
        for (int lvl = 1; lvl < newn; ++lvl) {
            auto& row = maxb_[static_cast<std::size_t>(lvl)];
            const auto& prev = maxb_[static_cast<std::size_t>(lvl - 1)];
            row.assign(static_cast<std::size_t>(newmax), -1);
            for (long a = 0; a < newmax; ++a) {
                long best = -1;
                for (long a1 = 0; a1 <= a; ++a1) {
                    long M1 = prev[static_cast<std::size_t>(a1)];
                    long M0 = prev[static_cast<std::size_t>(a - a1)];
                    if (game_ == Game::symmetric) {
                        if (a - a1 > M1 || a1 > M0) continue;
                        best = std::max(best, M0 + M1 - a);
                    } else {
                        if (M1 < 0 || a1 > M0) continue;
                        best = std::max(best, M0 + M1 - a1);
                    }
                }
                row[static_cast<std::size_t>(a)] = best;
            }
        }
        built_amax_ = newmax;
    }

    Game game_;
    std::mutex mu_;
    std::vector<std::vector<long>> maxb_;  // [n][a]
    long built_amax_ = 0;
};

inline GameOracle& oracle_for(Game g) {
    static GameOracle sym(Game::symmetric);
    static GameOracle half(Game::halflie);
    return g == Game::symmetric ? sym : half;
}

inline bool symmetric_winnable(const GameState& s) {
    return oracle_for(Game::symmetric).winnable(s);
}

inline bool halflie_winnable(const GameState& s) {
    return oracle_for(Game::halflie).winnable(s);
}

inline long max_messages(Game g, int n) { return oracle_for(g).max_messages(n); }

}  // namespace fbc
