// Development probe: constructions end to end.
#include <chrono>
#include <cstdio>

#include "fbc/corollary2.hpp"
#include "fbc/dada.hpp"
#include "fbc/verify.hpp"

using namespace fbc;

static double secs(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
    auto T0 = std::chrono::steady_clock::now();

    std::printf("== Table 2 cells ==\n");
    for (int n : {6, 7, 8}) {
        long mmax = n == 6 ? 12 : n == 7 ? 18 : 36;
        for (long M = mmax; M > mmax - 5; --M) {
            auto t0 = std::chrono::steady_clock::now();
            FOptimalEntry e = search_f_optimal(n, M);
            std::printf("fopt(%d,%ld): F=%ld opt=%d z=%s [%.2fs]\n", n, M, e.F, e.optimal_flag,
                        e.weights.str().c_str(), secs(t0));
        }
    }

    std::printf("== nested families ==\n");
    for (int n : {6, 9}) {
        auto t0 = std::chrono::steady_clock::now();
        auto fam = search_nested_family(n);
        std::printf("nested(%d): Mmax=%zu [%.2fs]\n", n, fam.size(), secs(t0));
        for (std::size_t i = fam.size(); i-- > 0 && i + 5 >= fam.size();)
            std::printf("  M=%ld F=%ld z=%s\n", fam[i].M, fam[i].F, fam[i].weights.str().c_str());
    }

    std::printf("== corollary 1 / parity strategies ==\n");
    for (auto [n, k] : {std::pair{8, 3}, {15, 3}, {16, 4}, {5, 2}}) {
        auto t0 = std::chrono::steady_clock::now();
        FeedbackStrategy s = corollary1_strategy(n, k);
        auto rep = verify_strategy(s, ErrorGraph::bsc());
        std::printf("cor1(%d,%d): M=%ld verify=%d cases=%ld [%.2fs]\n", n, k, s.M, rep.pass(),
                    rep.total_cases, secs(t0));
    }
    for (int n = 3; n <= 15; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        FeedbackStrategy s = best_one_feedback(n);
        bool small = n <= 12;
        bool ok = true;
        if (small) ok = verify_strategy(s, ErrorGraph::bsc()).pass();
        std::printf("best1fb(%d): M=%ld%s [%.2fs]\n", n, s.M,
                    small ? (ok ? " verified" : " FAILED") : "", secs(t0));
    }

    std::printf("== two-feedback chain ==\n");
    for (int n = 3; n <= 16; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        FeedbackStrategy s = build_two_feedback(n);
        bool doverify = n <= 13;
        bool ok = true;
        long cases = 0;
        if (doverify) {
            auto rep = verify_strategy(s, ErrorGraph::bsc());
            ok = rep.pass();
            cases = rep.total_cases;
        }
        std::printf("two_fb(%d): M=%ld (m_ad=%llu)%s cases=%ld [%.2fs]\n", n, s.M, m_ad(n),
                    doverify ? (ok ? " verified" : " FAILED") : "", cases, secs(t0));
    }

    std::printf("== Z-channel strategies ==\n");
    {
        auto t0 = std::chrono::steady_clock::now();
        FeedbackStrategy s = assemble_one_feedback(example53_family());
        auto rep = verify_strategy(s, ErrorGraph::z_channel());
        std::printf("example53: M=%ld verify=%d [%.2fs]\n", s.M, rep.pass(), secs(t0));
        t0 = std::chrono::steady_clock::now();
        FeedbackStrategy e1 = example96_strategy();
        auto rep1 = verify_strategy(e1, ErrorGraph::z_channel());
        std::printf("example96: M=%ld verify=%d [%.2fs]\n", e1.M, rep1.pass(), secs(t0));
    }

    std::printf("== corollary 2 over self-built tables ==\n");
    {
        auto t0 = std::chrono::steady_clock::now();
        std::map<int, std::vector<std::pair<long, long>>> tables;
        for (int n2 = 1; n2 <= 9; ++n2) {
            std::vector<std::pair<long, long>> tab{{0, 1L << n2}};
            if (n2 == 1) {
                tab.push_back({1, 1});  // {0}: the lone length-1 Z code
            } else if (n2 <= 8) {
                for (long M = 1;; ++M) {
                    long v = upper_bound_value(BoundProblem{n2, M, 1});
                    if (v < 0) break;
                    FOptimalEntry e = search_f_optimal(n2, M);
                    tab.push_back({M, e.F});
                }
            } else {
                for (const auto& e : search_nested_family(9)) tab.push_back({e.M, e.F});
            }
            tables[n2] = tab;
        }
        std::printf("tables built [%.2fs]\n", secs(t0));
        for (int n = 5; n <= 13; ++n) {
            Corollary2Result r = corollary2_best_split(n, tables);
            std::printf("cor2(%d): total=%lld split=(%d,%d) Mw=", n, r.total, r.n1, r.n2);
            for (long m : r.Mw) std::printf("%ld,", m);
            std::printf("\n");
        }
    }

    std::printf("total %.2fs\n", secs(T0));
    return 0;
}
