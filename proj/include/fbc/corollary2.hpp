#pragma once

#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

#include "fbc/theorem1.hpp"

namespace fbc {

// Weight-symmetric one-feedback assignment for the Z channel: every first
// block of weight w carries a code of cardinality Mw[w].
struct Corollary2Result {
    int n1 = 0;
    int n2 = 0;
    std::vector<long> Mw;  // indexed by weight 0..n1
    long long total = 0;   // sum_w C(n1, w) Mw[w]
};

// Maximizes sum_w C(n1, w) M_w subject to (n1 - w) M_{w+1} <= F_w for all
// w in [0, n1-1], choosing each (M_w, F_w) from the given Pareto table of
// achievable (cardinality, free points) pairs for length n2.  Dynamic program
// over the choice at weight w+1, scanning w from n1 down to 0.
inline Corollary2Result corollary2_optimize(int n1, int n2,
                                            const std::vector<std::pair<long, long>>& f_table) {
    if (f_table.empty()) throw std::invalid_argument("corollary2_optimize: empty f_table");
    if (n1 < 1) throw std::invalid_argument("corollary2_optimize: need n1 >= 1");
    const std::size_t k = f_table.size();
    // best[i] = optimal total over weights w..n1 given choice i at weight w
    std::vector<long long> best(k), next(k);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n1), std::vector<int>(k, -1));
    for (std::size_t i = 0; i < k; ++i) best[i] = f_table[i].first;  // w = n1: C(n1,n1) = 1
    for (int w = n1 - 1; w >= 0; --w) {
        for (std::size_t i = 0; i < k; ++i) {
            long long own = binom(n1, w) * f_table[i].first;
            long long pick = -1;
            int arg = -1;
            for (std::size_t j = 0; j < k; ++j) {
                if (best[j] < 0) continue;  // infeasible subtree
                if (static_cast<long long>(n1 - w) * f_table[j].first > f_table[i].second) continue;
                if (best[j] > pick) {
                    pick = best[j];
                    arg = static_cast<int>(j);
                }
            }
            next[i] = pick < 0 ? -1 : own + pick;
            succ[static_cast<std::size_t>(w)][i] = arg;
        }
        std::swap(best, next);
    }
    long long top = -1;
    int arg = -1;
    for (std::size_t i = 0; i < k; ++i)
        if (best[i] > top) {
            top = best[i];
            arg = static_cast<int>(i);
        }
    if (arg < 0) throw std::runtime_error("corollary2_optimize: no feasible assignment");
    Corollary2Result res;
    res.n1 = n1;
    res.n2 = n2;
    res.total = top;
    res.Mw.resize(static_cast<std::size_t>(n1) + 1);
    int cur = arg;
    for (int w = 0; w <= n1; ++w) {
        res.Mw[static_cast<std::size_t>(w)] = f_table[static_cast<std::size_t>(cur)].first;
        if (w < n1) cur = succ[static_cast<std::size_t>(w)][static_cast<std::size_t>(cur)];
    }
    return res;
}

// Best split n = n1 + n2 over the available free-point tables.
// fopt_tables maps n2 to the full (M, F) table for that length, M ascending
// from 0.
inline Corollary2Result corollary2_best_split(
    int n, const std::map<int, std::vector<std::pair<long, long>>>& fopt_tables) {
    Corollary2Result best;
    best.total = -1;
    for (auto& [n2, table] : fopt_tables) {
        int n1 = n - n2;
        if (n1 < 1) continue;
        Corollary2Result r = corollary2_optimize(n1, n2, table);
        if (r.total > best.total) best = r;
    }
    if (best.total < 0) throw std::runtime_error("corollary2_best_split: no admissible split");
    return best;
}

// Materializes a weight-symmetric assignment into an executable strategy,
// using the given codes (indexed by cardinality) for length n2.
inline FeedbackStrategy corollary2_strategy(const Corollary2Result& res,
                                            const std::map<long, NonadaptiveCode>& codes_by_m) {
    CodeFamily fam;
    fam.n1 = res.n1;
    fam.n2 = res.n2;
    fam.graph = ErrorGraph::z_channel();
    fam.codes.reserve(1u << res.n1);
    for (std::uint64_t u = 0; u < (1ull << res.n1); ++u) {
        int w = std::popcount(u);
        long m = res.Mw[static_cast<std::size_t>(w)];
        auto it = codes_by_m.find(m);
        if (it == codes_by_m.end())
            throw std::invalid_argument("corollary2_strategy: no code of cardinality " +
                                        std::to_string(m));
        fam.codes.push_back(it->second);
    }
    return assemble_one_feedback(fam);
}

// The explicit 96-message length-9 configuration: split (5, 4), weights 0-1
// carry {0000, 0011}, weights 2-3 carry {0000, 0011, 1100}, weights 4-5 carry
// {0000, 0011, 1100, 1111}.
inline FeedbackStrategy example96_strategy() {
    auto code = [](std::initializer_list<const char*> words) {
        std::vector<Word> centers;
        for (const char* w : words) centers.push_back(Word::from_string(w, 2));
        return NonadaptiveCode(4, 1, ErrorGraph::z_channel(), std::move(centers));
    };
    std::map<long, NonadaptiveCode> by_m{
        {2, code({"0000", "0011"})},
        {3, code({"0000", "0011", "1100"})},
        {4, code({"0000", "0011", "1100", "1111"})},
    };
    Corollary2Result res;
    res.n1 = 5;
    res.n2 = 4;
    res.Mw = {2, 2, 3, 3, 4, 4};
    res.total = 96;
    return corollary2_strategy(res, by_m);
}

}  // namespace fbc
