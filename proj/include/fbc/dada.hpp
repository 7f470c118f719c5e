#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "fbc/theorem1.hpp"
#include "fbc/verify.hpp"

namespace fbc {

// U(n) = 2 floor(2^n / (2(n+1))), r(n) = 2^n - (n+1) U(n).
inline unsigned long long dada_u(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("dada_u: need 1 <= n <= 62");
    return 2 * ((1ull << n) / (2ull * static_cast<unsigned long long>(n + 1)));
}

inline unsigned long long dada_r(int n) {
    return (1ull << n) - static_cast<unsigned long long>(n + 1) * dada_u(n);
}

// r(n) = 2^n mod 2(n+1); works for any n via modular exponentiation, which is
// what decides the rare U(n)+1 lengths far beyond 64-bit range.
inline unsigned long long dada_r_mod(unsigned long long n) {
    unsigned long long mod = 2 * (n + 1);
    unsigned long long result = 1 % mod, base = 2 % mod, e = n;
    while (e) {
        if (e & 1) result = (result * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return result;
}

inline bool m_ad_is_plus_one(unsigned long long n) { return dada_r_mod(n) >= 2 * n; }

// Maximum messages with complete feedback and a single symmetric error.
inline unsigned long long m_ad(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("m_ad: need 1 <= n <= 62");
    return dada_u(n) + (dada_r(n) >= 2ull * static_cast<unsigned long long>(n) ? 1 : 0);
}

// Message count of the doubled-and-deleted strategy on length n built from a
// strategy with m_prev messages on length n-1.
inline unsigned long long theorem2_count(unsigned long long m_prev, int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("theorem2_count: need 1 <= n <= 62");
    unsigned __int128 lhs = static_cast<unsigned __int128>(2) * m_prev *
                            static_cast<unsigned __int128>(n + 1);
    if (lhs <= static_cast<unsigned __int128>(1ull << n)) return 2 * m_prev;
    return dada_u(n) + (dada_r(n) >= 2ull * static_cast<unsigned long long>(n) ? 1 : 0);
}

// ---- DADA: double the clouds, delete until the space fits -----------------

// Lifts a single-error strategy on length n-1 (binary symmetric channel) to
// length n with one extra feedback placed after the first position.  The
// incomplete clouds are the two prefixed copies of each input cloud; each is
// completed by one free point of the opposite half, eliminations run in
// increasing root order, and free points are consumed in increasing order.
inline FeedbackStrategy dada_lift(const FeedbackStrategy& inner) {
    if (inner.q != 2) throw std::invalid_argument("dada_lift: binary strategies only");
    VerificationReport census = verify_strategy(inner, ErrorGraph::bsc());
    if (!census.pass()) throw std::invalid_argument("dada_lift: input strategy is not valid");
    const int ell = inner.n;
    const int n = ell + 1;

    struct Item {
        int c;  // prefix bit
        long m;
        Word root;
        bool complete = false;
        bool eliminated = false;
        std::optional<Word> completion;
    };
    std::vector<Item> items;
    for (int c = 0; c <= 1; ++c)
        for (long m = 0; m < inner.M; ++m)
            items.push_back(
                {c, m, Word(1, 2, static_cast<std::uint64_t>(c)).concat(
                           census.roots[static_cast<std::size_t>(m)])});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.root < b.root; });

    // doubled free points, pooled by first bit
    std::set<Word> pool[2];
    {
        std::set<Word> covered;
        for (const auto& cloud : census.clouds) covered.insert(cloud.begin(), cloud.end());
        for (std::uint64_t v = 0; v < (1ull << ell); ++v) {
            Word f(ell, 2, v);
            if (covered.count(f)) continue;
            for (int c = 0; c <= 1; ++c)
                pool[c].insert(Word(1, 2, static_cast<std::uint64_t>(c)).concat(f));
        }
    }

    auto completion_pass = [&]() {
        for (auto& it : items) {
            if (it.complete || it.eliminated) continue;
            auto& p = pool[1 - it.c];
            if (p.empty()) continue;
            it.completion = *p.begin();
            p.erase(p.begin());
            it.complete = true;
        }
    };
    auto first_incomplete = [&](int c) -> Item* {
        for (auto& it : items)
            if (it.c == c && !it.complete && !it.eliminated) return &it;
        return nullptr;
    };

    completion_pass();
    bool last_round_unused = false;
    while (true) {
        Item* i0 = first_incomplete(0);
        Item* i1 = first_incomplete(1);
        if (!i0 && !i1) break;
        if (!i0 || !i1)
            throw std::logic_error("dada_lift: halves lost symmetry");
        for (Item* it : {i0, i1}) {
            it->eliminated = true;
            for (const Word& w : census.clouds[static_cast<std::size_t>(it->m)])
                pool[it->c].insert(Word(1, 2, static_cast<std::uint64_t>(it->c)).concat(w));
        }
        std::size_t before0 = pool[0].size(), before1 = pool[1].size();
        completion_pass();
        last_round_unused = !first_incomplete(0) && !first_incomplete(1) &&
                            pool[0].size() == before0 && pool[1].size() == before1;
    }
    // Terminal fix-up: if the final elimination's 2n points went unused,
    // reconstruct its prefix-0 cloud and complete it with one free point.
    if (last_round_unused && pool[0].size() + pool[1].size() == 2 * static_cast<std::size_t>(n)) {
        Item* back = nullptr;
        for (auto& it : items)
            if (it.c == 0 && it.eliminated) back = &it;  // last eliminated has the largest root
        if (back) {
            for (const Word& w : census.clouds[static_cast<std::size_t>(back->m)])
                pool[0].erase(Word(1, 2, 0).concat(w));
            back->eliminated = false;
            back->completion = *pool[1].begin();
            pool[1].erase(pool[1].begin());
            back->complete = true;
        }
    }

    // Assemble the lifted strategy over the surviving clouds.
    FeedbackStrategy s;
    s.q = 2;
    s.n = n;
    s.graph = ErrorGraph::bsc();
    s.block_lengths.push_back(1);
    for (int b : inner.block_lengths) s.block_lengths.push_back(b);
    s.stages.resize(inner.stages.size() + 1);

    for (const auto& it : items) {
        if (it.eliminated) continue;
        if (!it.complete || !it.completion)
            throw std::logic_error("dada_lift: surviving cloud lacks a completion point");
        long id = s.M++;
        Word cbit(1, 2, static_cast<std::uint64_t>(it.c));
        Word wrong(1, 2, static_cast<std::uint64_t>(1 - it.c));
        Word ftail = it.completion->suffix(ell);
        s.first_block.push_back(cbit);
        // stage 2: inner first block, or the committed completion suffix
        s.stages[0][{cbit, id}] = inner.first_block[static_cast<std::size_t>(it.m)];
        s.stages[0][{wrong, id}] = ftail.prefix(inner.block_lengths[0]);
        int acc = inner.block_lengths[0];
        for (std::size_t st = 0; st + 1 < inner.block_lengths.size(); ++st) {
            for (const auto& [key, block] : inner.stages[st]) {
                const auto& [prefix, m] = key;
                if (m != it.m) continue;
                s.stages[st + 1][{cbit.concat(prefix), id}] = block;
            }
            s.stages[st + 1][{wrong.concat(ftail.prefix(acc)), id}] =
                ftail.suffix(ell - acc).prefix(inner.block_lengths[st + 1]);
            acc += inner.block_lengths[st + 1];
        }
        for (const Word& w : census.clouds[static_cast<std::size_t>(it.m)])
            s.decoder[cbit.concat(w)] = id;
        s.decoder[*it.completion] = id;
    }
    s.validate();
    return s;
}

// Two feedbacks reach the complete-feedback optimum: DADA applied to the best
// one-feedback strategy on length n-1.  For n <= 9 one feedback already
// attains m_ad(n) and that strategy is returned directly.
inline FeedbackStrategy build_two_feedback(int n) {
    if (n < 3 || n > 16) throw std::invalid_argument("build_two_feedback: need 3 <= n <= 16");
    if (n <= 9) return best_one_feedback(n);
    FeedbackStrategy inner = best_one_feedback(n - 1);
    FeedbackStrategy lifted = dada_lift(inner);
    if (static_cast<unsigned long long>(lifted.M) != m_ad(n))
        throw std::logic_error("build_two_feedback: lifted count misses the adaptive optimum");
    return lifted;
}

}  // namespace fbc
