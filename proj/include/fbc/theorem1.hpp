#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbc/channel.hpp"
#include "fbc/code_search.hpp"
#include "fbc/strategy.hpp"

namespace fbc {

// Family of second-block codes indexed by the first-block word u.
struct CodeFamily {
    int n1 = 0;
    int n2 = 0;
    ErrorGraph graph;
    std::vector<NonadaptiveCode> codes;  // indexed by packed value of u, size q^n1

    void validate() const {
        if (codes.size() != Word::space_size(n1, graph.q))
            throw std::invalid_argument("CodeFamily: need one code per length-n1 word");
        for (const auto& c : codes)
            if (c.n != n2 || c.graph.q != graph.q)
                throw std::invalid_argument("CodeFamily: code length/alphabet mismatch");
    }
};

// Raised when the free-point budget of some received first block v cannot
// absorb the messages of its predecessors.
struct ConstraintViolation : std::runtime_error {
    Word vertex;
    explicit ConstraintViolation(const Word& v)
        : std::runtime_error("family constraint violated at v=" + v.str()), vertex(v) {}
};

// One-feedback strategy from a family of single-error-correcting codes.
// Messages are numbered by first-block word, then codeword index.  Free
// points of each C(v) are reserved for predecessors u in lexicographic
// order of u, then message index.
inline FeedbackStrategy assemble_one_feedback(const CodeFamily& family) {
    family.validate();
    const int q = family.graph.q;
    const std::uint64_t nu = Word::space_size(family.n1, q);

    std::vector<std::vector<Word>> free(nu);
    std::vector<long> msg_base(nu, 0);
    long M = 0;
    for (std::uint64_t u = 0; u < nu; ++u) {
        msg_base[u] = M;
        M += family.codes[u].size();
        free[u] = free_points(family.codes[u]);  // throws if clouds overlap
    }

    // Predecessors of v in the first-block error graph.
    std::vector<std::vector<std::uint64_t>> preds(nu);
    for (std::uint64_t u = 0; u < nu; ++u) {
        Word uw(family.n1, q, u);
        for (const Word& vw : error_ball(uw, family.graph, 1))
            if (vw.packed != u) preds[vw.packed].push_back(u);
    }
    for (auto& p : preds) std::sort(p.begin(), p.end());

    // Eq-(2) check and free-point reservation.
    std::vector<std::map<std::pair<std::uint64_t, long>, Word>> reserved(nu);
    for (std::uint64_t v = 0; v < nu; ++v) {
        long demand = 0;
        for (std::uint64_t u : preds[v]) demand += family.codes[u].size();
        if (demand > static_cast<long>(free[v].size()))
            throw ConstraintViolation(Word(family.n1, q, v));
        std::size_t next = 0;
        for (std::uint64_t u : preds[v])
            for (long j = 0; j < family.codes[u].size(); ++j)
                reserved[v][{u, j}] = free[v][next++];
    }

    FeedbackStrategy s;
    s.q = q;
    s.n = family.n1 + family.n2;
    s.graph = family.graph;
    s.block_lengths = {family.n1, family.n2};
    s.M = M;
    s.first_block.resize(static_cast<std::size_t>(M), Word(0, q, 0));
    s.stages.resize(1);

    for (std::uint64_t u = 0; u < nu; ++u) {
        Word uw(family.n1, q, u);
        const NonadaptiveCode& code = family.codes[u];
        for (long j = 0; j < code.size(); ++j) {
            long id = msg_base[u] + j;
            s.first_block[static_cast<std::size_t>(id)] = uw;
            s.stages[0][{uw, id}] = code.centers[static_cast<std::size_t>(j)];
            for (const Word& vw : error_ball(uw, family.graph, 1)) {
                if (vw.packed == u) continue;
                s.stages[0][{vw, id}] = reserved[vw.packed].at({u, j});
            }
        }
    }

    // Decoder: codeword clouds by received prefix, then the reserved free points.
    for (std::uint64_t v = 0; v < nu; ++v) {
        Word vw(family.n1, q, v);
        const NonadaptiveCode& code = family.codes[v];
        for (long j = 0; j < code.size(); ++j)
            for (const Word& w : code.cloud(j).members)
                s.decoder[vw.concat(w)] = msg_base[v] + j;
        for (std::uint64_t u : preds[v])
            for (long j = 0; j < family.codes[u].size(); ++j)
                s.decoder[vw.concat(reserved[v].at({u, j}))] = msg_base[u] + j;
    }
    s.validate();
    return s;
}

// ---- binary symmetric channel constructions -------------------------------

// Closed-form message count of the Hamming-code construction for the split
// n = n1 + n2, n2 = 2^k - 1:  2^{n1} * floor(2^{n2} / (n+1)).
inline unsigned long long corollary1_count(int n, int k) {
    int n2 = (1 << k) - 1;
    int n1 = n - n2;
    if (n1 < 0) throw std::invalid_argument("corollary1_count: split exceeds n");
    return (1ull << n1) * ((1ull << n2) / static_cast<unsigned long long>(n + 1));
}

// Best closed-form value over all admissible k.  The degenerate split n1 = 0
// (a bare Hamming code, no feedback needed) is admitted when n = 2^k - 1.
inline unsigned long long corollary1_best_count(int n) {
    unsigned long long best = 0;
    for (int k = 1; (1 << k) - 1 <= n; ++k)
        best = std::max(best, corollary1_count(n, k));
    return best;
}

namespace detail {

inline NonadaptiveCode hamming_subcode(int k, long count) {
    auto masks = hamming_masks(k);
    if (count > static_cast<long>(masks.size()))
        throw std::invalid_argument("hamming_subcode: not enough codewords");
    int n2 = (1 << k) - 1;
    std::vector<Word> centers;
    for (long i = 0; i < count; ++i) centers.push_back(Word(n2, 2, masks[static_cast<std::size_t>(i)]));
    return NonadaptiveCode(n2, 1, ErrorGraph::bsc(), std::move(centers));
}

}  // namespace detail

// The Hamming code of length 2^k - 1 with x codewords deleted, used at every
// first-block vertex.  x = ceil(n1 2^{n2-k} / (n1 + 2^k)).
inline FeedbackStrategy corollary1_strategy(int n, int k) {
    int n2 = (1 << k) - 1;
    int n1 = n - n2;
    if (n1 < 1) throw std::invalid_argument("corollary1_strategy: need n2 <= n - 1");
    long full = 1L << (n2 - k);
    long x = static_cast<long>((static_cast<long long>(n1) * full + n1 + (1 << k) - 1) /
                               (n1 + (1 << k)));
    long keep = full - x;
    CodeFamily fam;
    fam.n1 = n1;
    fam.n2 = n2;
    fam.graph = ErrorGraph::bsc();
    fam.codes.assign(1u << n1, detail::hamming_subcode(k, keep));
    FeedbackStrategy s = assemble_one_feedback(fam);
    if (static_cast<unsigned long long>(s.M) != corollary1_count(n, k))
        throw std::logic_error("corollary1_strategy: count mismatch with closed form");
    return s;
}

// Hamming-subcode family whose cardinality depends only on the parity of the
// first block: even-parity vertices get M_even codewords, odd ones M_odd.
// Subsumes the identical-codes construction (M_even = M_odd).
inline FeedbackStrategy bsc_parity_strategy(int n, int k, long m_even, long m_odd) {
    int n2 = (1 << k) - 1;
    int n1 = n - n2;
    if (n1 < 1) throw std::invalid_argument("bsc_parity_strategy: need n2 <= n - 1");
    NonadaptiveCode even = detail::hamming_subcode(k, m_even);
    NonadaptiveCode odd = detail::hamming_subcode(k, m_odd);
    CodeFamily fam;
    fam.n1 = n1;
    fam.n2 = n2;
    fam.graph = ErrorGraph::bsc();
    fam.codes.reserve(1u << n1);
    for (std::uint64_t u = 0; u < (1ull << n1); ++u)
        fam.codes.push_back(std::popcount(u) % 2 == 0 ? even : odd);
    return assemble_one_feedback(fam);
}

// Best parity-family parameters for a given split: maximize the message count
// subject to the two free-point constraints
//   n1 * M_odd  <= 2^{n2} - (n2+1) M_even
//   n1 * M_even <= 2^{n2} - (n2+1) M_odd
struct ParityChoice {
    long m_even = 0, m_odd = 0;
    unsigned long long total = 0;
};

inline ParityChoice best_parity_choice(int n, int k) {
    int n2 = (1 << k) - 1;
    int n1 = n - n2;
    long cap = 1L << (n2 - k);
    long space = 1L << n2;
    ParityChoice best;
    for (long me = 0; me <= cap; ++me)
        for (long mo = 0; mo <= cap; ++mo) {
            if (static_cast<long long>(n1) * mo > space - static_cast<long long>(n2 + 1) * me)
                continue;
            if (static_cast<long long>(n1) * me > space - static_cast<long long>(n2 + 1) * mo)
                continue;
            unsigned long long half = 1ull << (n1 - 1);
            unsigned long long total = half * static_cast<unsigned long long>(me) +
                                       half * static_cast<unsigned long long>(mo);
            if (total > best.total) best = {me, mo, total};
        }
    return best;
}

// Best known one-feedback strategy for the binary symmetric channel,
// 3 <= n <= 16.  Parity families over every Hamming split cover all the
// lengths needed by the two-feedback construction (including 50 messages at
// n = 9 and 304 at n = 12, where identical codes fall short).
inline FeedbackStrategy best_one_feedback(int n) {
    if (n < 3 || n > 16) throw std::invalid_argument("best_one_feedback: need 3 <= n <= 16");
    int best_k = -1;
    ParityChoice best;
    for (int k = 1; (1 << k) - 1 <= n - 1; ++k) {
        ParityChoice c = best_parity_choice(n, k);
        if (c.total > best.total) {
            best = c;
            best_k = k;
        }
    }
    if (best_k < 0) throw std::logic_error("best_one_feedback: no admissible split");
    return bsc_parity_strategy(n, best_k, best.m_even, best.m_odd);
}

// ---- Z-channel: the 53-message length-8 family ----------------------------

// n1 = 6, n2 = 2.  The all-ones vertex carries {00, 11}; twelve selected
// vertices carry the empty code; every other vertex carries {00}.
inline CodeFamily example53_family() {
    const int q = 2;
    NonadaptiveCode two(2, 1, ErrorGraph::z_channel(),
                        {Word::from_string("00", q), Word::from_string("11", q)});
    NonadaptiveCode one(2, 1, ErrorGraph::z_channel(), {Word::from_string("00", q)});
    NonadaptiveCode empty(2, 1, ErrorGraph::z_channel(), {});
    CodeFamily fam;
    fam.n1 = 6;
    fam.n2 = 2;
    fam.graph = ErrorGraph::z_channel();
    fam.codes.assign(64, one);
    fam.codes[Word::from_string("111111", q).packed] = two;
    for (const char* v : {"111000", "001110", "010101", "100011", "100100", "010010", "001001",
                          "110000", "010100", "001000", "000010", "000001"})
        fam.codes[Word::from_string(v, q).packed] = empty;
    return fam;
}

}  // namespace fbc
